#ifndef DIFFHIER_CHAINS_HPP
#define DIFFHIER_CHAINS_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "diffhier/hierarchy.hpp"
#include "diffhier/monoid.hpp"
#include "diffhier/syntactic.hpp"

namespace diffhier {

// s_0 < s_1 < ... in some order, with s_0 ∈ P and memberships alternating.
struct AlternatingChain {
    std::vector<Element> elements;
    ElementSet target;
};

bool is_alternating_chain(const AlternatingChain& chain, const OrderRelation& order);

// m(P, s) for every s: the length of the longest P-chain ending with s
// (0 when none does). Throws InvalidArgument unless `order` is a partial
// order on the monoid.
std::vector<std::size_t> chain_lengths(const Monoid& monoid, const OrderRelation& order,
                                       const ElementSet& target);
// m(P), 0 when P is empty.
std::size_t max_chain_length(const Monoid& monoid, const OrderRelation& order, const ElementSet& target);
AlternatingChain longest_chain(const Monoid& monoid, const OrderRelation& order, const ElementSet& target);

// U_k = {s : m(P, s) >= k} for k = 1 .. m(P); P = U1 - U2 + ... ± Um.
std::vector<UpperSet> chain_levels(const Monoid& monoid, const OrderRelation& order,
                                   const ElementSet& target);

// Preimages of the chain levels. Throws InvalidArgument unless `order` is
// a stable partial order.
DifferenceChain chain_decomposition(const Stamp& stamp, const OrderRelation& order,
                                    const ElementSet& target);

// Number of leading trues; throws InvalidArgument if a true follows a false.
std::size_t cut_of(const std::vector<bool>& memberships);

// Componentwise order on a restricted product.
OrderRelation product_order(const ProductStamp& product, const std::vector<OrderRelation>& orders);

// Restricted product of the syntactic ordered stamps of the terms of a
// chain, with each element's cut (how many leading terms its coordinates
// lie in) and the set of elements of odd cut, which recognises the value
// of the chain.
struct CutStamp {
    ProductStamp product;
    OrderRelation order;
    std::vector<std::size_t> cuts;
    ElementSet odd_cut;
};
CutStamp cut_stamp(const DifferenceChain& chain, std::size_t cap = default_element_cap());

// Least stable preorder containing the given pairs (x <= y); nullopt when
// it is not antisymmetric, i.e. no stable partial order contains them.
std::optional<OrderRelation> least_stable_order(const Monoid& monoid,
                                                const std::vector<std::pair<Element, Element>>& pairs);

// Maximum of m(P) over all stable partial orders on the monoid, with a
// realising order and chain. A chain is realisable iff the least stable
// preorder making it increasing is antisymmetric, so the search runs over
// alternating sequences rather than over orders. Exponential; refuses
// monoids larger than `size_cap`.
struct StableChainSearch {
    std::size_t length = 0;
    AlternatingChain chain;
    std::optional<OrderRelation> order;
};
StableChainSearch max_chain_over_stable_orders(const Monoid& monoid, const ElementSet& target,
                                               std::size_t size_cap = 10);

} // namespace diffhier

#endif
