#ifndef DIFFHIER_SYNTACTIC_HPP
#define DIFFHIER_SYNTACTIC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "diffhier/dfa.hpp"
#include "diffhier/monoid.hpp"

namespace diffhier {

// Element cap for monoid constructions: DH_ELEMENT_CAP when set to a
// positive integer, 1'000'000 otherwise.
std::size_t default_element_cap();

// Transition monoid of a (possibly partial) automaton. Elements are the
// distinct partial maps on states induced by words, numbered in order of
// first appearance in a BFS over products of generators (letters in
// alphabet order); each element is named by its shortlex-least word. For a
// partial automaton the everywhere-undefined map, when generated, is the
// zero. On a minimal complete automaton this is the syntactic stamp.
Stamp transition_monoid(const Dfa& dfa, std::size_t cap = default_element_cap());

// transition_monoid(minimize(dfa)).
Stamp syntactic_stamp(const Dfa& dfa, std::size_t cap = default_element_cap());

// P = φ(L). Throws InvalidArgument when the stamp does not recognise L.
ElementSet syntactic_image(const Stamp& stamp, const Dfa& language);

// u <= v iff for all x, y: xuy ∈ P implies xvy ∈ P.
OrderRelation syntactic_order(const Monoid& monoid, const ElementSet& image);

// Unique idempotent among x, x^2, x^3, ...
Element omega_power(const Monoid& monoid, Element x);
ElementSet idempotents(const Monoid& monoid);

// s <=_J t iff s ∈ MtM.
OrderRelation j_order(const Monoid& monoid);
// J-classes listed from the top down: by height in the strict J-order,
// ties broken by smallest element.
std::vector<std::vector<Element>> j_classes(const Monoid& monoid);
// Number of J-classes on the longest strictly descending chain; the
// trivial monoid has depth 1.
std::size_t j_depth(const Monoid& monoid);
bool is_j_trivial(const Monoid& monoid);

// Restricted direct product of stamps over one alphabet, together with the
// coordinates of each element in the factors.
struct ProductStamp {
    Stamp stamp;
    std::vector<std::vector<Element>> coordinates; // coordinates[x][i] lives in factor i
};

ProductStamp restricted_product(std::span<const Stamp> factors,
                                std::size_t cap = default_element_cap());
Stamp restricted_product(const Stamp& first, const Stamp& second,
                         std::size_t cap = default_element_cap());

// Minimal automaton of φ^{-1}(Q).
Dfa preimage(const Stamp& stamp, const ElementSet& target);

// Syntactic characterisations evaluated on the syntactic ordered monoid.
struct PredicateReport {
    bool shuffle_ideal = false;          // 1 <= x for all x
    bool piecewise_testable = false;     // J-trivial
    bool idempotent_commutative = false; // xx = x and xy = yx
    bool copolg = false;                 // x^ω <= 1 for all x
    bool bpolg = false;                  // efe = e implies ef = e = fe (idempotents)
};

// `stamp` should be the syntactic stamp of the language and `image` its
// syntactic image; the order used is syntactic_order(stamp, image).
PredicateReport predicates(const Stamp& stamp, const ElementSet& image);

} // namespace diffhier

#endif
