#include "diffhier/chains.hpp"

#include <algorithm>
#include <numeric>

#include "diffhier/error.hpp"

namespace diffhier {

namespace {

void require_partial_order(const Monoid& monoid, const OrderRelation& order, const ElementSet& target) {
    if (order.size() != monoid.size() || target.universe() != monoid.size())
        throw InvalidArgument("order or target set does not match the monoid");
    if (!order.is_partial_order())
        throw InvalidArgument("relation is not a partial order");
}

// Elements sorted so that every element comes after all those strictly below it.
std::vector<Element> topological(const OrderRelation& order) {
    const std::size_t n = order.size();
    std::vector<std::size_t> below(n, 0);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (order.strictly_less(y, x))
                ++below[x];
    std::vector<Element> sorted(n);
    std::iota(sorted.begin(), sorted.end(), Element{0});
    std::stable_sort(sorted.begin(), sorted.end(), [&](Element a, Element b) { return below[a] < below[b]; });
    return sorted;
}

} // namespace

bool is_alternating_chain(const AlternatingChain& chain, const OrderRelation& order) {
    const auto& e = chain.elements;
    if (e.empty())
        return true;
    if (!chain.target.contains(e.front()))
        return false;
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (!order.strictly_less(e[i - 1], e[i]))
            return false;
        if (chain.target.contains(e[i]) == chain.target.contains(e[i - 1]))
            return false;
    }
    return true;
}

std::vector<std::size_t> chain_lengths(const Monoid& monoid, const OrderRelation& order,
                                       const ElementSet& target) {
    require_partial_order(monoid, order, target);
    std::vector<std::size_t> length(monoid.size(), 0);
    for (Element s : topological(order)) {
        std::size_t best = target.contains(s) ? 1 : 0;
        for (Element t = 0; t < monoid.size(); ++t)
            if (length[t] > 0 && order.strictly_less(t, s) && target.contains(t) != target.contains(s))
                best = std::max(best, length[t] + 1);
        length[s] = best;
    }
    return length;
}

std::size_t max_chain_length(const Monoid& monoid, const OrderRelation& order, const ElementSet& target) {
    std::vector<std::size_t> length = chain_lengths(monoid, order, target);
    return length.empty() ? 0 : *std::max_element(length.begin(), length.end());
}

AlternatingChain longest_chain(const Monoid& monoid, const OrderRelation& order, const ElementSet& target) {
    std::vector<std::size_t> length = chain_lengths(monoid, order, target);
    AlternatingChain chain{{}, target};
    if (length.empty())
        return chain;
    auto top = std::max_element(length.begin(), length.end());
    if (*top == 0)
        return chain;
    Element s = static_cast<Element>(top - length.begin());
    chain.elements.push_back(s);
    while (length[s] > 1) {
        for (Element t = 0; t < monoid.size(); ++t) {
            if (length[t] + 1 == length[s] && order.strictly_less(t, s) &&
                target.contains(t) != target.contains(s)) {
                s = t;
                break;
            }
        }
        chain.elements.push_back(s);
    }
    std::reverse(chain.elements.begin(), chain.elements.end());
    return chain;
}

std::vector<UpperSet> chain_levels(const Monoid& monoid, const OrderRelation& order,
                                   const ElementSet& target) {
    std::vector<std::size_t> length = chain_lengths(monoid, order, target);
    std::size_t top = length.empty() ? 0 : *std::max_element(length.begin(), length.end());
    std::vector<UpperSet> levels;
    for (std::size_t k = 1; k <= top; ++k) {
        ElementSet u(monoid.size());
        for (Element s = 0; s < monoid.size(); ++s)
            if (length[s] >= k)
                u.insert(s);
        levels.emplace_back(order, std::move(u));
    }
    return levels;
}

DifferenceChain chain_decomposition(const Stamp& stamp, const OrderRelation& order, const ElementSet& target) {
    if (!order.is_stable(stamp.monoid()))
        throw InvalidArgument("order is not compatible with the product");
    std::vector<Dfa> terms;
    for (const UpperSet& u : chain_levels(stamp.monoid(), order, target))
        terms.push_back(preimage(stamp, u.members()));
    return DifferenceChain(stamp.alphabet(), std::move(terms));
}

std::size_t cut_of(const std::vector<bool>& memberships) {
    std::size_t k = 0;
    while (k < memberships.size() && memberships[k])
        ++k;
    for (std::size_t i = k; i < memberships.size(); ++i)
        if (memberships[i])
            throw InvalidArgument("memberships are not monotone; the languages are not nested");
    return k;
}

OrderRelation product_order(const ProductStamp& product, const std::vector<OrderRelation>& orders) {
    const std::size_t n = product.stamp.monoid().size();
    std::vector<bool> leq(n * n, true);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (std::size_t i = 0; i < orders.size(); ++i) {
                if (!orders[i].leq(product.coordinates[x][i], product.coordinates[y][i])) {
                    leq[x * n + y] = false;
                    break;
                }
            }
        }
    }
    return OrderRelation(n, std::move(leq));
}

CutStamp cut_stamp(const DifferenceChain& chain, std::size_t cap) {
    std::vector<Stamp> stamps;
    std::vector<ElementSet> images;
    std::vector<OrderRelation> orders;
    for (const Dfa& term : chain.terms()) {
        stamps.push_back(syntactic_stamp(term, cap));
        images.push_back(syntactic_image(stamps.back(), term));
        orders.push_back(syntactic_order(stamps.back().monoid(), images.back()));
    }
    if (stamps.empty()) {
        // Trivial monoid over the alphabet: every word has cut 0.
        Monoid trivial(1, {0}, 0, {""});
        Stamp stamp(trivial, chain.alphabet(), std::vector<Element>(chain.alphabet().size(), 0));
        return CutStamp{ProductStamp{stamp, {{}}}, OrderRelation::equality(1), {0}, ElementSet(1)};
    }
    ProductStamp product = restricted_product(stamps, cap);
    OrderRelation order = product_order(product, orders);
    const std::size_t n = product.stamp.monoid().size();
    std::vector<std::size_t> cuts(n);
    ElementSet odd(n);
    for (Element x = 0; x < n; ++x) {
        std::vector<bool> member(stamps.size());
        for (std::size_t i = 0; i < stamps.size(); ++i)
            member[i] = images[i].contains(product.coordinates[x][i]);
        cuts[x] = cut_of(member);
        if (cuts[x] % 2 == 1)
            odd.insert(x);
    }
    return CutStamp{std::move(product), std::move(order), std::move(cuts), std::move(odd)};
}

std::optional<OrderRelation> least_stable_order(const Monoid& monoid,
                                                const std::vector<std::pair<Element, Element>>& pairs) {
    const std::size_t n = monoid.size();
    std::vector<bool> leq(n * n, false);
    std::vector<std::pair<Element, Element>> work;
    auto add = [&](Element x, Element y) {
        if (!leq[x * n + y]) {
            leq[x * n + y] = true;
            work.emplace_back(x, y);
        }
    };
    for (Element x = 0; x < n; ++x)
        add(x, x);
    for (auto [x, y] : pairs)
        add(x, y);
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (Element z = 0; z < n; ++z) {
            add(monoid.multiply(z, x), monoid.multiply(z, y));
            add(monoid.multiply(x, z), monoid.multiply(y, z));
            if (leq[z * n + x])
                add(z, y);
            if (leq[y * n + z])
                add(x, z);
        }
    }
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
            if (leq[x * n + y] && leq[y * n + x])
                return std::nullopt;
    return OrderRelation(n, std::move(leq));
}

namespace {

struct StableSearch {
    const Monoid& monoid;
    const ElementSet& target;
    std::vector<Element> current;
    std::vector<std::pair<Element, Element>> pairs;
    StableChainSearch best;

    void extend(const OrderRelation& order) {
        if (current.size() > best.length) {
            best.length = current.size();
            best.chain = AlternatingChain{current, target};
            best.order = order;
        }
        const Element last = current.back();
        for (Element next = 0; next < monoid.size(); ++next) {
            if (target.contains(next) == target.contains(last) || order.leq(next, last))
                continue;
            pairs.emplace_back(last, next);
            if (auto refined = least_stable_order(monoid, pairs)) {
                current.push_back(next);
                extend(*refined);
                current.pop_back();
            }
            pairs.pop_back();
        }
    }
};

} // namespace

StableChainSearch max_chain_over_stable_orders(const Monoid& monoid, const ElementSet& target,
                                               std::size_t size_cap) {
    if (monoid.size() > size_cap)
        throw CapExceeded(size_cap);
    if (target.universe() != monoid.size())
        throw InvalidArgument("target set does not match the monoid");
    StableSearch search{monoid, target, {}, {}, {}};
    const OrderRelation equality = OrderRelation::equality(monoid.size());
    for (Element start : target.members()) {
        search.current = {start};
        search.extend(equality);
    }
    if (search.best.length == 0)
        search.best.chain.target = target;
    return search.best;
}

} // namespace diffhier
