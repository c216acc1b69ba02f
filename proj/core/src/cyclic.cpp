#include "diffhier/cyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "diffhier/automata.hpp"

namespace diffhier {

Dfa stab_subset(const Dfa& dfa, const std::vector<State>& subset) {
    if (subset.empty())
        throw InvalidArgument("stabilised subset must be non-empty");
    std::vector<State> start = subset;
    for (State q : start)
        if (q < 0 || static_cast<std::size_t>(q) >= dfa.num_states())
            throw InvalidArgument("state " + std::to_string(q) + " does not exist");
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());

    const std::size_t k = dfa.alphabet().size();
    std::map<std::vector<State>, State> index{{start, 0}};
    std::vector<std::vector<State>> sets{start};
    std::vector<State> delta;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            std::vector<State> image;
            bool alive = true;
            for (State q : sets[i]) {
                State r = dfa.next(q, a);
                if (r == kNoState) {
                    alive = false;
                    break;
                }
                image.push_back(r);
            }
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            // Images never grow, so a set smaller than the start never returns to it.
            if (!alive || image.size() < start.size()) {
                delta.push_back(kNoState);
                continue;
            }
            auto [it, inserted] = index.emplace(image, static_cast<State>(sets.size()));
            if (inserted)
                sets.push_back(image);
            delta.push_back(it->second);
        }
    }
    std::vector<bool> finals(sets.size(), false);
    finals[0] = true;
    return minimize(Dfa(dfa.alphabet(), sets.size(), 0, std::move(finals), std::move(delta)));
}

Dfa stab_automaton(const Dfa& dfa, std::size_t cap) {
    Stamp stamp = transition_monoid(dfa, cap);
    const Monoid& m = stamp.monoid();
    std::optional<Element> empty_map;
    for (Element x = 0; x < m.size() && !empty_map; ++x) {
        const Word& w = m.names()[x];
        bool dead = true;
        for (State q = 0; static_cast<std::size_t>(q) < dfa.num_states() && dead; ++q)
            dead = dfa.run(q, w) == kNoState;
        if (dead)
            empty_map = x;
    }
    if (!empty_map)
        return universal_language(dfa.alphabet());
    ElementSet alive(m.size());
    for (Element x = 0; x < m.size(); ++x)
        if (omega_power(m, x) != *empty_map)
            alive.insert(x);
    return preimage(stamp, alive);
}

namespace {

PropertyCheck failure(const Monoid& m, std::string condition, std::vector<Element> elements, std::string detail) {
    PropertyCheck check;
    check.holds = false;
    check.condition = std::move(condition);
    for (Element x : elements)
        check.witness.push_back(m.name(x));
    check.detail = std::move(detail);
    return check;
}

std::string in_p(bool member) {
    return member ? " ∈ P" : " ∉ P";
}

} // namespace

PropertyCheck strongly_cyclic_check(const Monoid& m, const ElementSet& target) {
    if (target.count() == m.size())
        return {};
    for (Element x = 0; x < m.size(); ++x) {
        const Element e = omega_power(m, x);
        if (target.contains(e) != target.contains(x))
            return failure(m, "S2", {x, e},
                           "x = " + m.name(x) + in_p(target.contains(x)) + " but x^ω = " + m.name(e) +
                               in_p(target.contains(e)));
    }
    for (Element e : idempotents(m).members()) {
        if (target.contains(e))
            continue;
        for (Element u = 0; u < m.size(); ++u) {
            const Element ue = m.multiply(u, e);
            for (Element v = 0; v < m.size(); ++v) {
                if (target.contains(m.multiply(ue, v)))
                    return failure(m, "S1", {u, e, v},
                                   "u x^ω v ∈ P but x^ω = " + m.name(e) + " ∉ P (u = " + m.name(u) +
                                       ", v = " + m.name(v) + ")");
            }
        }
    }
    return {};
}

PropertyCheck cyclic_check(const Monoid& m, const ElementSet& target) {
    for (Element u = 0; u < m.size(); ++u) {
        // Powers of u run through at most |M| distinct values before cycling.
        Element p = u;
        for (std::size_t n = 1; n <= m.size(); ++n) {
            if (target.contains(p) != target.contains(u))
                return failure(m, "C1", {u, p},
                               "u = " + m.name(u) + in_p(target.contains(u)) + " but u^" + std::to_string(n) +
                                   in_p(target.contains(p)));
            p = m.multiply(p, u);
        }
    }
    for (Element u = 0; u < m.size(); ++u) {
        for (Element v = 0; v < m.size(); ++v) {
            const bool uv = target.contains(m.multiply(u, v));
            if (uv != target.contains(m.multiply(v, u)))
                return failure(m, "C2", {u, v},
                               "uv" + in_p(uv) + " but vu" + in_p(!uv) + " (u = " + m.name(u) +
                                   ", v = " + m.name(v) + ")");
        }
    }
    return {};
}

PropertyCheck is_strongly_cyclic(const Dfa& language) {
    Stamp stamp = syntactic_stamp(language);
    return strongly_cyclic_check(stamp.monoid(), syntactic_image(stamp, language));
}

PropertyCheck is_cyclic(const Dfa& language) {
    Stamp stamp = syntactic_stamp(language);
    return cyclic_check(stamp.monoid(), syntactic_image(stamp, language));
}

StronglyCyclicHull least_strongly_cyclic(const Dfa& language) {
    Stamp stamp = syntactic_stamp(language);
    const Monoid& m = stamp.monoid();
    const ElementSet image = syntactic_image(stamp, language);
    if (!cyclic_check(m, image).holds)
        throw NotCyclic();
    const std::optional<Element> zero = m.zero();
    if (!zero)
        return {universal_language(language.alphabet()), true};
    if (image.contains(*zero))
        return {universal_language(language.alphabet()), false};
    ElementSet hull(m.size());
    for (Element x = 0; x < m.size(); ++x)
        if (omega_power(m, x) != *zero)
            hull.insert(x);
    return {preimage(stamp, hull), false};
}

bool is_idempotent_chain(const Monoid& m, const IdempotentChain& chain) {
    const auto& e = chain.elements;
    if (e.empty())
        return true;
    if (chain.target.universe() != m.size() || !chain.target.contains(e.front()))
        return false;
    const OrderRelation j = j_order(m);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= m.size() || !m.is_idempotent(e[i]))
            return false;
        if (i > 0 && (!j.leq(e[i - 1], e[i]) || chain.target.contains(e[i]) == chain.target.contains(e[i - 1])))
            return false;
    }
    return true;
}

EllResult ell(const Stamp& stamp, const ElementSet& target) {
    const Monoid& m = stamp.monoid();
    if (target.universe() != m.size())
        throw InvalidArgument("target set does not match the monoid");
    const OrderRelation j = j_order(m);
    const std::vector<Element> idem = idempotents(m).members();

    EllResult result;
    result.witness.target = target;
    result.per_element.assign(m.size(), 0);

    bool bounded = true;
    for (Element e : idem)
        for (Element f : idem)
            if (e != f && j.leq(e, f) && j.leq(f, e) && target.contains(e) != target.contains(f))
                bounded = false;

    // Bottom-up over the strict J-order.
    std::vector<std::size_t> below(m.size(), 0);
    for (Element e : idem)
        for (Element f : idem)
            if (j.strictly_less(f, e))
                ++below[e];
    std::vector<Element> order = idem;
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return below[a] < below[b]; });

    auto& len = result.per_element;
    for (Element e : order) {
        std::size_t best = target.contains(e) ? 1 : 0;
        for (Element f : idem)
            if (len[f] > 0 && j.strictly_less(f, e) && target.contains(f) != target.contains(e))
                best = std::max(best, len[f] + 1);
        len[e] = best;
    }

    std::size_t top = 0;
    Element at = 0;
    for (Element e : idem) {
        if (len[e] > top) {
            top = len[e];
            at = e;
        }
    }
    if (top > 0) {
        std::vector<Element> chain{at};
        while (len[at] > 1) {
            for (Element f : idem) {
                if (len[f] + 1 == len[at] && j.strictly_less(f, at) && target.contains(f) != target.contains(at)) {
                    at = f;
                    break;
                }
            }
            chain.push_back(at);
        }
        std::reverse(chain.begin(), chain.end());
        result.witness.elements = std::move(chain);
    }
    if (bounded)
        result.value = top;
    return result;
}

CyclicLevelReport cyclic_level(const Dfa& language) {
    Stamp stamp = syntactic_stamp(language);
    const Monoid& m = stamp.monoid();
    const ElementSet image = syntactic_image(stamp, language);
    if (!cyclic_check(m, image).holds)
        throw NotCyclic();

    EllResult level = ell(stamp, image);
    if (!level.value)
        throw Error("alternating idempotent chains are unbounded on a cyclic language");

    CyclicLevelReport report(DifferenceChain(language.alphabet(), {}, "strongly-cyclic"));
    report.strongly_cyclic = strongly_cyclic_check(m, image).holds;
    report.ell = *level.value;
    report.witness = level.witness;
    for (Element e : level.witness.elements)
        report.witness_names.push_back(m.name(e));

    std::vector<Dfa> terms;
    for (std::size_t i = 1; i <= report.ell; ++i) {
        ElementSet p(m.size());
        for (Element x = 0; x < m.size(); ++x)
            if (level.per_element[omega_power(m, x)] >= i)
                p.insert(x);
        terms.push_back(preimage(stamp, p));
    }
    report.chain = DifferenceChain(language.alphabet(), std::move(terms), "strongly-cyclic");
    for (const Dfa& t : report.chain.terms())
        if (!is_strongly_cyclic(t).holds)
            throw Error("internal error: decomposition term is not strongly cyclic");
    if (!equivalent(eval_chain(report.chain), language))
        throw Error("internal error: decomposition does not evaluate to the language");
    return report;
}

} // namespace diffhier
