#ifndef DIFFHIER_CYCLIC_HPP
#define DIFFHIER_CYCLIC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffhier/dfa.hpp"
#include "diffhier/error.hpp"
#include "diffhier/hierarchy.hpp"
#include "diffhier/monoid.hpp"
#include "diffhier/syntactic.hpp"

namespace diffhier {

class NotCyclic : public Error {
public:
    NotCyclic() : Error("language is not cyclic") {}
};

// {u : subset·u = subset}, where subset·u is the exact image; a word that
// leaves some state of the subset without a transition is rejected.
Dfa stab_subset(const Dfa& dfa, const std::vector<State>& subset);

// Words stabilising at least one non-empty set of states: the preimage of
// {s : s^ω is not the empty partial map} in the transition monoid. When no
// word kills every state the result is A*.
Dfa stab_automaton(const Dfa& dfa, std::size_t cap = default_element_cap());

// Outcome of a syntactic property test. On failure `condition` names the
// violated rule and `witness` holds the elements involved, as words.
struct PropertyCheck {
    bool holds = true;
    std::string condition;
    std::vector<Word> witness;
    std::string detail;
};

// S1: u x^ω v ∈ P implies x^ω ∈ P; S2: x^ω ∈ P iff x ∈ P.
PropertyCheck is_strongly_cyclic(const Dfa& language);
// C1: u^n ∈ P iff u ∈ P (n > 0); C2: uv ∈ P iff vu ∈ P.
PropertyCheck is_cyclic(const Dfa& language);
// Same tests on an arbitrary stamp and target set.
PropertyCheck strongly_cyclic_check(const Monoid& monoid, const ElementSet& target);
PropertyCheck cyclic_check(const Monoid& monoid, const ElementSet& target);

struct StronglyCyclicHull {
    Dfa language;
    // The syntactic monoid has no zero, so the hull was taken to be A*.
    bool no_zero = false;
};

// Least strongly cyclic language containing a cyclic language: the
// preimage of {s : s^ω ≠ 0} when 0 ∉ P, A* otherwise. Throws NotCyclic.
StronglyCyclicHull least_strongly_cyclic(const Dfa& language);

// e0 <=_J e1 <=_J ... of idempotents, e0 ∈ P, memberships alternating.
struct IdempotentChain {
    std::vector<Element> elements;
    ElementSet target;
};
bool is_idempotent_chain(const Monoid& monoid, const IdempotentChain& chain);

struct EllResult {
    // nullopt when two J-equivalent idempotents disagree on P, in which case
    // alternating chains are unbounded (never the case for cyclic P).
    std::optional<std::size_t> value;
    IdempotentChain witness;
    // ℓ(e) for each idempotent e: the longest chain ending at e, 0 if none.
    std::vector<std::size_t> per_element;
};

EllResult ell(const Stamp& stamp, const ElementSet& target);

struct CyclicLevelReport {
    explicit CyclicLevelReport(DifferenceChain chain) : chain(std::move(chain)) {}

    bool strongly_cyclic = false;
    std::size_t ell = 0;
    IdempotentChain witness;
    std::vector<Word> witness_names;
    // η^{-1}(P_i) with P_i = {s : ℓ(s^ω) >= i}, i = 1..ℓ.
    DifferenceChain chain;
};

// Exact level in the difference hierarchy of strongly cyclic languages.
// Throws NotCyclic.
CyclicLevelReport cyclic_level(const Dfa& language);

} // namespace diffhier

#endif
