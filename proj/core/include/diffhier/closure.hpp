#ifndef DIFFHIER_CLOSURE_HPP
#define DIFFHIER_CLOSURE_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "diffhier/alphabet.hpp"
#include "diffhier/dfa.hpp"

namespace diffhier {

// A map on regular languages of A* that is meant to be extensive,
// idempotent and isotone, with close(∅) = ∅. Its closed sets form the
// family against which difference chains are built. Operators are plain
// function values; the axioms are not enforced on construction, see
// check_axioms().
class ClosureOperator {
public:
    using Function = std::function<Dfa(const Dfa&)>;

    ClosureOperator(std::string name, Alphabet universe, Function close);

    const std::string& name() const noexcept { return name_; }
    const Alphabet& universe() const noexcept { return universe_; }

    // Throws AlphabetMismatch for languages over another alphabet.
    Dfa close(const Dfa& language) const;
    Dfa operator()(const Dfa& language) const { return close(language); }

private:
    std::string name_;
    Alphabet universe_;
    Function close_;
};

// L ⧢ A*: every word having a word of L as a scattered subword.
Dfa shuffle_ideal_closure(const Dfa& language);
// B* where B is the set of letters occurring in some word of L; ∅ stays ∅.
Dfa alphabet_star_closure(const Dfa& language);
// ∅ if L is empty, A* otherwise.
Dfa trivial_closure(const Dfa& language);

ClosureOperator shuffle_operator(const Alphabet& alphabet);
ClosureOperator alphabet_star_operator(const Alphabet& alphabet);
ClosureOperator trivial_operator(const Alphabet& alphabet);
// X ↦ c1(X) ∩ c2(X).
ClosureOperator intersect_closures(const ClosureOperator& c1, const ClosureOperator& c2);

// Registered names: `trivial`, `shuffle`, `alphabet-star` and
// `intersect:<name>,<name>`. Throws InvalidArgument for anything else.
ClosureOperator make_closure(std::string_view name, const Alphabet& alphabet);

bool is_closed(const ClosureOperator& op, const Dfa& language);

struct AxiomViolation {
    std::string axiom; // "extensive", "idempotent", "isotone" or "empty"
    Dfa language;
    std::optional<Dfa> other; // second operand for isotonicity
};

// Self-test for user-supplied operators: checks close(∅) = ∅ and the three
// axioms on every sample; isotonicity is tested on X ⊆ X ∪ Y for each
// sample X and its successor Y in the list (cyclically).
std::optional<AxiomViolation> check_axioms(const ClosureOperator& op, std::span<const Dfa> samples);

} // namespace diffhier

#endif
