#ifndef DIFFHIER_HIERARCHY_HPP
#define DIFFHIER_HIERARCHY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffhier/alphabet.hpp"
#include "diffhier/closure.hpp"
#include "diffhier/dfa.hpp"

namespace diffhier {

// Decreasing sequence L1 ⊇ L2 ⊇ ... ⊇ Ln of languages, read as the
// alternating sum L1 - L2 + L3 - ... ± Ln. The empty chain denotes ∅.
class DifferenceChain {
public:
    // Throws InvalidArgument if some term is not contained in its
    // predecessor, AlphabetMismatch if a term is over another alphabet.
    explicit DifferenceChain(Alphabet alphabet, std::vector<Dfa> terms = {},
                             std::string lattice_tag = {});

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Dfa>& terms() const noexcept { return terms_; }
    const Dfa& term(std::size_t i) const { return terms_.at(i); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const std::string& lattice_tag() const noexcept { return lattice_tag_; }

    DifferenceChain truncated(std::size_t length) const;

private:
    Alphabet alphabet_;
    std::vector<Dfa> terms_;
    std::string lattice_tag_;
};

// (L1 - L2) + (L3 - L4) + ...
Dfa eval_chain(const DifferenceChain& chain);

// Largest i (1-based) with word ∈ Li, 0 if word ∉ L1. The word belongs to
// eval_chain(chain) iff the value is odd.
std::size_t mu(const DifferenceChain& chain, std::string_view word);

// (A*, L1, ..., Ln).
DifferenceChain complement_chain(const DifferenceChain& chain);

// Z_k = Σ X_i Y_j over i + j = k + 1 with i, j not both even; evaluates to
// the intersection. Trailing empty terms are dropped.
DifferenceChain intersect_chains(const DifferenceChain& x, const DifferenceChain& y);

// De Morgan through complement_chain and intersect_chains, then normalised.
DifferenceChain union_chains(const DifferenceChain& x, const DifferenceChain& y);

// Drops adjacent pairs of equal terms and trailing empty terms; the value
// of the chain is unchanged.
DifferenceChain normalize_chain(const DifferenceChain& chain);

// Z_k = words lying in at least k of the parts (the union over k-subsets of
// their intersections); evaluates to X1 △ ... △ Xn.
DifferenceChain from_symmetric_difference(std::span<const Dfa> parts);
// A decreasing chain is already a △-decomposition of its value.
std::vector<Dfa> to_symmetric_difference(const DifferenceChain& chain);

enum class ApproximationStatus { MemberAtLevel, NotMemberUpTo, NotInBooleanClosure };
std::string_view to_string(ApproximationStatus status);

struct ApproximationReport {
    explicit ApproximationReport(DifferenceChain chain) : chain(std::move(chain)) {}

    DifferenceChain chain;
    ApproximationStatus status = ApproximationStatus::NotMemberUpTo;
    // MemberAtLevel: the level; NotMemberUpTo: the bound that was tried.
    std::size_t level = 0;
    std::size_t iterations = 0;
    // Direct recipe: every term computed, L1 .. L_iterations, including a final empty or
    // repeated term.
    std::vector<Dfa> sequence;
    // Verdict of the iteration itself, before any shortcut.
    ApproximationStatus search_status = ApproximationStatus::NotMemberUpTo;
    // Set when a lattice-specific syntactic test refined the verdict.
    std::string shortcut;
    // Dual recipe only: "direct" or "complement", the reading that won.
    std::string reading;
};

inline constexpr std::size_t kDefaultMaxLevel = 32;

// Iterates L0 = A*, L_{n+1} = clos(L_n ∩ L) for even n and clos(L_n - L)
// for odd n. Stops at the first empty term (member at the previous level),
// when L_{n+2} ≡ L_n ≠ ∅ (the sequence is constant from there on, so no
// term is ever empty), or after L_{max_level+1}. The report's chain holds
// every non-empty term produced. Throws InvalidArgument when close(∅) ≠ ∅.
ApproximationReport best_approximation(const Dfa& language, const ClosureOperator& closure,
                                       std::size_t max_level = kDefaultMaxLevel);

// Level in the union-closed lattice of complements of closure-closed sets:
// approximates L (even-length reading) and its complement (odd-length
// reading) with `closure`, complements and reverses both, and keeps the
// shorter one.
ApproximationReport dual_best_approximation(const Dfa& language, const ClosureOperator& closure,
                                            std::size_t max_level = kDefaultMaxLevel);

// Front end used by the CLI: `co-<name>` selects the dual recipe over
// make_closure(name); for shuffle ideals and their complements a
// non-J-trivial syntactic monoid upgrades NotMemberUpTo to
// NotInBooleanClosure.
ApproximationReport decide_level(const Dfa& language, std::string_view lattice,
                                 std::size_t max_level = kDefaultMaxLevel);

// With S_j = F1 - F2 + ... ± Fj: S_j ⊆ L for even j and L ⊆ S_j for odd j,
// for every j up to the chain length. When `lattice` is given (or the
// chain's tag names a registered closure) every term must also be closed.
bool is_approximation(const DifferenceChain& chain, const Dfa& language,
                      const ClosureOperator* lattice = nullptr);

// a is better than b: S^a_j ⊆ S^b_j for odd j and S^b_j ⊆ S^a_j for even
// j. Throws InvalidArgument on a length mismatch.
bool is_better(const DifferenceChain& a, const DifferenceChain& b, const Dfa& language);

} // namespace diffhier

#endif
