#ifndef DIFFHIER_DFA_HPP
#define DIFFHIER_DFA_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "diffhier/alphabet.hpp"

namespace diffhier {

using State = std::int32_t;
inline constexpr State kNoState = -1;

// Deterministic automaton with a possibly partial transition function.
// Transitions are stored row-major: next(q, a) = delta[q * |A| + a], with
// kNoState marking an undefined transition. A Dfa always has at least one
// state. Values are immutable once built.
class Dfa {
public:
    Dfa(Alphabet alphabet, std::size_t num_states, State initial, std::vector<bool> finals,
        std::vector<State> delta);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return finals_.size(); }
    State initial() const noexcept { return initial_; }
    bool is_final(State q) const { return finals_.at(static_cast<std::size_t>(q)); }
    const std::vector<bool>& finals() const noexcept { return finals_; }
    std::vector<State> final_states() const;

    State next(State q, std::size_t letter) const {
        return delta_[static_cast<std::size_t>(q) * alphabet_.size() + letter];
    }
    // Runs `word` from `from`; kNoState if some transition is missing.
    State run(State from, std::string_view word) const;
    bool accepts(std::string_view word) const;

    // True when every transition is defined.
    bool is_complete() const noexcept { return complete_; }
    const std::vector<State>& transitions() const noexcept { return delta_; }

    // Structural equality; on canonical minimal automata this is language
    // equality.
    bool operator==(const Dfa& other) const {
        return alphabet_ == other.alphabet_ && initial_ == other.initial_ &&
               finals_ == other.finals_ && delta_ == other.delta_;
    }

private:
    Alphabet alphabet_;
    State initial_;
    std::vector<bool> finals_;
    std::vector<State> delta_;
    bool complete_;
};

// Nondeterministic automaton with epsilon moves, used as an intermediate
// form by compile() and the closure constructions.
class Nfa {
public:
    static constexpr std::size_t kEpsilon = static_cast<std::size_t>(-1);

    struct Edge {
        std::size_t letter; // kEpsilon for an epsilon move
        State target;
    };

    explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    State add_state();
    void add_edge(State from, std::size_t letter, State to);
    void add_epsilon(State from, State to) { add_edge(from, kEpsilon, to); }
    void set_initial(State q, bool value = true);
    void set_final(State q, bool value = true);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges(State q) const { return edges_.at(static_cast<std::size_t>(q)); }
    bool is_initial(State q) const { return initial_.at(static_cast<std::size_t>(q)); }
    bool is_final(State q) const { return finals_.at(static_cast<std::size_t>(q)); }

    // Copies `other` into this automaton and returns the offset of its states.
    State embed(const Nfa& other);

private:
    Alphabet alphabet_;
    std::vector<std::vector<Edge>> edges_;
    std::vector<bool> initial_;
    std::vector<bool> finals_;
};

Nfa to_nfa(const Dfa& dfa);

// Subset construction restricted to non-empty subsets; the result is in
// general partial and not minimal.
Dfa determinize(const Nfa& nfa);

} // namespace diffhier

#endif
