#include "diffhier/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "diffhier/error.hpp"

namespace diffhier {

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, State initial, std::vector<bool> finals,
         std::vector<State> delta)
    : alphabet_(std::move(alphabet)), initial_(initial), finals_(std::move(finals)),
      delta_(std::move(delta)), complete_(true) {
    if (num_states == 0) {
        throw InvalidArgument("an automaton needs at least one state");
    }
    if (finals_.size() != num_states) {
        throw InvalidArgument("final-state vector does not match the number of states");
    }
    if (delta_.size() != num_states * alphabet_.size()) {
        throw InvalidArgument("transition table does not match states x letters");
    }
    if (initial_ < 0 || static_cast<std::size_t>(initial_) >= num_states) {
        throw InvalidArgument("initial state out of range");
    }
    for (State t : delta_) {
        if (t == kNoState) {
            complete_ = false;
        } else if (t < 0 || static_cast<std::size_t>(t) >= num_states) {
            throw InvalidArgument("transition target out of range");
        }
    }
}

std::vector<State> Dfa::final_states() const {
    std::vector<State> out;
    for (std::size_t q = 0; q < finals_.size(); ++q) {
        if (finals_[q]) {
            out.push_back(static_cast<State>(q));
        }
    }
    return out;
}

State Dfa::run(State from, std::string_view word) const {
    State q = from;
    for (char c : word) {
        auto letter = alphabet_.index_of(c);
        if (!letter || q == kNoState) {
            return kNoState;
        }
        q = next(q, *letter);
    }
    return q;
}

bool Dfa::accepts(std::string_view word) const {
    State q = run(initial_, word);
    return q != kNoState && is_final(q);
}

State Nfa::add_state() {
    edges_.emplace_back();
    initial_.push_back(false);
    finals_.push_back(false);
    return static_cast<State>(edges_.size() - 1);
}

void Nfa::add_edge(State from, std::size_t letter, State to) {
    if (letter != kEpsilon && letter >= alphabet_.size()) {
        throw InvalidArgument("letter index out of range");
    }
    edges_.at(static_cast<std::size_t>(from)).push_back(Edge{letter, to});
}

void Nfa::set_initial(State q, bool value) { initial_.at(static_cast<std::size_t>(q)) = value; }
void Nfa::set_final(State q, bool value) { finals_.at(static_cast<std::size_t>(q)) = value; }

State Nfa::embed(const Nfa& other) {
    if (!(other.alphabet_ == alphabet_)) {
        throw AlphabetMismatch();
    }
    const auto offset = static_cast<State>(edges_.size());
    for (std::size_t q = 0; q < other.edges_.size(); ++q) {
        edges_.push_back(other.edges_[q]);
        for (Edge& e : edges_.back()) {
            e.target += offset;
        }
        initial_.push_back(other.initial_[q]);
        finals_.push_back(other.finals_[q]);
    }
    return offset;
}

Nfa to_nfa(const Dfa& dfa) {
    Nfa nfa(dfa.alphabet());
    for (std::size_t q = 0; q < dfa.num_states(); ++q) {
        nfa.add_state();
    }
    for (std::size_t q = 0; q < dfa.num_states(); ++q) {
        const auto s = static_cast<State>(q);
        nfa.set_final(s, dfa.is_final(s));
        for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
            State t = dfa.next(s, a);
            if (t != kNoState) {
                nfa.add_edge(s, a, t);
            }
        }
    }
    nfa.set_initial(dfa.initial());
    return nfa;
}

namespace {

using StateSet = std::vector<State>; // sorted

void epsilon_close(const Nfa& nfa, StateSet& set) {
    std::vector<bool> seen(nfa.num_states(), false);
    std::vector<State> stack;
    for (State q : set) {
        seen[static_cast<std::size_t>(q)] = true;
        stack.push_back(q);
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (const auto& e : nfa.edges(q)) {
            if (e.letter == Nfa::kEpsilon && !seen[static_cast<std::size_t>(e.target)]) {
                seen[static_cast<std::size_t>(e.target)] = true;
                set.push_back(e.target);
                stack.push_back(e.target);
            }
        }
    }
    std::sort(set.begin(), set.end());
}

} // namespace

Dfa determinize(const Nfa& nfa) {
    const std::size_t k = nfa.alphabet().size();
    StateSet start;
    for (std::size_t q = 0; q < nfa.num_states(); ++q) {
        if (nfa.is_initial(static_cast<State>(q))) {
            start.push_back(static_cast<State>(q));
        }
    }
    epsilon_close(nfa, start);

    std::map<StateSet, State> index;
    std::vector<StateSet> subsets;
    std::vector<State> delta;
    // The empty subset is never materialised: it becomes an undefined
    // transition. An automaton with no initial state still needs one state.
    index.emplace(start, 0);
    subsets.push_back(start);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const StateSet current = subsets[i];
        for (std::size_t a = 0; a < k; ++a) {
            StateSet target;
            for (State q : current) {
                for (const auto& e : nfa.edges(q)) {
                    if (e.letter == a) {
                        target.push_back(e.target);
                    }
                }
            }
            if (target.empty()) {
                delta.push_back(kNoState);
                continue;
            }
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());
            epsilon_close(nfa, target);
            auto [it, inserted] = index.emplace(target, static_cast<State>(subsets.size()));
            if (inserted) {
                subsets.push_back(target);
            }
            delta.push_back(it->second);
        }
    }
    std::vector<bool> finals(subsets.size(), false);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        finals[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                                [&](State q) { return nfa.is_final(q); });
    }
    return Dfa(nfa.alphabet(), subsets.size(), 0, std::move(finals), std::move(delta));
}

} // namespace diffhier
