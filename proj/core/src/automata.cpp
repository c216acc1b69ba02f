#include "diffhier/automata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <utility>

#include "diffhier/error.hpp"

namespace diffhier {

namespace {

void require_same_alphabet(const Dfa& x, const Dfa& y) {
    if (!(x.alphabet() == y.alphabet())) {
        throw AlphabetMismatch();
    }
}

// Keeps the states reachable from the initial state and numbers them in
// BFS order, letters in alphabet order.
Dfa renumber_bfs(const Dfa& dfa) {
    const std::size_t k = dfa.alphabet().size();
    std::vector<State> fresh(dfa.num_states(), kNoState);
    std::vector<State> order;
    fresh[static_cast<std::size_t>(dfa.initial())] = 0;
    order.push_back(dfa.initial());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            State t = dfa.next(order[i], a);
            if (t != kNoState && fresh[static_cast<std::size_t>(t)] == kNoState) {
                fresh[static_cast<std::size_t>(t)] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    std::vector<bool> finals(order.size());
    std::vector<State> delta(order.size() * k, kNoState);
    for (std::size_t i = 0; i < order.size(); ++i) {
        finals[i] = dfa.is_final(order[i]);
        for (std::size_t a = 0; a < k; ++a) {
            State t = dfa.next(order[i], a);
            delta[i * k + a] = t == kNoState ? kNoState : fresh[static_cast<std::size_t>(t)];
        }
    }
    return Dfa(dfa.alphabet(), order.size(), 0, std::move(finals), std::move(delta));
}

std::vector<bool> coreachable(const Dfa& dfa) {
    const std::size_t n = dfa.num_states();
    const std::size_t k = dfa.alphabet().size();
    std::vector<std::vector<State>> reverse(n);
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            State t = dfa.next(static_cast<State>(q), a);
            if (t != kNoState) {
                reverse[static_cast<std::size_t>(t)].push_back(static_cast<State>(q));
            }
        }
    }
    std::vector<bool> live(n, false);
    std::vector<State> stack;
    for (std::size_t q = 0; q < n; ++q) {
        if (dfa.is_final(static_cast<State>(q))) {
            live[q] = true;
            stack.push_back(static_cast<State>(q));
        }
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : reverse[static_cast<std::size_t>(q)]) {
            if (!live[static_cast<std::size_t>(p)]) {
                live[static_cast<std::size_t>(p)] = true;
                stack.push_back(p);
            }
        }
    }
    return live;
}

// Shortest distance (in letters) from each state to a final state.
std::vector<std::size_t> distance_to_final(const Dfa& dfa) {
    const std::size_t n = dfa.num_states();
    const std::size_t k = dfa.alphabet().size();
    constexpr std::size_t kInf = static_cast<std::size_t>(-1);
    std::vector<std::vector<State>> reverse(n);
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            State t = dfa.next(static_cast<State>(q), a);
            if (t != kNoState) {
                reverse[static_cast<std::size_t>(t)].push_back(static_cast<State>(q));
            }
        }
    }
    std::vector<std::size_t> dist(n, kInf);
    std::deque<State> queue;
    for (std::size_t q = 0; q < n; ++q) {
        if (dfa.is_final(static_cast<State>(q))) {
            dist[q] = 0;
            queue.push_back(static_cast<State>(q));
        }
    }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : reverse[static_cast<std::size_t>(q)]) {
            if (dist[static_cast<std::size_t>(p)] == kInf) {
                dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(q)] + 1;
                queue.push_back(p);
            }
        }
    }
    return dist;
}

struct Fragment {
    State start;
    State end;
};

Fragment thompson(const RegexNode& node, const Alphabet& alphabet, Nfa& nfa) {
    using Kind = RegexNode::Kind;
    switch (node.kind) {
    case Kind::Empty: {
        State s = nfa.add_state();
        State e = nfa.add_state();
        return {s, e};
    }
    case Kind::Epsilon: {
        State s = nfa.add_state();
        State e = nfa.add_state();
        nfa.add_epsilon(s, e);
        return {s, e};
    }
    case Kind::Letter: {
        auto letter = alphabet.index_of(node.letter);
        if (!letter) {
            throw InvalidArgument(std::string("letter '") + node.letter + "' is not in the alphabet");
        }
        State s = nfa.add_state();
        State e = nfa.add_state();
        nfa.add_edge(s, *letter, e);
        return {s, e};
    }
    case Kind::Union: {
        Fragment l = thompson(*node.left, alphabet, nfa);
        Fragment r = thompson(*node.right, alphabet, nfa);
        State s = nfa.add_state();
        State e = nfa.add_state();
        nfa.add_epsilon(s, l.start);
        nfa.add_epsilon(s, r.start);
        nfa.add_epsilon(l.end, e);
        nfa.add_epsilon(r.end, e);
        return {s, e};
    }
    case Kind::Concat: {
        Fragment l = thompson(*node.left, alphabet, nfa);
        Fragment r = thompson(*node.right, alphabet, nfa);
        nfa.add_epsilon(l.end, r.start);
        return {l.start, r.end};
    }
    case Kind::Star: {
        Fragment inner = thompson(*node.left, alphabet, nfa);
        State s = nfa.add_state();
        State e = nfa.add_state();
        nfa.add_epsilon(s, e);
        nfa.add_epsilon(s, inner.start);
        nfa.add_epsilon(inner.end, inner.start);
        nfa.add_epsilon(inner.end, e);
        return {s, e};
    }
    case Kind::Difference: {
        // Difference is not a Thompson operator: compile both sides and
        // splice the resulting automaton in.
        Dfa diff = product(BoolOp::Difference, compile(Regex(alphabet, node.left)),
                           compile(Regex(alphabet, node.right)));
        Nfa sub = to_nfa(diff);
        State offset = nfa.embed(sub);
        State s = nfa.add_state();
        State e = nfa.add_state();
        for (std::size_t q = 0; q < sub.num_states(); ++q) {
            const auto local = static_cast<State>(q);
            nfa.set_initial(offset + local, false);
            nfa.set_final(offset + local, false);
            if (sub.is_initial(local)) {
                nfa.add_epsilon(s, offset + local);
            }
            if (sub.is_final(local)) {
                nfa.add_epsilon(offset + local, e);
            }
        }
        return {s, e};
    }
    }
    throw InvalidArgument("unknown regex node");
}

bool accepts_pair(BoolOp op, bool in_x, bool in_y) {
    switch (op) {
    case BoolOp::Union: return in_x || in_y;
    case BoolOp::Intersection: return in_x && in_y;
    case BoolOp::Difference: return in_x && !in_y;
    case BoolOp::SymmetricDifference: return in_x != in_y;
    }
    return false;
}

// Complete product automaton, not minimised.
Dfa raw_product(BoolOp op, const Dfa& x0, const Dfa& y0) {
    const Dfa x = complete(x0);
    const Dfa y = complete(y0);
    const std::size_t k = x.alphabet().size();
    std::map<std::pair<State, State>, State> index;
    std::vector<std::pair<State, State>> pairs;
    std::vector<State> delta;
    index.emplace(std::make_pair(x.initial(), y.initial()), 0);
    pairs.emplace_back(x.initial(), y.initial());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [p, q] = pairs[i];
        for (std::size_t a = 0; a < k; ++a) {
            auto target = std::make_pair(x.next(p, a), y.next(q, a));
            auto [it, inserted] = index.emplace(target, static_cast<State>(pairs.size()));
            if (inserted) {
                pairs.push_back(target);
            }
            delta.push_back(it->second);
        }
    }
    std::vector<bool> finals(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        finals[i] = accepts_pair(op, x.is_final(pairs[i].first), y.is_final(pairs[i].second));
    }
    return Dfa(x.alphabet(), pairs.size(), 0, std::move(finals), std::move(delta));
}

template <class Accept>
std::optional<Word> shortest_accepted(const Dfa& dfa, Accept accept) {
    const std::size_t k = dfa.alphabet().size();
    std::vector<std::pair<State, std::size_t>> parent(dfa.num_states(), {kNoState, 0});
    std::vector<bool> seen(dfa.num_states(), false);
    std::deque<State> queue{dfa.initial()};
    seen[static_cast<std::size_t>(dfa.initial())] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        if (accept(q)) {
            Word word;
            for (State s = q; s != dfa.initial();) {
                auto [p, a] = parent[static_cast<std::size_t>(s)];
                word.push_back(dfa.alphabet().letter(a));
                s = p;
            }
            std::reverse(word.begin(), word.end());
            return word;
        }
        for (std::size_t a = 0; a < k; ++a) {
            State t = dfa.next(q, a);
            if (t != kNoState && !seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                parent[static_cast<std::size_t>(t)] = {q, a};
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

} // namespace

Dfa compile(const Regex& regex) {
    Nfa nfa(regex.alphabet());
    Fragment f = thompson(regex.root(), regex.alphabet(), nfa);
    nfa.set_initial(f.start);
    nfa.set_final(f.end);
    return minimize(determinize(nfa));
}

Dfa compile(std::string_view text, const Alphabet& alphabet) {
    return compile(parse_regex(text, alphabet));
}

Dfa complete(const Dfa& dfa) {
    if (dfa.is_complete()) {
        return dfa;
    }
    const std::size_t n = dfa.num_states();
    const std::size_t k = dfa.alphabet().size();
    const auto sink = static_cast<State>(n);
    std::vector<State> delta(dfa.transitions());
    for (State& t : delta) {
        if (t == kNoState) {
            t = sink;
        }
    }
    delta.insert(delta.end(), k, sink);
    std::vector<bool> finals = dfa.finals();
    finals.push_back(false);
    return Dfa(dfa.alphabet(), n + 1, dfa.initial(), std::move(finals), std::move(delta));
}

Dfa minimize(const Dfa& input) {
    const Dfa dfa = renumber_bfs(complete(input));
    const std::size_t n = dfa.num_states();
    const std::size_t k = dfa.alphabet().size();

    // Moore refinement: split classes by the classes of their successors
    // until the number of classes is stable.
    std::vector<std::size_t> cls(n);
    for (std::size_t q = 0; q < n; ++q) {
        cls[q] = dfa.is_final(static_cast<State>(q)) ? 1 : 0;
    }
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> signatures;
        std::vector<std::size_t> next_cls(n);
        std::vector<std::size_t> signature(k + 1);
        for (std::size_t q = 0; q < n; ++q) {
            signature[0] = cls[q];
            for (std::size_t a = 0; a < k; ++a) {
                signature[a + 1] = cls[static_cast<std::size_t>(dfa.next(static_cast<State>(q), a))];
            }
            auto [it, inserted] = signatures.emplace(signature, signatures.size());
            next_cls[q] = it->second;
        }
        cls = std::move(next_cls);
        if (signatures.size() == count) {
            break;
        }
        count = signatures.size();
    }

    std::vector<bool> finals(count, false);
    std::vector<State> delta(count * k, kNoState);
    for (std::size_t q = 0; q < n; ++q) {
        finals[cls[q]] = dfa.is_final(static_cast<State>(q));
        for (std::size_t a = 0; a < k; ++a) {
            delta[cls[q] * k + a] =
                static_cast<State>(cls[static_cast<std::size_t>(dfa.next(static_cast<State>(q), a))]);
        }
    }
    Dfa quotient(dfa.alphabet(), count, static_cast<State>(cls[static_cast<std::size_t>(dfa.initial())]),
                 std::move(finals), std::move(delta));
    return renumber_bfs(quotient);
}

Dfa trim(const Dfa& input) {
    const Dfa dfa = renumber_bfs(input);
    const std::vector<bool> live = coreachable(dfa);
    const std::size_t k = dfa.alphabet().size();
    if (!live[static_cast<std::size_t>(dfa.initial())]) {
        return Dfa(dfa.alphabet(), 1, 0, {false}, std::vector<State>(k, kNoState));
    }
    std::vector<State> delta(dfa.transitions());
    for (State& t : delta) {
        if (t != kNoState && !live[static_cast<std::size_t>(t)]) {
            t = kNoState;
        }
    }
    return renumber_bfs(Dfa(dfa.alphabet(), dfa.num_states(), dfa.initial(), dfa.finals(), std::move(delta)));
}

Dfa product(BoolOp op, const Dfa& x, const Dfa& y) {
    require_same_alphabet(x, y);
    return minimize(raw_product(op, x, y));
}

Dfa complement(const Dfa& x) {
    const Dfa c = complete(x);
    std::vector<bool> finals = c.finals();
    finals.flip();
    return minimize(Dfa(c.alphabet(), c.num_states(), c.initial(), std::move(finals), c.transitions()));
}

bool is_empty(const Dfa& x) {
    return !shortest_accepted(x, [&](State q) { return x.is_final(q); }).has_value();
}

bool is_subset(const Dfa& x, const Dfa& y) {
    require_same_alphabet(x, y);
    return is_empty(raw_product(BoolOp::Difference, x, y));
}

bool equivalent(const Dfa& x, const Dfa& y) {
    require_same_alphabet(x, y);
    return minimize(x) == minimize(y);
}

std::optional<Word> separating_word(const Dfa& x, const Dfa& y) {
    require_same_alphabet(x, y);
    return shortest_word(raw_product(BoolOp::SymmetricDifference, x, y));
}

std::optional<Word> shortest_word(const Dfa& x) {
    return shortest_accepted(x, [&](State q) { return x.is_final(q); });
}

Dfa left_quotient(std::string_view word, const Dfa& x) {
    if (!x.alphabet().contains_word(word)) {
        throw InvalidArgument("quotient word uses letters outside the alphabet");
    }
    State q = x.run(x.initial(), word);
    if (q == kNoState) {
        return empty_language(x.alphabet());
    }
    return minimize(Dfa(x.alphabet(), x.num_states(), q, x.finals(), x.transitions()));
}

std::vector<Word> enumerate(const Dfa& x, std::size_t max_len) {
    const std::vector<std::size_t> dist = distance_to_final(x);
    const std::size_t k = x.alphabet().size();
    std::vector<Word> out;
    Word prefix;
    // Only branches that can still reach a final state in the remaining
    // budget are explored, so the work is proportional to the output.
    std::function<void(State, std::size_t)> walk = [&](State q, std::size_t remaining) {
        if (remaining == 0) {
            if (x.is_final(q)) {
                out.push_back(prefix);
            }
            return;
        }
        for (std::size_t a = 0; a < k; ++a) {
            State t = x.next(q, a);
            if (t == kNoState || dist[static_cast<std::size_t>(t)] > remaining - 1) {
                continue;
            }
            prefix.push_back(x.alphabet().letter(a));
            walk(t, remaining - 1);
            prefix.pop_back();
        }
    };
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (dist[static_cast<std::size_t>(x.initial())] <= len) {
            walk(x.initial(), len);
        }
    }
    return out;
}

Dfa empty_language(const Alphabet& alphabet) {
    return Dfa(alphabet, 1, 0, {false}, std::vector<State>(alphabet.size(), 0));
}

Dfa universal_language(const Alphabet& alphabet) {
    return Dfa(alphabet, 1, 0, {true}, std::vector<State>(alphabet.size(), 0));
}

Dfa finite_language(const Alphabet& alphabet, std::span<const Word> words) {
    const std::size_t k = alphabet.size();
    std::vector<State> delta(k, kNoState);
    std::vector<bool> finals{false};
    for (const Word& w : words) {
        State q = 0;
        for (char c : w) {
            auto a = alphabet.index_of(c);
            if (!a) {
                throw InvalidArgument(std::string("letter '") + c + "' is not in the alphabet");
            }
            auto slot = static_cast<std::size_t>(q) * k + *a;
            if (delta[slot] == kNoState) {
                delta[slot] = static_cast<State>(finals.size());
                finals.push_back(false);
                delta.insert(delta.end(), k, kNoState);
            }
            q = delta[slot];
        }
        finals[static_cast<std::size_t>(q)] = true;
    }
    const std::size_t n = finals.size();
    return minimize(Dfa(alphabet, n, 0, std::move(finals), std::move(delta)));
}

Dfa letters_star(const Alphabet& alphabet, const std::vector<bool>& letters) {
    if (letters.size() != alphabet.size()) {
        throw InvalidArgument("letter mask does not match the alphabet");
    }
    std::vector<State> delta(alphabet.size(), kNoState);
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
        if (letters[a]) {
            delta[a] = 0;
        }
    }
    return minimize(Dfa(alphabet, 1, 0, {true}, std::move(delta)));
}

std::vector<bool> used_letters(const Dfa& x) {
    const Dfa t = trim(x);
    const std::size_t k = t.alphabet().size();
    std::vector<bool> used(k, false);
    for (std::size_t q = 0; q < t.num_states(); ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            if (t.next(static_cast<State>(q), a) != kNoState) {
                used[a] = true;
            }
        }
    }
    return used;
}

bool is_finite(const Dfa& x) {
    const Dfa t = trim(x);
    const std::size_t n = t.num_states();
    const std::size_t k = t.alphabet().size();
    // Iterative DFS colouring; a back edge in the trimmed automaton means
    // an infinite language.
    std::vector<int> colour(n, 0);
    std::vector<std::pair<State, std::size_t>> stack{{t.initial(), 0}};
    colour[static_cast<std::size_t>(t.initial())] = 1;
    while (!stack.empty()) {
        auto& [q, a] = stack.back();
        if (a == k) {
            colour[static_cast<std::size_t>(q)] = 2;
            stack.pop_back();
            continue;
        }
        State s = t.next(q, a++);
        if (s == kNoState) {
            continue;
        }
        if (colour[static_cast<std::size_t>(s)] == 1) {
            return false;
        }
        if (colour[static_cast<std::size_t>(s)] == 0) {
            colour[static_cast<std::size_t>(s)] = 1;
            stack.emplace_back(s, 0);
        }
    }
    return true;
}

} // namespace diffhier
