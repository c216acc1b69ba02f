#include "oracle.hpp"

#include <map>
#include <tuple>

namespace oracle {

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<Word> out{""};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (char c : alphabet.letters())
                out.push_back(out[i] + c);
        begin = end;
    }
    return out;
}

namespace {

using Kind = diffhier::RegexNode::Kind;

struct Matcher {
    std::string_view word;
    std::map<std::tuple<const diffhier::RegexNode*, std::size_t, std::size_t>, bool> memo;

    bool run(const diffhier::RegexNode& n, std::size_t i, std::size_t j) {
        auto key = std::make_tuple(&n, i, j);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        bool r = false;
        switch (n.kind) {
        case Kind::Empty:
            r = false;
            break;
        case Kind::Epsilon:
            r = i == j;
            break;
        case Kind::Letter:
            r = j == i + 1 && word[i] == n.letter;
            break;
        case Kind::Union:
            r = run(*n.left, i, j) || run(*n.right, i, j);
            break;
        case Kind::Difference:
            r = run(*n.left, i, j) && !run(*n.right, i, j);
            break;
        case Kind::Concat:
            for (std::size_t k = i; k <= j && !r; ++k)
                r = run(*n.left, i, k) && run(*n.right, k, j);
            break;
        case Kind::Star:
            r = i == j;
            for (std::size_t k = i + 1; k <= j && !r; ++k)
                r = run(*n.left, i, k) && run(n, k, j);
            break;
        }
        memo[key] = r;
        return r;
    }
};

} // namespace

bool matches(const diffhier::RegexNode& node, std::string_view word) {
    Matcher m{word, {}};
    return m.run(node, 0, word.size());
}

Predicate regex_predicate(std::string_view text, const Alphabet& alphabet) {
    diffhier::Regex r = diffhier::parse_regex(text, alphabet);
    return [root = r.root_ptr()](std::string_view w) { return matches(*root, w); };
}

WordSet words_of(const Predicate& member, const Alphabet& alphabet, std::size_t max_len) {
    WordSet out;
    for (const Word& w : all_words(alphabet, max_len))
        if (member(w))
            out.insert(w);
    return out;
}

WordSet words_of(const Dfa& dfa, std::size_t max_len) {
    return words_of([&](std::string_view w) { return dfa.accepts(w); }, dfa.alphabet(), max_len);
}

bool agree(const Dfa& dfa, const Predicate& member, std::size_t max_len, Word* counterexample) {
    for (const Word& w : all_words(dfa.alphabet(), max_len)) {
        if (dfa.accepts(w) != member(w)) {
            if (counterexample)
                *counterexample = w;
            return false;
        }
    }
    return true;
}

bool is_subword(std::string_view small, std::string_view big) {
    std::size_t i = 0;
    for (char c : big)
        if (i < small.size() && small[i] == c)
            ++i;
    return i == small.size();
}

std::size_t nerode_classes(const Predicate& member, const Alphabet& alphabet, std::size_t reach,
                           std::size_t probe) {
    const std::vector<Word> suffixes = all_words(alphabet, probe);
    std::set<std::vector<bool>> signatures;
    for (const Word& u : all_words(alphabet, reach)) {
        std::vector<bool> sig;
        for (const Word& w : suffixes)
            sig.push_back(member(u + w));
        signatures.insert(sig);
    }
    return signatures.size();
}

std::string random_regex(std::mt19937& rng, const Alphabet& alphabet, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
    auto letter = [&] {
        std::uniform_int_distribution<std::size_t> l(0, alphabet.size() - 1);
        return std::string(1, alphabet.letter(l(rng)));
    };
    switch (pick(rng)) {
    case 0:
    case 1:
        return letter();
    case 2:
        return std::uniform_int_distribution<int>(0, 5)(rng) == 0 ? "1" : letter();
    case 3:
    case 4:
        return "(" + random_regex(rng, alphabet, depth - 1) + random_regex(rng, alphabet, depth - 1) + ")";
    case 5:
        return "(" + random_regex(rng, alphabet, depth - 1) + "+" + random_regex(rng, alphabet, depth - 1) + ")";
    case 6:
        return "(" + random_regex(rng, alphabet, depth - 1) + ")*";
    default:
        return "(" + random_regex(rng, alphabet, depth - 1) + "-" + random_regex(rng, alphabet, depth - 1) + ")";
    }
}

std::vector<Word> random_words(std::mt19937& rng, const Alphabet& alphabet, std::size_t count,
                               std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
    std::vector<Word> out;
    for (std::size_t i = 0; i < count; ++i) {
        Word w;
        for (std::size_t k = len(rng); k > 0; --k)
            w += alphabet.letter(letter(rng));
        out.push_back(w);
    }
    return out;
}

Dfa random_dfa(std::mt19937& rng, const Alphabet& alphabet, std::size_t states, bool partial) {
    std::uniform_int_distribution<int> target(partial ? -1 : 0, static_cast<int>(states) - 1);
    std::bernoulli_distribution coin(0.4);
    std::vector<diffhier::State> delta(states * alphabet.size());
    for (auto& t : delta)
        t = target(rng);
    std::vector<bool> finals(states);
    for (std::size_t q = 0; q < states; ++q)
        finals[q] = coin(rng);
    return Dfa(alphabet, states, 0, std::move(finals), std::move(delta));
}

std::set<std::vector<int>> partial_maps(const Dfa& dfa, std::size_t max_len) {
    std::set<std::vector<int>> maps;
    for (const Word& w : all_words(dfa.alphabet(), max_len)) {
        std::vector<int> m;
        for (diffhier::State q = 0; static_cast<std::size_t>(q) < dfa.num_states(); ++q)
            m.push_back(dfa.run(q, w));
        maps.insert(m);
    }
    return maps;
}

std::set<std::vector<int>> generated_maps(const Dfa& dfa) {
    const int n = static_cast<int>(dfa.num_states());
    std::vector<int> identity(n);
    for (int q = 0; q < n; ++q)
        identity[q] = q;
    std::set<std::vector<int>> seen{identity};
    std::vector<std::vector<int>> todo{identity};
    while (!todo.empty()) {
        std::vector<int> f = todo.back();
        todo.pop_back();
        for (char c : dfa.alphabet().letters()) {
            std::vector<int> g(n);
            for (int q = 0; q < n; ++q)
                g[q] = f[q] < 0 ? -1 : dfa.run(f[q], std::string(1, c));
            if (seen.insert(g).second)
                todo.push_back(g);
        }
    }
    return seen;
}

} // namespace oracle
