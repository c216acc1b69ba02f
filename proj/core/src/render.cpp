#include "diffhier/render.hpp"

#include <algorithm>
#include <sstream>

#include "diffhier/automata.hpp"
#include "diffhier/closure.hpp"
#include "diffhier/syntactic.hpp"

namespace diffhier {

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string starred(const Monoid& m, Element x) {
    return (m.is_idempotent(x) ? "*" : "") + m.name(x);
}

} // namespace

std::string render_table(const Monoid& m) {
    std::size_t width = 1;
    for (Element x = 0; x < m.size(); ++x) {
        width = std::max(width, m.name(x).size());
    }
    std::ostringstream out;
    out << pad("", width + 2) << " |";
    for (Element y = 0; y < m.size(); ++y) {
        out << ' ' << pad(m.name(y), width);
    }
    out << '\n' << std::string(width + 4 + m.size() * (width + 1), '-') << '\n';
    for (Element x = 0; x < m.size(); ++x) {
        out << (m.is_idempotent(x) ? "* " : "  ") << pad(m.name(x), width) << " |";
        for (Element y = 0; y < m.size(); ++y) {
            out << ' ' << pad(m.name(m.multiply(x, y)), width);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_eggbox(const Monoid& m) {
    const std::size_t n = m.size();
    // R: xM = yM, L: Mx = My; computed from right/left ideals.
    std::vector<std::vector<bool>> right_ideal(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> left_ideal(n, std::vector<bool>(n, false));
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            right_ideal[x][m.multiply(x, y)] = true;
            left_ideal[x][m.multiply(y, x)] = true;
        }
    }
    std::size_t width = 1;
    for (Element x = 0; x < n; ++x) {
        width = std::max(width, m.name(x).size() + 1);
    }
    std::ostringstream out;
    for (const auto& cls : j_classes(m)) {
        std::vector<Element> r_reps;
        std::vector<Element> l_reps;
        for (Element x : cls) {
            if (std::none_of(r_reps.begin(), r_reps.end(),
                             [&](Element r) { return right_ideal[r] == right_ideal[x]; })) {
                r_reps.push_back(x);
            }
            if (std::none_of(l_reps.begin(), l_reps.end(),
                             [&](Element l) { return left_ideal[l] == left_ideal[x]; })) {
                l_reps.push_back(x);
            }
        }
        const std::size_t cell = width + 2;
        const std::string rule = "+" + std::string(l_reps.size() * (cell + 1) - 1, '-') + "+";
        out << rule << '\n';
        for (Element r : r_reps) {
            out << '|';
            for (Element l : l_reps) {
                std::string text;
                for (Element x : cls) {
                    if (right_ideal[x] == right_ideal[r] && left_ideal[x] == left_ideal[l]) {
                        text += (text.empty() ? "" : ",") + starred(m, x);
                    }
                }
                out << ' ' << pad(text, cell - 1) << '|';
            }
            out << '\n' << rule << '\n';
        }
        out << '\n';
    }
    return out.str();
}

namespace {

constexpr std::size_t kListLimit = 24;

std::string word_list(const std::vector<Word>& words) {
    std::string out = "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
        out += (i ? ", " : "") + format_word(words[i]);
    }
    return out + "}";
}

// Words of a shuffle ideal having no proper scattered subword in it.
std::vector<Word> minimal_words(const Dfa& ideal) {
    std::vector<Word> minimal;
    for (const Word& w : enumerate(ideal, ideal.num_states())) {
        bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const Word& m) {
            std::size_t i = 0;
            for (char c : w) {
                if (i < m.size() && m[i] == c) {
                    ++i;
                }
            }
            return i == m.size();
        });
        if (!covered) {
            minimal.push_back(w);
        }
    }
    return minimal;
}

} // namespace

std::string describe(const Dfa& language) {
    const Alphabet& alphabet = language.alphabet();
    const Dfa l = minimize(language);
    if (is_empty(l)) {
        return "∅";
    }
    if (equivalent(l, universal_language(alphabet))) {
        return "A*";
    }
    if (is_finite(l)) {
        std::vector<Word> words = enumerate(l, l.num_states());
        if (words.size() <= kListLimit) {
            return word_list(words);
        }
        return "finite, " + std::to_string(words.size()) + " words";
    }
    const Dfa co = complement(l);
    if (is_finite(co)) {
        std::vector<Word> words = enumerate(co, co.num_states());
        if (words.size() <= kListLimit) {
            return "A* - " + word_list(words);
        }
    }
    if (equivalent(l, alphabet_star_closure(l))) {
        std::string letters;
        std::vector<bool> used = used_letters(l);
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            if (used[a]) {
                letters += std::string(letters.empty() ? "" : ",") + alphabet.letter(a);
            }
        }
        return letters.size() == 1 ? letters + "*" : "{" + letters + "}*";
    }
    if (l.num_states() <= 12 && equivalent(l, shuffle_ideal_closure(l))) {
        std::vector<Word> basis = minimal_words(l);
        if (basis.size() <= kListLimit) {
            return "A* ⧢ " + word_list(basis);
        }
    }
    return "automaton with " + std::to_string(l.num_states()) + " states";
}

} // namespace diffhier
