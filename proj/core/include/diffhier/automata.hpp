#ifndef DIFFHIER_AUTOMATA_HPP
#define DIFFHIER_AUTOMATA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "diffhier/alphabet.hpp"
#include "diffhier/dfa.hpp"
#include "diffhier/regex.hpp"

namespace diffhier {

// Every operation below returns a minimal complete automaton in canonical
// form (states numbered in BFS order from the initial state, letters in
// alphabet order) unless stated otherwise. Partial inputs are completed
// with a sink first.

enum class BoolOp { Union, Intersection, Difference, SymmetricDifference };

Dfa compile(const Regex& regex);
// Shorthand for compile(parse_regex(text, alphabet)).
Dfa compile(std::string_view text, const Alphabet& alphabet);

Dfa minimize(const Dfa& dfa);
// Adds a rejecting sink for the missing transitions (no-op when complete).
Dfa complete(const Dfa& dfa);
// Keeps only states that are reachable and co-reachable; the result is
// partial and canonically numbered. The empty language trims to a single
// rejecting state without transitions.
Dfa trim(const Dfa& dfa);

Dfa product(BoolOp op, const Dfa& x, const Dfa& y);
Dfa complement(const Dfa& x);

bool is_empty(const Dfa& x);
bool is_subset(const Dfa& x, const Dfa& y);
bool equivalent(const Dfa& x, const Dfa& y);
// Shortest word (length-lex) in exactly one of the two languages.
std::optional<Word> separating_word(const Dfa& x, const Dfa& y);

// w^{-1}L = {u : wu in L}.
Dfa left_quotient(std::string_view word, const Dfa& x);

// Accepted words of length <= max_len in length-lexicographic order.
std::vector<Word> enumerate(const Dfa& x, std::size_t max_len);
std::optional<Word> shortest_word(const Dfa& x);

Dfa empty_language(const Alphabet& alphabet);
Dfa universal_language(const Alphabet& alphabet);
Dfa finite_language(const Alphabet& alphabet, std::span<const Word> words);
// B* where B is given as a letter mask over `alphabet`.
Dfa letters_star(const Alphabet& alphabet, const std::vector<bool>& letters);

// Letters labelling some transition of the trimmed automaton.
std::vector<bool> used_letters(const Dfa& x);
bool is_finite(const Dfa& x);

} // namespace diffhier

#endif
