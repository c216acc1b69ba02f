#ifndef DIFFHIER_REGEX_HPP
#define DIFFHIER_REGEX_HPP

#include <memory>
#include <string>
#include <string_view>

#include "diffhier/alphabet.hpp"

namespace diffhier {

// Regular expressions in the notation of the literature on syntactic
// semigroups: `+` is union, juxtaposition is concatenation, `*` is star,
// `1` is the empty word and `0` the empty language. `-` (set difference)
// has the same precedence as `+`; both associate to the left.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor factor*
//   factor := atom '*'*
//   atom   := letter | '1' | '0' | '(' expr ')'
//
// Blanks are ignored.
struct RegexNode {
    enum class Kind { Empty, Epsilon, Letter, Union, Concat, Star, Difference };

    Kind kind;
    char letter = '\0';
    std::shared_ptr<const RegexNode> left;
    std::shared_ptr<const RegexNode> right;
};

using RegexPtr = std::shared_ptr<const RegexNode>;

RegexPtr make_empty();
RegexPtr make_epsilon();
RegexPtr make_letter(char c);
RegexPtr make_union(RegexPtr left, RegexPtr right);
RegexPtr make_concat(RegexPtr left, RegexPtr right);
RegexPtr make_star(RegexPtr inner);
RegexPtr make_difference(RegexPtr left, RegexPtr right);

class Regex {
public:
    Regex(Alphabet alphabet, RegexPtr root);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const RegexNode& root() const noexcept { return *root_; }
    const RegexPtr& root_ptr() const noexcept { return root_; }

    // Fully parenthesised rendering that parses back to the same tree.
    std::string to_string() const;

private:
    Alphabet alphabet_;
    RegexPtr root_;
};

// Throws ParseError (with the offending position) on malformed input or on a
// letter outside `alphabet`.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

bool structurally_equal(const RegexNode& a, const RegexNode& b);

} // namespace diffhier

#endif
