#include "diffhier/alphabet.hpp"

#include <algorithm>

#include "diffhier/error.hpp"

namespace diffhier {

std::string format_word(std::string_view word) {
    return word.empty() ? std::string("1") : std::string(word);
}

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty()) {
        throw InvalidArgument("alphabet must not be empty");
    }
    std::sort(letters_.begin(), letters_.end());
    if (std::adjacent_find(letters_.begin(), letters_.end()) != letters_.end()) {
        throw InvalidArgument("alphabet contains a duplicate letter");
    }
    for (char c : letters_) {
        // These characters carry meaning in the regex syntax.
        if (c == '0' || c == '1' || c == '+' || c == '-' || c == '*' || c == '(' || c == ')' ||
            c == ' ' || c == '\t' || c == '\n') {
            throw InvalidArgument(std::string("letter '") + c + "' is reserved");
        }
    }
}

std::optional<std::size_t> Alphabet::index_of(char c) const noexcept {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), c);
    if (it == letters_.end() || *it != c) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - letters_.begin());
}

bool Alphabet::contains_word(std::string_view word) const noexcept {
    return std::all_of(word.begin(), word.end(), [this](char c) { return contains(c); });
}

} // namespace diffhier
