#ifndef DIFFHIER_ALPHABET_HPP
#define DIFFHIER_ALPHABET_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace diffhier {

// Words are plain strings of letters; the empty word is printed as "1".
using Word = std::string;

std::string format_word(std::string_view word);

// Ordered finite set of single-character letters. Letters are kept sorted so
// that every traversal in "letter order" is deterministic.
class Alphabet {
public:
    explicit Alphabet(std::string_view letters);

    std::size_t size() const noexcept { return letters_.size(); }
    char letter(std::size_t index) const { return letters_.at(index); }
    const std::string& letters() const noexcept { return letters_; }

    std::optional<std::size_t> index_of(char c) const noexcept;
    bool contains(char c) const noexcept { return index_of(c).has_value(); }
    bool contains_word(std::string_view word) const noexcept;

    bool operator==(const Alphabet&) const = default;

private:
    std::string letters_;
};

} // namespace diffhier

#endif
