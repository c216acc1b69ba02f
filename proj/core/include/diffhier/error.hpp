#ifndef DIFFHIER_ERROR_HPP
#define DIFFHIER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffhier {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class AlphabetMismatch : public Error {
public:
    AlphabetMismatch() : Error("operands are defined over different alphabets") {}
};

// Raised when a monoid construction would exceed the configured element cap.
class CapExceeded : public Error {
public:
    explicit CapExceeded(std::size_t cap)
        : Error("monoid has more than " + std::to_string(cap) + " elements"), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace diffhier

#endif
