#ifndef DIFFHIER_MONOID_HPP
#define DIFFHIER_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffhier/alphabet.hpp"

namespace diffhier {

using Element = std::uint32_t;

// Subset of the elements {0, ..., universe-1} of a finite monoid.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : bits_(universe, false) {}
    ElementSet(std::size_t universe, std::initializer_list<Element> members);
    static ElementSet all(std::size_t universe);

    std::size_t universe() const noexcept { return bits_.size(); }
    bool contains(Element x) const { return bits_.at(x); }
    void insert(Element x) { bits_.at(x) = true; }
    void erase(Element x) { bits_.at(x) = false; }

    std::size_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<Element> members() const;
    ElementSet complement() const;
    bool is_subset_of(const ElementSet& other) const;

    bool operator==(const ElementSet&) const = default;

private:
    std::vector<bool> bits_;
};

// Finite monoid given by its multiplication table. Elements are 0..size-1.
// Optional names are the shortest words (length-lex) mapping to each
// element; the identity is named by the empty word.
class Monoid {
public:
    // Checks the identity law and associativity.
    Monoid(std::size_t size, std::vector<Element> table, Element identity,
           std::vector<Word> names = {});

    struct Unchecked {};
    // For tables produced by a construction that is associative by design
    // (transition monoids, restricted products).
    Monoid(Unchecked, std::size_t size, std::vector<Element> table, Element identity,
           std::vector<Word> names);

    std::size_t size() const noexcept { return size_; }
    Element identity() const noexcept { return identity_; }
    Element multiply(Element x, Element y) const { return table_[x * size_ + y]; }
    Element power(Element x, std::size_t exponent) const;
    bool is_idempotent(Element x) const { return multiply(x, x) == x; }
    const std::vector<Element>& table() const noexcept { return table_; }

    // The element z with zx = xz = z for all x, if any.
    std::optional<Element> zero() const;

    bool has_names() const noexcept { return !names_.empty(); }
    // Display name: the witness word (ε printed as "1"), or "#i" without names.
    std::string name(Element x) const;
    const std::vector<Word>& names() const noexcept { return names_; }
    std::optional<Element> find(std::string_view word_name) const;

    bool operator==(const Monoid&) const = default;

private:
    void check_names() const;

    std::size_t size_;
    std::vector<Element> table_;
    Element identity_;
    std::vector<Word> names_;
};

// Surjective morphism from A* onto a finite monoid, given by letter images.
class Stamp {
public:
    // Throws InvalidArgument when the letter images do not generate the monoid.
    Stamp(Monoid monoid, Alphabet alphabet, std::vector<Element> letter_image);

    const Monoid& monoid() const noexcept { return monoid_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    Element image(std::size_t letter) const { return letter_image_.at(letter); }
    const std::vector<Element>& letter_images() const noexcept { return letter_image_; }
    Element evaluate(std::string_view word) const;

private:
    Monoid monoid_;
    Alphabet alphabet_;
    std::vector<Element> letter_image_;
};

// Binary relation on monoid elements stored as a dense matrix.
class OrderRelation {
public:
    OrderRelation(std::size_t size, std::vector<bool> leq);
    static OrderRelation equality(std::size_t size);
    static OrderRelation total(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    bool leq(Element x, Element y) const { return leq_[x * size_ + y]; }
    // x <= y and not y <= x.
    bool strictly_less(Element x, Element y) const { return leq(x, y) && !leq(y, x); }

    bool is_reflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric() const;
    bool is_preorder() const { return is_reflexive() && is_transitive(); }
    bool is_partial_order() const { return is_preorder() && is_antisymmetric(); }
    // x <= y implies zx <= zy and xz <= yz.
    bool is_stable(const Monoid& monoid) const;

    bool operator==(const OrderRelation&) const = default;

private:
    std::size_t size_;
    std::vector<bool> leq_;
};

bool is_upper_set(const OrderRelation& order, const ElementSet& set);

// Element set that is upward closed for a given order.
class UpperSet {
public:
    // Throws InvalidArgument if `members` is not upward closed.
    UpperSet(const OrderRelation& order, ElementSet members);

    const ElementSet& members() const noexcept { return members_; }
    bool contains(Element x) const { return members_.contains(x); }

    bool operator==(const UpperSet&) const = default;

private:
    ElementSet members_;
};

} // namespace diffhier

#endif
