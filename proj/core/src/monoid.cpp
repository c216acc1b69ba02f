#include "diffhier/monoid.hpp"

#include <algorithm>
#include <set>

#include "diffhier/error.hpp"

namespace diffhier {

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members)
    : bits_(universe, false) {
    for (Element x : members) {
        insert(x);
    }
}

ElementSet ElementSet::all(std::size_t universe) {
    ElementSet s(universe);
    s.bits_.assign(universe, true);
    return s;
}

std::size_t ElementSet::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Element> ElementSet::members() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out.push_back(static_cast<Element>(i));
        }
    }
    return out;
}

ElementSet ElementSet::complement() const {
    ElementSet c = *this;
    c.bits_.flip();
    return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    if (other.universe() != universe()) {
        throw InvalidArgument("element sets over different monoids");
    }
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) {
            return false;
        }
    }
    return true;
}

Monoid::Monoid(std::size_t size, std::vector<Element> table, Element identity, std::vector<Word> names)
    : size_(size), table_(std::move(table)), identity_(identity), names_(std::move(names)) {
    if (size_ == 0) {
        throw InvalidArgument("a monoid has at least one element");
    }
    if (table_.size() != size_ * size_) {
        throw InvalidArgument("multiplication table has the wrong shape");
    }
    if (identity_ >= size_) {
        throw InvalidArgument("identity out of range");
    }
    for (Element v : table_) {
        if (v >= size_) {
            throw InvalidArgument("table entry out of range");
        }
    }
    for (Element x = 0; x < size_; ++x) {
        if (multiply(identity_, x) != x || multiply(x, identity_) != x) {
            throw InvalidArgument("identity law fails for element " + std::to_string(x));
        }
    }
    for (Element x = 0; x < size_; ++x) {
        for (Element y = 0; y < size_; ++y) {
            const Element xy = multiply(x, y);
            for (Element z = 0; z < size_; ++z) {
                if (multiply(xy, z) != multiply(x, multiply(y, z))) {
                    throw InvalidArgument("multiplication is not associative");
                }
            }
        }
    }
    check_names();
}

Monoid::Monoid(Unchecked, std::size_t size, std::vector<Element> table, Element identity,
               std::vector<Word> names)
    : size_(size), table_(std::move(table)), identity_(identity), names_(std::move(names)) {
    check_names();
}

void Monoid::check_names() const {
    if (names_.empty()) {
        return;
    }
    if (names_.size() != size_) {
        throw InvalidArgument("one name per element is required");
    }
    if (!names_[identity_].empty()) {
        throw InvalidArgument("the identity must be named by the empty word");
    }
    std::set<Word> distinct(names_.begin(), names_.end());
    if (distinct.size() != names_.size()) {
        throw InvalidArgument("element names must be pairwise distinct");
    }
}

Element Monoid::power(Element x, std::size_t exponent) const {
    Element result = identity_;
    Element base = x;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = multiply(result, base);
        }
        base = multiply(base, base);
        exponent >>= 1U;
    }
    return result;
}

std::optional<Element> Monoid::zero() const {
    for (Element z = 0; z < size_; ++z) {
        bool absorbing = true;
        for (Element x = 0; x < size_ && absorbing; ++x) {
            absorbing = multiply(z, x) == z && multiply(x, z) == z;
        }
        if (absorbing) {
            return z;
        }
    }
    return std::nullopt;
}

std::string Monoid::name(Element x) const {
    if (x >= size_) {
        throw InvalidArgument("element out of range");
    }
    if (names_.empty()) {
        return "#" + std::to_string(x);
    }
    return format_word(names_[x]);
}

std::optional<Element> Monoid::find(std::string_view word_name) const {
    const std::string_view key = word_name == "1" ? std::string_view() : word_name;
    for (Element x = 0; x < names_.size(); ++x) {
        if (names_[x] == key) {
            return x;
        }
    }
    return std::nullopt;
}

Stamp::Stamp(Monoid monoid, Alphabet alphabet, std::vector<Element> letter_image)
    : monoid_(std::move(monoid)), alphabet_(std::move(alphabet)), letter_image_(std::move(letter_image)) {
    if (letter_image_.size() != alphabet_.size()) {
        throw InvalidArgument("one letter image per letter is required");
    }
    for (Element x : letter_image_) {
        if (x >= monoid_.size()) {
            throw InvalidArgument("letter image out of range");
        }
    }
    // Surjectivity: the submonoid generated by the letter images is everything.
    std::vector<bool> reached(monoid_.size(), false);
    std::vector<Element> frontier{monoid_.identity()};
    reached[monoid_.identity()] = true;
    while (!frontier.empty()) {
        Element x = frontier.back();
        frontier.pop_back();
        for (Element g : letter_image_) {
            Element y = monoid_.multiply(x, g);
            if (!reached[y]) {
                reached[y] = true;
                frontier.push_back(y);
            }
        }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
        throw InvalidArgument("stamp is not surjective");
    }
}

Element Stamp::evaluate(std::string_view word) const {
    Element x = monoid_.identity();
    for (char c : word) {
        auto a = alphabet_.index_of(c);
        if (!a) {
            throw InvalidArgument(std::string("letter '") + c + "' is not in the alphabet");
        }
        x = monoid_.multiply(x, letter_image_[*a]);
    }
    return x;
}

OrderRelation::OrderRelation(std::size_t size, std::vector<bool> leq) : size_(size), leq_(std::move(leq)) {
    if (leq_.size() != size_ * size_) {
        throw InvalidArgument("relation matrix has the wrong shape");
    }
}

OrderRelation OrderRelation::equality(std::size_t size) {
    std::vector<bool> leq(size * size, false);
    for (std::size_t i = 0; i < size; ++i) {
        leq[i * size + i] = true;
    }
    return OrderRelation(size, std::move(leq));
}

OrderRelation OrderRelation::total(std::size_t size) {
    return OrderRelation(size, std::vector<bool>(size * size, true));
}

bool OrderRelation::is_reflexive() const {
    for (Element x = 0; x < size_; ++x) {
        if (!leq(x, x)) {
            return false;
        }
    }
    return true;
}

bool OrderRelation::is_transitive() const {
    for (Element x = 0; x < size_; ++x) {
        for (Element y = 0; y < size_; ++y) {
            if (!leq(x, y)) {
                continue;
            }
            for (Element z = 0; z < size_; ++z) {
                if (leq(y, z) && !leq(x, z)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool OrderRelation::is_antisymmetric() const {
    for (Element x = 0; x < size_; ++x) {
        for (Element y = x + 1; y < size_; ++y) {
            if (leq(x, y) && leq(y, x)) {
                return false;
            }
        }
    }
    return true;
}

bool OrderRelation::is_stable(const Monoid& monoid) const {
    if (monoid.size() != size_) {
        throw InvalidArgument("relation and monoid sizes differ");
    }
    for (Element x = 0; x < size_; ++x) {
        for (Element y = 0; y < size_; ++y) {
            if (!leq(x, y)) {
                continue;
            }
            for (Element z = 0; z < size_; ++z) {
                if (!leq(monoid.multiply(z, x), monoid.multiply(z, y)) ||
                    !leq(monoid.multiply(x, z), monoid.multiply(y, z))) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_upper_set(const OrderRelation& order, const ElementSet& set) {
    if (order.size() != set.universe()) {
        throw InvalidArgument("relation and element set sizes differ");
    }
    for (Element x = 0; x < order.size(); ++x) {
        if (!set.contains(x)) {
            continue;
        }
        for (Element y = 0; y < order.size(); ++y) {
            if (order.leq(x, y) && !set.contains(y)) {
                return false;
            }
        }
    }
    return true;
}

UpperSet::UpperSet(const OrderRelation& order, ElementSet members) : members_(std::move(members)) {
    if (!is_upper_set(order, members_)) {
        throw InvalidArgument("set is not upward closed");
    }
}

} // namespace diffhier
