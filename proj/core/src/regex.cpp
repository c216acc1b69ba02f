#include "diffhier/regex.hpp"

#include "diffhier/error.hpp"

namespace diffhier {

namespace {

RegexPtr node(RegexNode::Kind kind, char letter = '\0', RegexPtr left = nullptr,
              RegexPtr right = nullptr) {
    return std::make_shared<const RegexNode>(
        RegexNode{kind, letter, std::move(left), std::move(right)});
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    RegexPtr parse() {
        skip_blanks();
        if (at_end()) {
            throw ParseError("empty expression", pos_);
        }
        RegexPtr result = expr();
        skip_blanks();
        if (!at_end()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_blanks() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                             text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    char peek() {
        skip_blanks();
        return at_end() ? '\0' : text_[pos_];
    }

    // Anything that is not an operator or a closing parenthesis starts a new
    // factor; unknown letters are then reported by atom().
    static bool starts_atom(char c) {
        return c != '\0' && c != '+' && c != '-' && c != '*' && c != ')';
    }

    RegexPtr expr() {
        RegexPtr left = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                left = make_union(std::move(left), term());
            } else if (c == '-') {
                ++pos_;
                left = make_difference(std::move(left), term());
            } else {
                return left;
            }
        }
    }

    RegexPtr term() {
        RegexPtr left = factor();
        while (starts_atom(peek())) {
            left = make_concat(std::move(left), factor());
        }
        return left;
    }

    RegexPtr factor() {
        RegexPtr inner = atom();
        while (peek() == '*') {
            ++pos_;
            inner = make_star(std::move(inner));
        }
        return inner;
    }

    RegexPtr atom() {
        char c = peek();
        if (c == '\0') {
            throw ParseError("unexpected end of expression", pos_);
        }
        if (c == '(') {
            std::size_t open = pos_++;
            if (peek() == ')') {
                throw ParseError("empty parentheses", pos_);
            }
            RegexPtr inner = expr();
            if (peek() != ')') {
                throw ParseError("unbalanced '('", open);
            }
            ++pos_;
            return inner;
        }
        if (c == '0') {
            ++pos_;
            return make_empty();
        }
        if (c == '1') {
            ++pos_;
            return make_epsilon();
        }
        if (c == '+' || c == '-' || c == '*' || c == ')') {
            throw ParseError(std::string("unexpected '") + c + "'", pos_);
        }
        if (!alphabet_.contains(c)) {
            throw ParseError(std::string("letter '") + c + "' is not in the alphabet", pos_);
        }
        ++pos_;
        return make_letter(c);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

void render(const RegexNode& n, std::string& out) {
    switch (n.kind) {
    case RegexNode::Kind::Empty: out += '0'; return;
    case RegexNode::Kind::Epsilon: out += '1'; return;
    case RegexNode::Kind::Letter: out += n.letter; return;
    case RegexNode::Kind::Star:
        out += '(';
        render(*n.left, out);
        out += ")*";
        return;
    case RegexNode::Kind::Union:
    case RegexNode::Kind::Difference:
    case RegexNode::Kind::Concat:
        out += '(';
        render(*n.left, out);
        if (n.kind == RegexNode::Kind::Union) {
            out += '+';
        } else if (n.kind == RegexNode::Kind::Difference) {
            out += '-';
        }
        render(*n.right, out);
        out += ')';
        return;
    }
}

} // namespace

RegexPtr make_empty() { return node(RegexNode::Kind::Empty); }
RegexPtr make_epsilon() { return node(RegexNode::Kind::Epsilon); }
RegexPtr make_letter(char c) { return node(RegexNode::Kind::Letter, c); }
RegexPtr make_union(RegexPtr l, RegexPtr r) {
    return node(RegexNode::Kind::Union, '\0', std::move(l), std::move(r));
}
RegexPtr make_concat(RegexPtr l, RegexPtr r) {
    return node(RegexNode::Kind::Concat, '\0', std::move(l), std::move(r));
}
RegexPtr make_star(RegexPtr inner) {
    return node(RegexNode::Kind::Star, '\0', std::move(inner));
}
RegexPtr make_difference(RegexPtr l, RegexPtr r) {
    return node(RegexNode::Kind::Difference, '\0', std::move(l), std::move(r));
}

Regex::Regex(Alphabet alphabet, RegexPtr root) : alphabet_(std::move(alphabet)), root_(std::move(root)) {
    if (!root_) {
        throw InvalidArgument("regex without a root");
    }
}

std::string Regex::to_string() const {
    std::string out;
    render(*root_, out);
    return out;
}

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
    return Regex(alphabet, Parser(text, alphabet).parse());
}

bool structurally_equal(const RegexNode& a, const RegexNode& b) {
    if (a.kind != b.kind || a.letter != b.letter) {
        return false;
    }
    if (static_cast<bool>(a.left) != static_cast<bool>(b.left) ||
        static_cast<bool>(a.right) != static_cast<bool>(b.right)) {
        return false;
    }
    return (!a.left || structurally_equal(*a.left, *b.left)) &&
           (!a.right || structurally_equal(*a.right, *b.right));
}

} // namespace diffhier
