#include "diffhier/closure.hpp"

#include "diffhier/automata.hpp"
#include "diffhier/error.hpp"

namespace diffhier {

ClosureOperator::ClosureOperator(std::string name, Alphabet universe, Function close)
    : name_(std::move(name)), universe_(std::move(universe)), close_(std::move(close)) {
    if (!close_) {
        throw InvalidArgument("closure operator without a function");
    }
}

Dfa ClosureOperator::close(const Dfa& language) const {
    if (!(language.alphabet() == universe_)) {
        throw AlphabetMismatch();
    }
    return close_(language);
}

Dfa shuffle_ideal_closure(const Dfa& language) {
    // A self-loop on every letter at every state lets arbitrary letters be
    // inserted anywhere between the letters of an accepted word.
    Nfa nfa = to_nfa(language);
    for (std::size_t q = 0; q < nfa.num_states(); ++q) {
        for (std::size_t a = 0; a < nfa.alphabet().size(); ++a) {
            nfa.add_edge(static_cast<State>(q), a, static_cast<State>(q));
        }
    }
    return minimize(determinize(nfa));
}

Dfa alphabet_star_closure(const Dfa& language) {
    if (is_empty(language)) {
        return empty_language(language.alphabet());
    }
    return letters_star(language.alphabet(), used_letters(language));
}

Dfa trivial_closure(const Dfa& language) {
    return is_empty(language) ? empty_language(language.alphabet())
                              : universal_language(language.alphabet());
}

ClosureOperator shuffle_operator(const Alphabet& alphabet) {
    return ClosureOperator("shuffle", alphabet, shuffle_ideal_closure);
}

ClosureOperator alphabet_star_operator(const Alphabet& alphabet) {
    return ClosureOperator("alphabet-star", alphabet, alphabet_star_closure);
}

ClosureOperator trivial_operator(const Alphabet& alphabet) {
    return ClosureOperator("trivial", alphabet, trivial_closure);
}

ClosureOperator intersect_closures(const ClosureOperator& c1, const ClosureOperator& c2) {
    if (!(c1.universe() == c2.universe())) {
        throw AlphabetMismatch();
    }
    return ClosureOperator("intersect:" + c1.name() + "," + c2.name(), c1.universe(),
                           [c1, c2](const Dfa& x) {
                               return product(BoolOp::Intersection, c1.close(x), c2.close(x));
                           });
}

ClosureOperator make_closure(std::string_view name, const Alphabet& alphabet) {
    if (name == "trivial") {
        return trivial_operator(alphabet);
    }
    if (name == "shuffle") {
        return shuffle_operator(alphabet);
    }
    if (name == "alphabet-star") {
        return alphabet_star_operator(alphabet);
    }
    constexpr std::string_view prefix = "intersect:";
    if (name.substr(0, prefix.size()) == prefix) {
        const std::string_view rest = name.substr(prefix.size());
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
            throw InvalidArgument("intersect: expects two comma-separated lattice names");
        }
        return intersect_closures(make_closure(rest.substr(0, comma), alphabet),
                                  make_closure(rest.substr(comma + 1), alphabet));
    }
    throw InvalidArgument("unknown lattice '" + std::string(name) + "'");
}

bool is_closed(const ClosureOperator& op, const Dfa& language) {
    return equivalent(op.close(language), language);
}

std::optional<AxiomViolation> check_axioms(const ClosureOperator& op, std::span<const Dfa> samples) {
    const Dfa empty = empty_language(op.universe());
    if (!is_empty(op.close(empty))) {
        return AxiomViolation{"empty", empty, std::nullopt};
    }
    for (const Dfa& x : samples) {
        const Dfa cx = op.close(x);
        if (!is_subset(x, cx)) {
            return AxiomViolation{"extensive", x, std::nullopt};
        }
        if (!equivalent(op.close(cx), cx)) {
            return AxiomViolation{"idempotent", x, std::nullopt};
        }
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Dfa& x = samples[i];
        const Dfa& y = samples[(i + 1) % samples.size()];
        const Dfa bigger = product(BoolOp::Union, x, y);
        if (!is_subset(op.close(x), op.close(bigger))) {
            return AxiomViolation{"isotone", x, bigger};
        }
    }
    return std::nullopt;
}

} // namespace diffhier
