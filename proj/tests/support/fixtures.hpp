#ifndef DIFFHIER_TESTS_FIXTURES_HPP
#define DIFFHIER_TESTS_FIXTURES_HPP

#include "diffhier/alphabet.hpp"
#include "diffhier/automata.hpp"
#include "diffhier/dfa.hpp"

namespace fixtures {

using diffhier::Alphabet;
using diffhier::Dfa;

inline const Alphabet& ab() {
    static const Alphabet a("ab");
    return a;
}
inline const Alphabet& abc() {
    static const Alphabet a("abc");
    return a;
}

// Factors of abc.
inline constexpr const char* kFactorsOfAbc = "1+a+b+c+ab+bc+abc";
// Words with an a, plus b*.
inline constexpr const char* kLetterStarExample = "((a+b+c)*-(b+c)*)+((a+b)*-a*)+1";
// The cyclic language with a 9-element syntactic monoid.
inline constexpr const char* kCyclicExample = "(b+aa)*+(ab*a)*+a*-b*+1";

inline Dfa lang(const char* regex, const Alphabet& alphabet) {
    return diffhier::compile(regex, alphabet);
}

// Two states: 0·a = 1, 1·a = 0, 0·b = 0, 1·b undefined.
inline Dfa stab_example() {
    using diffhier::kNoState;
    return Dfa(ab(), 2, 0, {true, false}, {1, 0, 0, kNoState});
}

} // namespace fixtures

#endif
