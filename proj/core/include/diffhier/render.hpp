#ifndef DIFFHIER_RENDER_HPP
#define DIFFHIER_RENDER_HPP

#include <string>

#include "diffhier/dfa.hpp"
#include "diffhier/monoid.hpp"

namespace diffhier {

// Multiplication table with rows and columns labelled by element names and
// a `*` in front of idempotent rows.
std::string render_table(const Monoid& monoid);

// J-classes from the top down, one box per class; inside a box rows are
// R-classes and columns L-classes, idempotents starred.
std::string render_eggbox(const Monoid& monoid);

// One-line description of a language: ∅, A*, a finite or cofinite word
// list, B*, a shuffle ideal by its minimal words, or the automaton size.
std::string describe(const Dfa& language);

} // namespace diffhier

#endif
