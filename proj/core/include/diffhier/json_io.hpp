#ifndef DIFFHIER_JSON_IO_HPP
#define DIFFHIER_JSON_IO_HPP

#include <optional>

#ifdef DIFFHIER_VENDORED_JSON
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif

#include "diffhier/chains.hpp"
#include "diffhier/cyclic.hpp"
#include "diffhier/dfa.hpp"
#include "diffhier/hierarchy.hpp"
#include "diffhier/monoid.hpp"
#include "diffhier/syntactic.hpp"

namespace diffhier {

using Json = nlohmann::json;

// {"alphabet":["a","b"],"states":n,"initial":0,"finals":[...],
//  "complete":bool,"transitions":[[from,"a",to],...]}. Missing transitions
// make the automaton partial; "complete" is ignored on input.
Json to_json(const Dfa& dfa);
Dfa dfa_from_json(const Json& json);

// {"lattice":tag,"alphabet":[...],"terms":[...]}; on input a term is either
// an automaton object or a regex string over the chain's alphabet, which
// must then be given (directly or through `alphabet`).
Json to_json(const DifferenceChain& chain);
DifferenceChain chain_from_json(const Json& json, const std::optional<Alphabet>& alphabet = std::nullopt);

// {"status":...,"level":n,"chain":{...},"iterations":n} plus "shortcut" and
// "reading" when set.
Json to_json(const ApproximationReport& report);

// Multiplication table by element names, idempotents, zero, J-classes and,
// when an image is given, the image, the syntactic order and predicates.
Json monoid_to_json(const Stamp& stamp, const ElementSet* image = nullptr);

Json to_json(const PropertyCheck& check);

// {"cyclic":true,"strongly_cyclic":...,"ell":n,"witness_chain":[names],
//  "decomposition":[automata]}.
Json to_json(const CyclicLevelReport& report);

} // namespace diffhier

#endif
