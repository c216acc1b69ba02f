#include "diffhier/json_io.hpp"

#include <string>

#include "diffhier/automata.hpp"
#include "diffhier/error.hpp"
#include "diffhier/regex.hpp"

namespace diffhier {

namespace {

Json alphabet_json(const Alphabet& alphabet) {
    Json letters = Json::array();
    for (char c : alphabet.letters())
        letters.push_back(std::string(1, c));
    return letters;
}

Alphabet alphabet_from_json(const Json& json) {
    if (!json.is_array())
        throw InvalidArgument("alphabet must be an array of one-letter strings");
    std::string letters;
    for (const Json& l : json) {
        if (!l.is_string() || l.get<std::string>().size() != 1)
            throw InvalidArgument("alphabet must be an array of one-letter strings");
        letters += l.get<std::string>();
    }
    return Alphabet(letters);
}

const Json& field(const Json& json, const char* key) {
    if (!json.is_object() || !json.contains(key))
        throw InvalidArgument(std::string("missing field '") + key + "'");
    return json.at(key);
}

} // namespace

Json to_json(const Dfa& dfa) {
    const Alphabet& alphabet = dfa.alphabet();
    Json transitions = Json::array();
    for (State q = 0; static_cast<std::size_t>(q) < dfa.num_states(); ++q) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            State r = dfa.next(q, a);
            if (r != kNoState)
                transitions.push_back(Json::array({q, std::string(1, alphabet.letter(a)), r}));
        }
    }
    return Json{{"alphabet", alphabet_json(alphabet)},
                {"states", dfa.num_states()},
                {"initial", dfa.initial()},
                {"finals", dfa.final_states()},
                {"complete", dfa.is_complete()},
                {"transitions", std::move(transitions)}};
}

Dfa dfa_from_json(const Json& json) {
    try {
        Alphabet alphabet = alphabet_from_json(field(json, "alphabet"));
        const std::size_t n = field(json, "states").get<std::size_t>();
        const State initial = field(json, "initial").get<State>();
        std::vector<bool> finals(n, false);
        for (const Json& f : field(json, "finals")) {
            auto q = f.get<long long>();
            if (q < 0 || static_cast<std::size_t>(q) >= n)
                throw InvalidArgument("final state " + std::to_string(q) + " does not exist");
            finals[static_cast<std::size_t>(q)] = true;
        }
        std::vector<State> delta(n * alphabet.size(), kNoState);
        for (const Json& t : field(json, "transitions")) {
            if (!t.is_array() || t.size() != 3)
                throw InvalidArgument("transition must be [from, letter, to]");
            auto from = t[0].get<long long>();
            auto to = t[2].get<long long>();
            std::string letter = t[1].get<std::string>();
            if (from < 0 || static_cast<std::size_t>(from) >= n || to < 0 || static_cast<std::size_t>(to) >= n)
                throw InvalidArgument("transition refers to a missing state");
            if (letter.size() != 1 || !alphabet.contains(letter[0]))
                throw InvalidArgument("transition letter '" + letter + "' is not in the alphabet");
            State& slot = delta[static_cast<std::size_t>(from) * alphabet.size() + *alphabet.index_of(letter[0])];
            if (slot != kNoState && slot != static_cast<State>(to))
                throw InvalidArgument("automaton is not deterministic");
            slot = static_cast<State>(to);
        }
        return Dfa(std::move(alphabet), n, initial, std::move(finals), std::move(delta));
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed automaton: ") + e.what());
    }
}

Json to_json(const DifferenceChain& chain) {
    Json terms = Json::array();
    for (const Dfa& t : chain.terms())
        terms.push_back(to_json(t));
    return Json{{"lattice", chain.lattice_tag()},
                {"alphabet", alphabet_json(chain.alphabet())},
                {"terms", std::move(terms)}};
}

DifferenceChain chain_from_json(const Json& json, const std::optional<Alphabet>& alphabet) {
    try {
        std::optional<Alphabet> sigma = alphabet;
        if (json.is_object() && json.contains("alphabet"))
            sigma = alphabet_from_json(json.at("alphabet"));
        std::vector<Dfa> terms;
        for (const Json& t : field(json, "terms")) {
            if (t.is_string()) {
                if (!sigma)
                    throw InvalidArgument("regex terms need an alphabet");
                terms.push_back(compile(t.get<std::string>(), *sigma));
            } else {
                terms.push_back(dfa_from_json(t));
            }
        }
        if (!sigma) {
            if (terms.empty())
                throw InvalidArgument("empty chain needs an alphabet");
            sigma = terms.front().alphabet();
        }
        std::string tag = json.value("lattice", std::string());
        return DifferenceChain(*sigma, std::move(terms), std::move(tag));
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed chain: ") + e.what());
    }
}

Json to_json(const ApproximationReport& report) {
    Json j{{"status", std::string(to_string(report.status))},
           {"level", report.level},
           {"chain", to_json(report.chain)},
           {"iterations", report.iterations}};
    if (!report.shortcut.empty()) {
        j["shortcut"] = report.shortcut;
        j["search_status"] = std::string(to_string(report.search_status));
    }
    if (!report.reading.empty())
        j["reading"] = report.reading;
    return j;
}

Json monoid_to_json(const Stamp& stamp, const ElementSet* image) {
    const Monoid& m = stamp.monoid();
    auto names_of = [&](const std::vector<Element>& xs) {
        Json out = Json::array();
        for (Element x : xs)
            out.push_back(m.name(x));
        return out;
    };
    std::vector<Element> all(m.size());
    for (Element x = 0; x < m.size(); ++x)
        all[x] = x;
    Json table = Json::array();
    for (Element x = 0; x < m.size(); ++x) {
        Json row = Json::array();
        for (Element y = 0; y < m.size(); ++y)
            row.push_back(m.name(m.multiply(x, y)));
        table.push_back(std::move(row));
    }
    Json generators = Json::object();
    for (std::size_t a = 0; a < stamp.alphabet().size(); ++a)
        generators[std::string(1, stamp.alphabet().letter(a))] = m.name(stamp.image(a));
    Json classes = Json::array();
    for (const auto& c : j_classes(m))
        classes.push_back(names_of(c));
    auto zero = m.zero();
    Json j{{"size", m.size()},
           {"elements", names_of(all)},
           {"generators", std::move(generators)},
           {"table", std::move(table)},
           {"idempotents", names_of(idempotents(m).members())},
           {"zero", zero ? Json(m.name(*zero)) : Json(nullptr)},
           {"j_classes", std::move(classes)},
           {"j_depth", j_depth(m)}};
    if (image) {
        j["image"] = names_of(image->members());
        OrderRelation order = syntactic_order(m, *image);
        Json pairs = Json::array();
        for (Element x = 0; x < m.size(); ++x)
            for (Element y = 0; y < m.size(); ++y)
                if (x != y && order.leq(x, y))
                    pairs.push_back(Json::array({m.name(x), m.name(y)}));
        j["order"] = std::move(pairs);
        PredicateReport p = predicates(stamp, *image);
        j["predicates"] = Json{{"shuffle_ideal", p.shuffle_ideal},
                               {"piecewise_testable", p.piecewise_testable},
                               {"idempotent_commutative", p.idempotent_commutative},
                               {"copolg", p.copolg},
                               {"bpolg", p.bpolg}};
    }
    return j;
}

Json to_json(const PropertyCheck& check) {
    Json j{{"holds", check.holds}};
    if (!check.holds) {
        j["condition"] = check.condition;
        j["witness"] = check.witness;
        j["detail"] = check.detail;
    }
    return j;
}

Json to_json(const CyclicLevelReport& report) {
    Json decomposition = Json::array();
    for (const Dfa& t : report.chain.terms())
        decomposition.push_back(to_json(t));
    return Json{{"cyclic", true},
                {"strongly_cyclic", report.strongly_cyclic},
                {"ell", report.ell},
                {"witness_chain", report.witness_names},
                {"decomposition", std::move(decomposition)}};
}

} // namespace diffhier
