#include "doctest.h"

#include <random>

#include "diffhier/automata.hpp"
#include "diffhier/closure.hpp"
#include "diffhier/cyclic.hpp"
#include "diffhier/error.hpp"
#include "diffhier/json_io.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace diffhier;
using fixtures::ab;
using fixtures::abc;
using fixtures::lang;

TEST_CASE("automaton JSON round trip") {
    std::mt19937 rng(191);
    for (int i = 0; i < 100; ++i) {
        Dfa d = oracle::random_dfa(rng, abc(), 1 + i % 5, i % 2 == 0);
        Json j = to_json(d);
        Dfa back = dfa_from_json(Json::parse(j.dump()));
        CHECK(back == d);
        CHECK(j["complete"].get<bool>() == d.is_complete());
    }
    Dfa partial = fixtures::stab_example();
    Json j = to_json(partial);
    CHECK(j["transitions"].size() == 3);
    CHECK(j["finals"] == Json::array({0}));
}

TEST_CASE("malformed automata are rejected") {
    CHECK_THROWS_AS(dfa_from_json(Json::parse(R"({"alphabet":["a"],"states":1,"initial":0})")), InvalidArgument);
    CHECK_THROWS_AS(dfa_from_json(Json::parse(R"({"alphabet":["a"],"states":1,"initial":3,"finals":[],"transitions":[]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(dfa_from_json(Json::parse(R"({"alphabet":["a"],"states":1,"initial":0,"finals":[],"transitions":[[0,"b",0]]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(dfa_from_json(Json::parse(R"({"alphabet":["a"],"states":2,"initial":0,"finals":[],"transitions":[[0,"a",0],[0,"a",1]]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(dfa_from_json(Json::parse(R"({"alphabet":["a"],"states":"x","initial":0,"finals":[],"transitions":[]})")),
                    InvalidArgument);
}

TEST_CASE("chain JSON") {
    DifferenceChain c(abc(), {universal_language(abc()), lang("(b+c)*", abc()), lang("b*", abc())}, "alphabet-star");
    Json j = to_json(c);
    CHECK(j["lattice"] == "alphabet-star");
    DifferenceChain back = chain_from_json(Json::parse(j.dump()));
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(equivalent(back.term(i), c.term(i)));
    CHECK(back.lattice_tag() == "alphabet-star");

    DifferenceChain r = chain_from_json(Json::parse(R"({"alphabet":["a","b","c"],"terms":["(a+b+c)*","(b+c)*","b*"]})"));
    CHECK(equivalent(eval_chain(r), lang(fixtures::kLetterStarExample, abc())));
    DifferenceChain given = chain_from_json(Json::parse(R"({"terms":["a*"]})"), ab());
    CHECK(given.alphabet() == ab());
    CHECK_THROWS(chain_from_json(Json::parse(R"({"terms":["a*"]})")));
    CHECK_THROWS_AS(chain_from_json(Json::parse(R"({"alphabet":["a","b"],"terms":["a","a+b"]})")), InvalidArgument);
}

TEST_CASE("report JSON") {
    ApproximationReport r = best_approximation(lang(fixtures::kFactorsOfAbc, abc()), shuffle_operator(abc()));
    Json j = to_json(r);
    CHECK(j["status"] == "member_at_level");
    CHECK(j["level"] == 4);
    CHECK(j["iterations"] == 5);
    CHECK(j["chain"]["terms"].size() == 4);
    CHECK(equivalent(eval_chain(chain_from_json(j["chain"])), lang(fixtures::kFactorsOfAbc, abc())));

    ApproximationReport d = decide_level(lang("(ab)*", ab()), "shuffle", 4);
    Json dj = to_json(d);
    CHECK(dj["status"] == "not_in_boolean_closure");
    CHECK(dj.contains("shortcut"));
    CHECK(dj["search_status"] == "not_member_up_to");

    CyclicLevelReport c = cyclic_level(lang(fixtures::kCyclicExample, ab()));
    Json cj = to_json(c);
    CHECK(cj["cyclic"] == true);
    CHECK(cj["strongly_cyclic"] == false);
    CHECK(cj["ell"] == 3);
    CHECK(cj["witness_chain"].size() == 3);
    CHECK(cj["decomposition"].size() == 3);
    DifferenceChain terms(ab());
    std::vector<Dfa> parts;
    for (const Json& t : cj["decomposition"])
        parts.push_back(dfa_from_json(t));
    CHECK(equivalent(eval_chain(DifferenceChain(ab(), parts)), lang(fixtures::kCyclicExample, ab())));
}

TEST_CASE("monoid JSON") {
    Dfa l = lang(fixtures::kCyclicExample, ab());
    Stamp s = syntactic_stamp(l);
    ElementSet p = syntactic_image(s, l);
    Json j = monoid_to_json(s, &p);
    CHECK(j["size"] == 9);
    CHECK(j["zero"] == "bab");
    CHECK(j["idempotents"].size() == 6);
    CHECK(j["image"].size() == 5);
    CHECK(j["j_depth"] == 4);
    CHECK(j.contains("order"));
    CHECK(j["predicates"]["piecewise_testable"] == false);
    Json bare = monoid_to_json(s);
    CHECK(!bare.contains("image"));
}
