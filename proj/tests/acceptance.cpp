// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "diffhier/automata.hpp"
#include "diffhier/chains.hpp"
#include "diffhier/closure.hpp"
#include "diffhier/cyclic.hpp"
#include "diffhier/hierarchy.hpp"
#include "diffhier/syntactic.hpp"
#include "support/fixtures.hpp"

using namespace diffhier;
using fixtures::ab;
using fixtures::abc;
using fixtures::lang;

namespace {

struct Check {
    bool ok = true;
    std::string why;
    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            why = what;
        }
    }
};

// Shuffle ideal generated by `words`, written out as a regex.
std::string ideal_regex(const std::vector<std::string>& words) {
    std::string out;
    for (const std::string& w : words) {
        if (!out.empty())
            out += "+";
        out += "(a+b+c)*";
        for (char c : w)
            out += std::string(1, c) + "(a+b+c)*";
    }
    return out;
}

Check factors_of_abc() {
    Check c;
    Dfa l = lang(fixtures::kFactorsOfAbc, abc());
    ApproximationReport r = best_approximation(l, shuffle_operator(abc()));
    std::vector<Dfa> expected{
        lang("(a+b+c)*", abc()),
        lang("(a+b+c)*-(1+a+b+c+ab+bc)", abc()),
        lang(ideal_regex({"abc"}).c_str(), abc()),
        lang(ideal_regex({"aabc", "abac", "abca", "babc", "abbc", "abcb", "cabc", "acbc", "abcc"}).c_str(), abc()),
        lang("0", abc()),
    };
    c.require(r.sequence.size() == 5, "expected five terms, got " + std::to_string(r.sequence.size()));
    for (std::size_t i = 0; c.ok && i < 5; ++i)
        c.require(equivalent(r.sequence[i], expected[i]), "L" + std::to_string(i + 1) + " differs");
    c.require(r.status == ApproximationStatus::MemberAtLevel && r.level == 4, "status is not member_at_level 4");
    c.require(equivalent(eval_chain(r.chain), l), "chain does not evaluate to L");
    ApproximationReport three = best_approximation(l, shuffle_operator(abc()), 3);
    c.require(three.status == ApproximationStatus::NotMemberUpTo, "L reported in B3");
    return c;
}

Check letter_star() {
    Check c;
    Dfa l = lang(fixtures::kLetterStarExample, abc());
    ApproximationReport r = best_approximation(l, alphabet_star_operator(abc()));
    c.require(r.status == ApproximationStatus::MemberAtLevel && r.level == 3, "level is not 3");
    c.require(r.chain.size() == 3, "chain length is not 3");
    if (c.ok) {
        c.require(equivalent(r.chain.term(0), lang("(a+b+c)*", abc())), "first term is not {a,b,c}*");
        c.require(equivalent(r.chain.term(1), lang("(b+c)*", abc())), "second term is not {b,c}*");
        c.require(equivalent(r.chain.term(2), lang("b*", abc())), "third term is not b*");
    }
    c.require(equivalent(eval_chain(r.chain), l), "chain does not evaluate to L");
    return c;
}

Check stabilisers() {
    Check c;
    Dfa d = fixtures::stab_example();
    Dfa s1 = stab_subset(d, {0}), s2 = stab_subset(d, {1}), s12 = stab_subset(d, {0, 1});
    c.require(equivalent(s1, lang("(b+aa)*", ab())), "Stab({1}) is not (b+aa)*");
    c.require(equivalent(s2, lang("(ab*a)*", ab())), "Stab({2}) is not (ab*a)*");
    c.require(equivalent(s12, lang("a*", ab())), "Stab({1,2}) is not a*");
    Dfa all = product(BoolOp::Union, product(BoolOp::Union, s1, s2), s12);
    c.require(equivalent(stab_automaton(d), all), "Stab(A) is not the union");
    return c;
}

Check cyclic_example() {
    Check c;
    Dfa l = lang(fixtures::kCyclicExample, ab());
    Stamp s = syntactic_stamp(l);
    const Monoid& m = s.monoid();
    c.require(m.size() == 9, "monoid has " + std::to_string(m.size()) + " elements");
    if (!c.ok)
        return c;
    auto el = [&](const char* w) { return s.evaluate(w); };
    c.require(el("bb") == el("b"), "bb != b");
    c.require(el("aaa") == el("a"), "a^3 != a");
    c.require(el("baa") == el("aab"), "baa != a^2 b");
    c.require(el("aaba") == el("ba"), "a^2 ba != ba");
    c.require(m.zero() && el("bab") == *m.zero(), "bab is not the zero");
    ElementSet ids(m.size());
    for (const char* w : {"", "b", "aa", "aab", "aba", "bab"})
        ids.insert(el(w));
    c.require(idempotents(m) == ids, "idempotents differ");
    ElementSet image(m.size());
    for (const char* w : {"", "a", "aa", "aba", "aab"})
        image.insert(el(w));
    ElementSet p = syntactic_image(s, l);
    c.require(p == image, "syntactic image differs");
    EllResult e = ell(s, p);
    c.require(e.value && *e.value == 3, "ell is not 3");
    c.require(is_idempotent_chain(m, e.witness) && e.witness.elements.size() == 3, "witness chain invalid");
    c.require(is_idempotent_chain(m, IdempotentChain{{el("aba"), el("b"), el("")}, p}), "(aba, b, 1) does not validate");
    CyclicLevelReport r = cyclic_level(l);
    c.require(r.chain.size() == 3, "decomposition does not have 3 terms");
    for (const Dfa& t : r.chain.terms())
        c.require(is_strongly_cyclic(t).holds, "a term is not strongly cyclic");
    c.require(equivalent(eval_chain(r.chain), l), "decomposition does not evaluate to L");
    return c;
}

// Counts the test cases that actually ran, so a mistyped name cannot pass.
int g_cases_run = 0;

struct CountingListener : doctest::IReporter {
    explicit CountingListener(const doctest::ContextOptions&) {}
    void report_query(const doctest::QueryData&) override {}
    void test_run_start() override {}
    void test_run_end(const doctest::TestRunStats&) override {}
    void test_case_start(const doctest::TestCaseData&) override { ++g_cases_run; }
    void test_case_reenter(const doctest::TestCaseData&) override {}
    void test_case_end(const doctest::CurrentTestCaseStats&) override {}
    void test_case_exception(const doctest::TestCaseException&) override {}
    void subcase_start(const doctest::SubcaseSignature&) override {}
    void subcase_end() override {}
    void log_assert(const doctest::AssertData&) override {}
    void log_message(const doctest::MessageData&) override {}
    void test_case_skipped(const doctest::TestCaseData&) override {}
};
REGISTER_LISTENER("counting", 1, CountingListener);

Check property_suites() {
    const std::vector<std::string> suites{
        "closure axioms hold for every shipped operator",
        "mu examples and parity law",
        "intersect_chains and union_chains",
        "symmetric difference conversions",
        "the best approximation beats random competitors",
        "strongly cyclic implies cyclic",
        "S1 and S2 match the idempotent criterion on cyclic languages",
        "ell does not depend on the recognising monoid",
        "ell is subadditive under symmetric difference",
        "ell on random cyclic languages",
        "chain lengths and levels on random ordered monoids",
    };
    Check c;
    for (const std::string& name : suites) {
        doctest::Context context;
        std::ostringstream log;
        context.setCout(&log);
        context.setOption("test-case", name.c_str());
        context.setOption("no-version", true);
        g_cases_run = 0;
        int failed = context.run();
        if (failed != 0 || g_cases_run != 1) {
            std::cerr << log.str();
            c.require(false, g_cases_run != 1 ? "suite not found: " + name : "suite failed: " + name);
        }
    }
    return c;
}

Check negative_witness() {
    Check c;
    Dfa l = lang(fixtures::kFactorsOfAbc, abc());
    Stamp s = syntactic_stamp(l);
    ElementSet p = syntactic_image(s, l);
    c.require(s.monoid().size() == 8, "monoid does not have 8 elements");
    StableChainSearch r = max_chain_over_stable_orders(s.monoid(), p);
    c.require(r.length < 4, "a stable order admits a chain of length " + std::to_string(r.length));
    c.require(best_approximation(l, shuffle_operator(abc())).level == 4, "shuffle level is not 4");
    return c;
}

Check non_membership() {
    Check c;
    Dfa l = lang("(ab)*", ab());
    for (std::size_t n : {4u, 8u, 16u}) {
        ApproximationReport r = best_approximation(l, shuffle_operator(ab()), n);
        c.require(r.status == ApproximationStatus::NotMemberUpTo && r.level == n,
                  "max level " + std::to_string(n) + ": not not_member_up_to");
        for (std::size_t i = 1; i < r.sequence.size(); ++i)
            c.require(is_subset(r.sequence[i], r.sequence[i - 1]) && !equivalent(r.sequence[i], r.sequence[i - 1]),
                      "terms do not strictly decrease");
        ApproximationReport d = decide_level(l, "shuffle", n);
        c.require(d.status == ApproximationStatus::NotInBooleanClosure, "shortcut did not upgrade the verdict");
    }
    return c;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit_seconds;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "best approximation of the factors of abc (shuffle ideals)", 5, factors_of_abc},
        {2, "alphabet-star chain ({a,b,c}*, {b,c}*, b*)", 1, letter_star},
        {3, "stabilisers of the two-state automaton", 1, stabilisers},
        {4, "cyclic example monoid, ell = 3 and decomposition", 5, cyclic_example},
        {5, "randomized property suites", 600, property_suites},
        {6, "stable orders on the syntactic monoid stay below level 4", 600, negative_witness},
        {7, "(ab)* is not piecewise testable", 30, non_membership},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.ok && seconds >= c.limit_seconds)
            result.require(false, "too slow");
        std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", result.ok ? "PASS" : "FAIL", c.id, c.title,
                    seconds, c.limit_seconds, result.ok ? "" : ": ", result.why.c_str());
        failures += result.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
