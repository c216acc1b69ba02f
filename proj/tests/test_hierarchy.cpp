#include "doctest.h"

#include <random>

#include "diffhier/automata.hpp"
#include "diffhier/closure.hpp"
#include "diffhier/error.hpp"
#include "diffhier/hierarchy.hpp"
#include "diffhier/syntactic.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace diffhier;
using fixtures::ab;
using fixtures::abc;
using fixtures::lang;

namespace {

Dfa section5_language() { return lang(fixtures::kFactorsOfAbc, abc()); }

// The four terms of the shuffle-ideal decomposition of the factors of abc.
DifferenceChain section5_chain() {
    return DifferenceChain(abc(),
                           {universal_language(abc()), complement(lang("1+a+b+c+ab+bc", abc())),
                            shuffle_ideal_closure(lang("abc", abc())),
                            shuffle_ideal_closure(lang("aabc+abac+abca+babc+abbc+abcb+cabc+acbc+abcc", abc()))},
                           "shuffle");
}

DifferenceChain section6_chain() {
    return DifferenceChain(abc(), {universal_language(abc()), lang("(b+c)*", abc()), lang("b*", abc())});
}

std::size_t mu_oracle(const DifferenceChain& c, std::string_view w) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.term(i).accepts(w))
            best = i + 1;
    return best;
}

Dfa partial_sum(const DifferenceChain& c, std::size_t j) { return eval_chain(c.truncated(j)); }

bool piecewise_testable(const Dfa& l) { return is_j_trivial(syntactic_stamp(l).monoid()); }

} // namespace

TEST_CASE("chain construction validates its terms") {
    CHECK_THROWS_AS(DifferenceChain(ab(), {lang("a", ab()), lang("a+b", ab())}), InvalidArgument);
    CHECK_THROWS_AS(DifferenceChain(ab(), {lang("a", abc())}), AlphabetMismatch);
    DifferenceChain empty(ab());
    CHECK(empty.empty());
    CHECK(is_empty(eval_chain(empty)));
}

TEST_CASE("eval_chain examples") {
    CHECK(equivalent(eval_chain(section6_chain()), lang(fixtures::kLetterStarExample, abc())));
    CHECK(equivalent(eval_chain(section6_chain()), lang("((a+b+c)*-(b+c)*)+b*", abc())));
    Dfa x = lang("a*b", ab());
    CHECK(equivalent(eval_chain(DifferenceChain(ab(), {x})), x));
    CHECK(equivalent(eval_chain(section5_chain()), section5_language()));
}

TEST_CASE("mu examples and parity law") {
    DifferenceChain c = section5_chain();
    CHECK(mu(c, "abc") == 3);
    CHECK(mu(c, "aa") == 2);
    CHECK(mu(section6_chain(), "") == 3);
    CHECK(mu(DifferenceChain(abc(), {lang("a", abc())}), "b") == 0);

    std::mt19937 rng(71);
    for (int i = 0; i < 100; ++i) {
        DifferenceChain r = gen::random_chain(rng, ab(), 1 + i % 4);
        Dfa e = eval_chain(r);
        for (const Word& w : oracle::all_words(ab(), 6)) {
            std::size_t m = mu(r, w);
            REQUIRE(m == mu_oracle(r, w));
            REQUIRE(e.accepts(w) == (m % 2 == 1));
        }
    }
}

TEST_CASE("complement_chain") {
    Dfa x = lang("ab*", ab());
    DifferenceChain cx = complement_chain(DifferenceChain(ab(), {x}));
    REQUIRE(cx.size() == 2);
    CHECK(equivalent(cx.term(0), universal_language(ab())));
    CHECK(equivalent(cx.term(1), x));
    CHECK(equivalent(eval_chain(complement_chain(section6_chain())), lang("(b+c)*-b*", abc())));

    std::mt19937 rng(73);
    for (int i = 0; i < 100; ++i) {
        DifferenceChain r = gen::random_chain(rng, ab(), 1 + i % 4);
        CHECK(equivalent(eval_chain(complement_chain(r)), complement(eval_chain(r))));
        CHECK(equivalent(eval_chain(complement_chain(complement_chain(r))), eval_chain(r)));
    }
}

TEST_CASE("intersect_chains and union_chains") {
    Dfa x = lang("a(a+b)*", ab()), y = lang("(a+b)*b", ab());
    DifferenceChain z = intersect_chains(DifferenceChain(ab(), {x}), DifferenceChain(ab(), {y}));
    REQUIRE(z.size() == 1);
    CHECK(equivalent(z.term(0), product(BoolOp::Intersection, x, y)));
    CHECK(equivalent(eval_chain(intersect_chains(section6_chain(), DifferenceChain(abc(), {universal_language(abc())}))),
                     eval_chain(section6_chain())));
    CHECK(equivalent(eval_chain(union_chains(DifferenceChain(ab(), {x}), DifferenceChain(ab()))), x));
    CHECK_THROWS_AS(intersect_chains(DifferenceChain(ab(), {x}), section6_chain()), AlphabetMismatch);

    std::mt19937 rng(79);
    for (int i = 0; i < 200; ++i) {
        DifferenceChain p = gen::random_ideal_chain(rng, ab(), 1 + i % 4);
        DifferenceChain q = gen::random_ideal_chain(rng, ab(), 1 + (i / 4) % 4);
        Dfa ep = eval_chain(p), eq = eval_chain(q);
        DifferenceChain meet = intersect_chains(p, q);
        DifferenceChain join = union_chains(p, q);
        CHECK(meet.size() <= p.size() + q.size() - 1);
        CHECK(equivalent(eval_chain(meet), product(BoolOp::Intersection, ep, eq)));
        CHECK(equivalent(eval_chain(join), product(BoolOp::Union, ep, eq)));
        CHECK(equivalent(eval_chain(union_chains(p, complement_chain(p))), universal_language(ab())));
        // The case analysis of the Hausdorff construction, word by word.
        if (i < 40)
            for (const Word& w : oracle::all_words(ab(), 5))
                REQUIRE((mu(meet, w) % 2 == 1) == (mu(p, w) % 2 == 1 && mu(q, w) % 2 == 1));
    }
}

TEST_CASE("symmetric difference conversions") {
    Dfa x = lang("a*", ab());
    CHECK(equivalent(eval_chain(from_symmetric_difference(std::vector<Dfa>{x})), x));
    std::vector<Dfa> twice{x, x};
    DifferenceChain xx = from_symmetric_difference(twice);
    REQUIRE(xx.size() == 2);
    CHECK(equivalent(xx.term(0), x));
    CHECK(equivalent(xx.term(1), x));
    CHECK(is_empty(eval_chain(xx)));

    auto parts = to_symmetric_difference(section6_chain());
    Dfa fold = empty_language(abc());
    for (const Dfa& p : parts)
        fold = product(BoolOp::SymmetricDifference, fold, p);
    CHECK(equivalent(fold, eval_chain(section6_chain())));

    std::mt19937 rng(83);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::vector<Word>> words;
        std::vector<Dfa> triple;
        for (int k = 0; k < 3; ++k) {
            words.push_back(oracle::random_words(rng, ab(), 6, 4));
            triple.push_back(finite_language(ab(), words.back()));
        }
        Dfa e = eval_chain(from_symmetric_difference(triple));
        for (const Word& w : oracle::all_words(ab(), 5)) {
            bool in = false;
            for (const auto& set : words)
                in ^= std::find(set.begin(), set.end(), w) != set.end();
            REQUIRE(e.accepts(w) == in);
        }
    }
}

TEST_CASE("best approximation of the factors of abc") {
    Dfa l = section5_language();
    ApproximationReport r = best_approximation(l, shuffle_operator(abc()));
    CHECK(r.status == ApproximationStatus::MemberAtLevel);
    CHECK(r.level == 4);
    CHECK(r.iterations == 5);
    DifferenceChain expected = section5_chain();
    REQUIRE(r.chain.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(equivalent(r.chain.term(i), expected.term(i)));
    REQUIRE(r.sequence.size() == 5);
    CHECK(is_empty(r.sequence.back()));
    CHECK(equivalent(eval_chain(r.chain), l));
    CHECK(!equivalent(eval_chain(r.chain.truncated(3)), l));
    CHECK(r.chain.lattice_tag() == "shuffle");
}

TEST_CASE("best approximation under the alphabet-star closure") {
    Dfa l = lang(fixtures::kLetterStarExample, abc());
    ApproximationReport r = best_approximation(l, alphabet_star_operator(abc()));
    CHECK(r.status == ApproximationStatus::MemberAtLevel);
    CHECK(r.level == 3);
    DifferenceChain expected = section6_chain();
    REQUIRE(r.chain.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(equivalent(r.chain.term(i), expected.term(i)));
}

TEST_CASE("best approximation edge cases") {
    for (const char* name : {"trivial", "shuffle", "alphabet-star"}) {
        ApproximationReport r = best_approximation(empty_language(ab()), make_closure(name, ab()));
        CHECK(r.status == ApproximationStatus::MemberAtLevel);
        CHECK(r.level == 0);
        CHECK(r.chain.empty());
    }
    CHECK_THROWS_AS(best_approximation(lang("a", ab()), shuffle_operator(ab()), 0), InvalidArgument);
    ClosureOperator bad("bad", ab(), [](const Dfa&) { return universal_language(ab()); });
    CHECK_THROWS_AS(best_approximation(lang("a", ab()), bad), InvalidArgument);

    // The trivial lattice is {∅, A*}: a language other than those two is
    // never reached and the sequence alternates A*, A*.
    ApproximationReport t = best_approximation(lang("a", ab()), trivial_operator(ab()));
    CHECK(t.status == ApproximationStatus::NotInBooleanClosure);
}

TEST_CASE("(ab)* is not piecewise testable") {
    Dfa l = lang("(ab)*", ab());
    CHECK(!piecewise_testable(l));
    ApproximationReport r = best_approximation(l, shuffle_operator(ab()), 6);
    CHECK(r.status == ApproximationStatus::NotMemberUpTo);
    CHECK(r.level == 6);
    REQUIRE(r.sequence.size() == 7);
    for (std::size_t i = 1; i < r.sequence.size(); ++i) {
        CHECK(is_subset(r.sequence[i], r.sequence[i - 1]));
        CHECK(!equivalent(r.sequence[i], r.sequence[i - 1]));
    }
    ApproximationReport d = decide_level(l, "shuffle", 6);
    CHECK(d.status == ApproximationStatus::NotInBooleanClosure);
    CHECK(d.search_status == ApproximationStatus::NotMemberUpTo);
    CHECK(!d.shortcut.empty());
}

TEST_CASE("is_approximation and is_better") {
    Dfa l = section5_language();
    DifferenceChain c = section5_chain();
    CHECK(is_approximation(c, l));
    CHECK(is_better(c, c, l));

    DifferenceChain padded(abc(), {c.term(0), c.term(0), c.term(0), c.term(1)}, "shuffle");
    CHECK(is_approximation(padded, l));
    CHECK(is_better(c, padded, l));
    CHECK(!is_better(padded, c, l));

    CHECK_THROWS_AS(is_better(c, c.truncated(3), l), InvalidArgument);
    CHECK(!is_approximation(DifferenceChain(abc(), {lang("abc", abc())}), l));
    // The tag makes closedness part of the check.
    DifferenceChain unclosed(abc(), {universal_language(abc()), complement(lang("1+a+b+c+ab+bc", abc())),
                                     lang("(a+b+c)*a(a+b+c)*b(a+b+c)*c(a+b+c)*-aabc", abc())},
                             "shuffle");
    CHECK(!is_approximation(unclosed, l));
    CHECK(is_approximation(DifferenceChain(abc(), unclosed.terms()), l));
}

TEST_CASE("the best approximation beats random competitors") {
    std::mt19937 rng(89);
    int compared = 0;
    for (int i = 0; i < 40 && compared < 100; ++i) {
        Dfa l = gen::random_regular(rng, ab());
        ClosureOperator op = i % 2 == 0 ? shuffle_operator(ab()) : alphabet_star_operator(ab());
        ApproximationReport r = best_approximation(l, op, 8);
        std::size_t n = r.chain.size();
        if (n == 0)
            continue;
        REQUIRE(is_approximation(r.chain, l, &op));
        for (int k = 0; k < 20; ++k) {
            DifferenceChain other = gen::random_approximation(rng, l, op, n);
            REQUIRE(is_approximation(other, l, &op));
            CHECK(is_better(r.chain, other, l));
            ++compared;
        }
    }
    CHECK(compared >= 100);
}

TEST_CASE("monotonicity of f and g along the iteration") {
    std::mt19937 rng(97);
    for (int i = 0; i < 100; ++i) {
        Dfa l = gen::random_regular(rng, ab());
        ClosureOperator op = i % 2 == 0 ? shuffle_operator(ab()) : alphabet_star_operator(ab());
        auto f = [&](const Dfa& x) { return op.close(product(BoolOp::Difference, x, l)); };
        auto g = [&](const Dfa& x) { return op.close(product(BoolOp::Intersection, x, l)); };
        ApproximationReport r = best_approximation(l, op, 8);

        // Odd partial sums decrease towards L, even ones increase towards it.
        std::vector<Dfa> above{universal_language(ab())}, below{empty_language(ab())};
        for (std::size_t j = 1; j <= r.chain.size(); ++j)
            (j % 2 == 1 ? above : below).push_back(partial_sum(r.chain, j));
        for (std::size_t a = 0; a + 1 < above.size(); ++a) {
            const Dfa &x = above[a], &y = above[a + 1];
            REQUIRE(is_subset(y, x));
            REQUIRE(is_subset(l, y));
            CHECK(is_subset(f(y), f(x)));
            Dfa x_rest = product(BoolOp::Difference, x, f(x)), y_rest = product(BoolOp::Difference, y, f(y));
            CHECK(is_subset(x_rest, y_rest));
            CHECK(is_subset(y_rest, l));
        }
        for (std::size_t a = 0; a + 1 < below.size(); ++a) {
            const Dfa &x = below[a], &y = below[a + 1];
            REQUIRE(is_subset(x, y));
            REQUIRE(is_subset(y, l));
            CHECK(is_subset(g(complement(y)), g(complement(x))));
            Dfa x_cover = product(BoolOp::Union, x, g(complement(x)));
            Dfa y_cover = product(BoolOp::Union, y, g(complement(y)));
            CHECK(is_subset(l, y_cover));
            CHECK(is_subset(y_cover, x_cover));
        }
    }
}

TEST_CASE("decisions are minimal and period-2 verdicts are stable") {
    std::mt19937 rng(101);
    int members = 0, outside = 0;
    for (int i = 0; i < 120; ++i) {
        Dfa l = gen::random_regular(rng, ab());
        ClosureOperator op = i % 2 == 0 ? shuffle_operator(ab()) : alphabet_star_operator(ab());
        ApproximationReport r = best_approximation(l, op, 10);
        if (r.status == ApproximationStatus::MemberAtLevel) {
            ++members;
            CHECK(equivalent(eval_chain(r.chain), l));
            if (r.level > 0) {
                CHECK(!equivalent(eval_chain(r.chain.truncated(r.level - 1)), l));
                if (r.level > 1)
                    CHECK(best_approximation(l, op, r.level - 1).status == ApproximationStatus::NotMemberUpTo);
            }
        } else if (r.status == ApproximationStatus::NotInBooleanClosure) {
            ++outside;
            CHECK(best_approximation(l, op, 20).status == ApproximationStatus::NotInBooleanClosure);
        }
    }
    CHECK(members > 10);
    CHECK(outside > 10);
}

TEST_CASE("shuffle iteration terminates exactly on piecewise testable languages") {
    std::mt19937 rng(103);
    int pt = 0, other = 0;
    for (int i = 0; i < 120; ++i) {
        Dfa l = gen::random_regular(rng, ab());
        bool member = best_approximation(l, shuffle_operator(ab()), 16).status == ApproximationStatus::MemberAtLevel;
        bool j_trivial = piecewise_testable(l);
        CHECK(member == j_trivial);
        (j_trivial ? pt : other)++;
    }
    CHECK(pt > 10);
    CHECK(other > 10);
}

TEST_CASE("dual recipe") {
    ClosureOperator s = shuffle_operator(abc());
    ApproximationReport bc = dual_best_approximation(lang("(b+c)*", abc()), s);
    CHECK(bc.status == ApproximationStatus::MemberAtLevel);
    CHECK(bc.level == 1);
    ApproximationReport all = dual_best_approximation(universal_language(abc()), s);
    CHECK(all.level == 1);
    CHECK(equivalent(eval_chain(all.chain), universal_language(abc())));

    ApproximationReport f = decide_level(section5_language(), "co-shuffle");
    CHECK(f.status == ApproximationStatus::MemberAtLevel);
    CHECK(f.level == 3);
    CHECK(equivalent(eval_chain(f.chain), section5_language()));
    CHECK(is_approximation(f.chain, section5_language()));

    std::mt19937 rng(107);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        Dfa l = gen::random_regular(rng, ab());
        ClosureOperator op = i % 2 == 0 ? shuffle_operator(ab()) : alphabet_star_operator(ab());
        ApproximationReport r = dual_best_approximation(l, op, 10);
        if (r.status != ApproximationStatus::MemberAtLevel)
            continue;
        ++checked;
        CHECK(equivalent(eval_chain(r.chain), l));
        CHECK(r.chain.size() == r.level);
        for (const Dfa& t : r.chain.terms())
            CHECK(is_closed(op, complement(t)));
        // Neither reading can be shorter than the direct one by more than a term.
        ApproximationReport direct = best_approximation(l, op, 10);
        if (direct.status == ApproximationStatus::MemberAtLevel)
            CHECK(r.level <= direct.level + 1);
    }
    CHECK(checked > 30);
}
