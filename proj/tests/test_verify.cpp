#include "pbquad/errors.hpp"
#include "pbquad/methods.hpp"
#include "pbquad/termwise.hpp"
#include "pbquad/verify.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

namespace pbquad {
namespace {

TEST(BruteForceMin, Examples) {
    const MinResult a = brute_force_min(PBF(2, {{{1}, 1}, {{1, 2}, -1}}));
    EXPECT_EQ(a.value, 0);
    EXPECT_EQ(a.argmin.to_string(), "00");

    const MinResult b = brute_force_min(PBF(3, {{{1, 2, 3}, -1}}));
    EXPECT_EQ(b.value, -1);
    EXPECT_EQ(b.argmin.to_string(), "111");

    const MinResult c = brute_force_min(PBF(2, {{{1}, 2}, {{1, 2}, -3}}));
    EXPECT_EQ(c.value, -1);
    EXPECT_EQ(c.argmin.to_string(), "11");
}

TEST(BruteForceMin, ConstantAndEmpty) {
    EXPECT_EQ(brute_force_min(PBF::constant(7)).value, 7);
    EXPECT_EQ(brute_force_min(PBF::constant(7)).argmin.size(), 0U);
    const MinResult z = brute_force_min(PBF(3));
    EXPECT_EQ(z.value, 0);
    EXPECT_EQ(z.argmin.to_string(), "000");
}

TEST(BruteForceMin, MatchesNaiveOracle) {
    testing::Rng rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        PBF f = testing::random_pbf(rng, {.max_vars = 9, .max_degree = 4, .max_terms = 12, .coef_bound = 3});
        const auto [value, argmin] = testing::naive_min(f);
        const MinResult r = brute_force_min(f);
        ASSERT_EQ(r.value, value);
        ASSERT_EQ(r.argmin.to_string(), argmin);
        ASSERT_EQ(evaluate(f, r.argmin), r.value);
    }
}

TEST(BruteForceMin, ThreadCountDoesNotChangeResult) {
    testing::Rng rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const PBF f = testing::random_pbf(rng, {.max_vars = 14, .max_degree = 3, .max_terms = 20, .coef_bound = 2});
        const MinResult base = brute_force_min(f, {.threads = 1});
        for (unsigned threads : {2U, 3U, 8U}) {
            const MinResult r = brute_force_min(f, {.threads = threads});
            EXPECT_EQ(r.value, base.value);
            EXPECT_EQ(r.argmin, base.argmin);
        }
    }
}

TEST(BruteForceMin, WideCoefficientsUseExactPath) {
    const Rational big = Rational(mpz_class(1) << 80);
    PBF f(3);
    f.add_term({1}, big);
    f.add_term({1, 2}, -big - 1);
    f.add_term({3}, make_rational(1, 3));
    f.add_term({2, 3}, make_rational(-2, 3));
    const auto [value, argmin] = testing::naive_min(f);
    const MinResult r = brute_force_min(f);
    EXPECT_EQ(r.value, value);
    EXPECT_EQ(r.argmin.to_string(), argmin);
    EXPECT_EQ(r.value, make_rational(-4, 3));
}

TEST(BruteForceMin, CapExceeded) {
    EXPECT_THROW(brute_force_min(PBF(25)), CapExceeded);
    EXPECT_THROW(brute_force_min(PBF(6), {.max_vars = 5}), CapExceeded);
}

TEST(IsQuadratization, Examples) {
    const PBF f(3, {{{1, 2, 3}, -1}});
    AuxAllocator fresh(3);
    EXPECT_TRUE(is_quadratization(f, quadratize_negative_term(1, {1, 2, 3}, fresh).g));

    EXPECT_FALSE(is_quadratization(PBF(3, {{{1, 2, 3}, 1}}), PBF(3, {{{1, 2}, 1}})));

    const PBF g(3, {{{1, 2}, 2}, {{3}, -1}});
    EXPECT_TRUE(is_quadratization(g, g));
    EXPECT_FALSE(is_quadratization(g, PBF(3, {{{1, 2}, 2}, {{3}, 1}})));
}

TEST(IsQuadratization, Errors) {
    EXPECT_THROW(is_quadratization(PBF(4), PBF(3)), InvalidInput);
    PBF wide(26);
    wide.add_term({1, 26}, -1);
    wide.add_term({2, 26}, -1);
    for (VarId v = 5; v < 26; ++v) {
        wide.add_term({v, 26}, 1);
    }
    EXPECT_THROW(is_quadratization(PBF(4), wide), CapExceeded);
}

// Random g built from a known quadratization, sometimes with one coefficient nudged.
PBF perturb(testing::Rng& rng, PBF g) {
    std::vector<Monomial> keys;
    for (const auto& [m, c] : g.terms()) {
        keys.push_back(m);
    }
    if (!keys.empty() && testing::uniform(rng, 0, 1) == 0) {
        const Monomial& m = keys[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(keys.size()) - 1))];
        g.add_term(m, testing::uniform(rng, 0, 1) == 0 ? 1 : -1);
    }
    return g;
}

TEST(IsQuadratization, MatchesNaiveOracle) {
    testing::Rng rng(71);
    int agreed_true = 0;
    int agreed_false = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const PBF f = testing::random_pbf(rng, {.max_vars = 5, .max_degree = 4, .max_terms = 4});
        const Method m = all_methods()[static_cast<std::size_t>(testing::uniform(rng, 0, 7))];
        Quadratization q;
        try {
            q = quadratize(f, m);
        } catch (const InvalidInput&) {
            continue;
        }
        if (q.g.num_vars() > 16) {
            continue;
        }
        const PBF g = perturb(rng, q.g);
        const bool expected = testing::naive_is_quadratization(f, g);
        ASSERT_EQ(is_quadratization(f, g), expected) << to_string(f) << " | " << to_string(g);
        (expected ? agreed_true : agreed_false) += 1;
    }
    EXPECT_GT(agreed_true, 50);
    EXPECT_GT(agreed_false, 50);
}

TEST(IsQuadratization, IndependentAuxGroupsMatchNaiveOracle) {
    // Several terms each with private aux so that the minimum splits by group.
    testing::Rng rng(73);
    int groups_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        PBF f(4);
        const int terms = testing::uniform(rng, 2, 3);
        for (int t = 0; t < terms; ++t) {
            f.add_term(testing::random_subset(rng, 4, 3), testing::uniform(rng, -4, 4));
        }
        const Quadratization q = quadratize(f, Method::chain);
        if (q.g.num_vars() > 16) {
            continue;
        }
        groups_seen += q.aux.size() >= 2 ? 1 : 0;
        const PBF g = perturb(rng, q.g);
        ASSERT_EQ(is_quadratization(f, g), testing::naive_is_quadratization(f, g)) << to_string(g);
    }
    EXPECT_GT(groups_seen, 20);
}

TEST(IsQuadratization, LinkedAuxiliariesMatchNaiveOracle) {
    testing::Rng rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const auto nx = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
        const auto nw = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
        const PBF f = testing::random_quadratic(rng, nx, 2);
        const PBF g = testing::random_quadratic(rng, nx + nw, 2);
        ASSERT_EQ(is_quadratization(f, g), testing::naive_is_quadratization(f, g));
        PBF g2 = f;
        g2.extend_universe(nx + nw);
        ASSERT_TRUE(is_quadratization(f, g2));
    }
}

TEST(IsQuadratization, ThreadCountDoesNotChangeResult) {
    testing::Rng rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        const PBF f = testing::random_pbf(rng, {.max_vars = 8, .max_degree = 5, .max_terms = 6});
        const PBF g = perturb(rng, quadratize(f, Method::ishikawa).g);
        const bool base = is_quadratization(f, g, {.threads = 1});
        for (unsigned threads : {2U, 5U}) {
            EXPECT_EQ(is_quadratization(f, g, {.threads = threads}), base);
        }
    }
}

TEST(IsQuadratization, ImpliesEqualMinima) {
    testing::Rng rng(89);
    for (int trial = 0; trial < 100; ++trial) {
        const PBF f = testing::random_pbf(rng);
        const Quadratization q = quadratize(f, Method::aggregate);
        ASSERT_TRUE(is_quadratization(f, q.g));
        EXPECT_EQ(brute_force_min(f).value, brute_force_min(q.g).value);
    }
}

TEST(Submodularity, LatticeExamples) {
    EXPECT_TRUE(is_submodular_lattice(PBF(2, {{{1, 2}, -1}})));
    EXPECT_FALSE(is_submodular_lattice(PBF(3, {{{1, 2, 3}, 1}})));
    EXPECT_TRUE(is_submodular_lattice(PBF(3, {{{1}, 4}, {{3}, -2}})));
    EXPECT_THROW(is_submodular_lattice(PBF(11)), CapExceeded);
}

TEST(Submodularity, SecondDifferenceExamples) {
    EXPECT_TRUE(is_submodular_second_diff(PBF(3, {{{1, 2, 3}, -1}})));
    EXPECT_FALSE(is_submodular_second_diff(PBF(3, {{{1, 2, 3}, 1}})));
    EXPECT_TRUE(is_submodular_second_diff(PBF(2, {{{1}, 1}, {{2}, 1}})));
    EXPECT_THROW(is_submodular_second_diff(PBF(21)), CapExceeded);
}

TEST(Submodularity, QuadraticCharacterization) {
    EXPECT_TRUE(quadratic_submodularity(PBF(2, {{{1, 2}, -1}, {{1}, 5}})));
    EXPECT_FALSE(quadratic_submodularity(PBF(2, {{{1, 2}, 1}})));
    EXPECT_TRUE(quadratic_submodularity(PBF(2)));
    EXPECT_THROW(quadratic_submodularity(PBF(3, {{{1, 2, 3}, -1}})), InvalidInput);
}

bool oracle_lattice(const PBF& f) {
    const std::size_t n = f.num_vars();
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < size; ++x) {
        for (std::uint64_t y = 0; y < size; ++y) {
            if (testing::eval_terms(f, testing::bits_of(x | y, n)) + testing::eval_terms(f, testing::bits_of(x & y, n)) >
                testing::eval_terms(f, testing::bits_of(x, n)) + testing::eval_terms(f, testing::bits_of(y, n))) {
                return false;
            }
        }
    }
    return true;
}

TEST(Submodularity, TestsAgreeOnRandomFunctions) {
    testing::Rng rng(97);
    int submodular = 0;
    for (int trial = 0; trial < 400; ++trial) {
        PBF f = testing::random_pbf(rng, {.max_vars = 4, .max_degree = 4, .max_terms = 6, .coef_bound = 5});
        if (testing::uniform(rng, 0, 1) == 0) {
            // Bias towards submodular inputs so both outcomes are exercised.
            PBF g(f.num_vars());
            for (const auto& [m, c] : f.terms()) {
                g.add_term(m, m.size() >= 2 ? -abs(c) : c);
            }
            f = g;
        }
        const bool lattice = is_submodular_lattice(f);
        ASSERT_EQ(lattice, oracle_lattice(f));
        ASSERT_EQ(lattice, is_submodular_second_diff(f));
        submodular += lattice ? 1 : 0;
    }
    EXPECT_GT(submodular, 50);
    EXPECT_LT(submodular, 350);
}

TEST(Submodularity, QuadraticTestAgreesWithLattice) {
    testing::Rng rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
        const PBF g = trial % 2 == 0 ? testing::random_quadratic(rng, n, 3) : testing::random_submodular_quadratic(rng, n);
        ASSERT_EQ(quadratic_submodularity(g), is_submodular_lattice(g));
    }
}

TEST(UnaryNegaform, Recognition) {
    EXPECT_TRUE(is_unary_negaform(LiteralForm(3, {{{Literal::pos(1), Literal::pos(2)}, -1},
                                                  {{Literal::neg(1), Literal::neg(3)}, -1}})));
    EXPECT_FALSE(is_unary_negaform(LiteralForm(2, {{{Literal::pos(1), Literal::neg(2)}, -1}})));
    EXPECT_FALSE(is_unary_negaform(LiteralForm(2, {{{Literal::pos(1), Literal::pos(2)}, 1}})));
    EXPECT_TRUE(is_unary_negaform(LiteralForm(2, {{{}, 5}, {{Literal::neg(2)}, -1}})));
}

TEST(UnaryNegaform, AlwaysSubmodular) {
    testing::Rng rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
        const LiteralForm form = testing::random_unary_negaform(rng, n, 6);
        ASSERT_TRUE(is_unary_negaform(form));
        EXPECT_TRUE(is_submodular_second_diff(canonicalize(form)));
    }
}

TEST(UnaryNegaform, PerTermQuadratizationIsSubmodular) {
    testing::Rng rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
        const LiteralForm form = testing::random_unary_negaform(rng, n, 6);
        AuxAllocator fresh(n);
        const Quadratization q = quadratize_unary_negaform(form, fresh);
        EXPECT_TRUE(quadratic_submodularity(q.g));
        EXPECT_TRUE(is_quadratization(canonicalize(form), q.g));
    }
}

TEST(Metrics, Examples) {
    AuxAllocator a(4);
    const QuadMetrics neg = metrics(quadratize_negative_term(1, {1, 2, 3, 4}, a));
    EXPECT_EQ(neg.aux_count, 1U);
    EXPECT_EQ(neg.positive_quadratic_terms, 0U);

    AuxAllocator b(5);
    const QuadMetrics ish = metrics(quadratize_positive_term_ishikawa(1, {1, 2, 3, 4, 5}, b));
    EXPECT_EQ(ish.aux_count, 2U);
    EXPECT_EQ(ish.positive_quadratic_terms, 10U);

    AuxAllocator c(4);
    const QuadMetrics chain = metrics(quadratize_positive_term_chain(1, {1, 2, 3, 4}, c));
    EXPECT_EQ(chain.aux_count, 2U);
    EXPECT_EQ(chain.positive_quadratic_terms, 3U);
}

TEST(Metrics, CountsReadFromCanonicalForm) {
    const PBF g(3, {{{1, 2}, 3}, {{2, 3}, -7}, {{1, 3}, make_rational(1, 2)}, {{}, 9}});
    const QuadMetrics m = compute_metrics(g, 1);
    EXPECT_EQ(m.aux_count, 1U);
    EXPECT_EQ(m.term_count, 4U);
    EXPECT_EQ(m.positive_quadratic_terms, 2U);
    EXPECT_EQ(m.max_abs_coefficient, 9);
}

}  // namespace
}  // namespace pbquad
