#include "pbquad/errors.hpp"
#include "pbquad/flowmin.hpp"
#include "pbquad/termwise.hpp"
#include "pbquad/verify.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace pbquad {
namespace {

void expect_matches_oracle(const PBF& g) {
    const MinResult r = min_cut_minimize(g);
    const auto [value, argmin] = testing::naive_min(g);
    EXPECT_EQ(r.value, value) << to_string(g);
    EXPECT_EQ(evaluate(g, r.argmin), r.value);
}

TEST(MinCut, Examples) {
    const PBF a(2, {{{1, 2}, -1}});
    EXPECT_EQ(min_cut_minimize(a).value, -1);
    EXPECT_EQ(min_cut_minimize(a).argmin.to_string(), "11");

    const PBF b(2, {{{1}, 2}, {{1, 2}, -3}});
    EXPECT_EQ(min_cut_minimize(b).value, -1);
    EXPECT_EQ(min_cut_minimize(b).argmin.to_string(), "11");

    const MinResult c = min_cut_minimize(PBF(1, {{{1}, 1}}));
    EXPECT_EQ(c.value, 0);
    EXPECT_EQ(c.argmin.to_string(), "0");

    EXPECT_EQ(min_cut_minimize(PBF(3)).value, 0);
    EXPECT_EQ(min_cut_minimize(PBF::constant(make_rational(5, 2))).value, make_rational(5, 2));
}

TEST(MinCut, QuadratizedNegativeCubic) {
    AuxAllocator fresh(3);
    const Quadratization q = quadratize_negative_term(1, {1, 2, 3}, fresh);
    EXPECT_EQ(min_cut_minimize(q.g).value, -1);
    expect_matches_oracle(q.g);
}

TEST(MinCut, QuadratizedUnaryNegaform) {
    const LiteralForm form(3, {{{Literal::pos(1), Literal::pos(2)}, -1}, {{Literal::neg(2), Literal::neg(3)}, -1}});
    AuxAllocator fresh(3);
    const Quadratization q = quadratize_unary_negaform(form, fresh);
    EXPECT_EQ(min_cut_minimize(q.g).value, brute_force_min(q.g).value);
    EXPECT_EQ(min_cut_minimize(q.g).value, -1);
}

TEST(MinCut, Errors) {
    EXPECT_THROW(min_cut_minimize(PBF(2, {{{1, 2}, 1}})), InvalidInput);
    EXPECT_THROW(min_cut_minimize(PBF(3, {{{1, 2, 3}, -1}})), InvalidInput);
    EXPECT_THROW(build_network(PBF(2, {{{1, 2}, make_rational(1, 3)}})), InvalidInput);
}

TEST(FlowNetwork, CapacitiesAreNonnegative) {
    testing::Rng rng(109);
    for (int trial = 0; trial < 50; ++trial) {
        const FlowNetwork net = build_network(testing::random_submodular_quadratic(rng, 6));
        for (const FlowArc& arc : net.arcs) {
            EXPECT_GE(arc.capacity, 0);
            EXPECT_LT(arc.from, net.node_count());
            EXPECT_LT(arc.to, net.node_count());
        }
    }
}

TEST(FlowNetwork, CutIdentityOnEveryAssignment) {
    testing::Rng rng(113);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 10));
        const PBF g = testing::random_submodular_quadratic(rng, n);
        const FlowNetwork net = build_network(g);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const Assignment x = Assignment::from_lex_index(m, n);
            ASSERT_EQ(cut_value(net, x) + net.constant_offset, evaluate(g, x));
        }
    }
}

TEST(MinCut, MatchesBruteForceOnRandomSubmodularQuadratics) {
    testing::Rng rng(127);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 10));
        PBF g = testing::random_submodular_quadratic(rng, n);
        if (trial % 3 == 0) {
            // Rational coefficients as well.
            PBF h(n);
            for (const auto& [m, c] : g.terms()) {
                h.add_term(m, c / testing::uniform(rng, 1, 5));
            }
            g = h;
        }
        const MinResult r = min_cut_minimize(g);
        ASSERT_EQ(r.value, brute_force_min(g).value);
        ASSERT_EQ(evaluate(g, r.argmin), r.value);
    }
}

TEST(MaxFlow, ValueIndependentOfArcOrder) {
    testing::Rng rng(131);
    for (int trial = 0; trial < 50; ++trial) {
        const PBF g = testing::random_submodular_quadratic(rng, 8);
        FlowNetwork net = build_network(g);
        const Rational base = max_flow(net).value;
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            std::shuffle(net.arcs.begin(), net.arcs.end(), rng);
            EXPECT_EQ(max_flow(net).value, base);
        }
        EXPECT_EQ(base + net.constant_offset, brute_force_min(g).value);
    }
}

TEST(MaxFlow, SourceSideIsAMinimumCut) {
    testing::Rng rng(137);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
        const FlowNetwork net = build_network(testing::random_submodular_quadratic(rng, n));
        const MaxFlowResult flow = max_flow(net);
        ASSERT_TRUE(flow.source_side[net.source()]);
        ASSERT_FALSE(flow.source_side[net.sink()]);
        Assignment x(n);
        for (VarId v = 1; v <= n; ++v) {
            x.set(v, !flow.source_side[v - 1]);
        }
        EXPECT_EQ(cut_value(net, x), flow.value);
    }
}

}  // namespace
}  // namespace pbquad
