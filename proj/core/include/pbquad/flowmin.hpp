#pragma once

#include "pbquad/polynomial.hpp"
#include "pbquad/verify.hpp"

#include <cstddef>
#include <vector>

namespace pbquad {

struct FlowArc {
    std::size_t from = 0;
    std::size_t to = 0;
    Rational capacity;
};

// s-t network for a submodular quadratic g. Variable x_v is node v-1; the
// source is node num_vars, the sink node num_vars+1. x_v = 1 iff node v-1 is
// on the sink side, and for every cut: cut capacity + constant_offset = g(x).
struct FlowNetwork {
    std::size_t num_vars = 0;
    std::vector<FlowArc> arcs;
    Rational constant_offset;

    std::size_t source() const { return num_vars; }
    std::size_t sink() const { return num_vars + 1; }
    std::size_t node_count() const { return num_vars + 2; }
};

// Throws InvalidInput if degree(g) > 2 or some quadratic coefficient is positive.
FlowNetwork build_network(const PseudoBooleanFunction& g);

// Capacity of the cut induced by x (source side: source and every x_v = 0).
Rational cut_value(const FlowNetwork& net, const Assignment& x);

struct MaxFlowResult {
    Rational value;
    std::vector<bool> source_side;  // per node, reachable from s in the final residual graph
};

// Exact Dinic max flow on rational capacities; works on a private copy.
MaxFlowResult max_flow(const FlowNetwork& net);

// Exact minimum of a submodular quadratic via min cut.
MinResult min_cut_minimize(const PseudoBooleanFunction& g);

}  // namespace pbquad
