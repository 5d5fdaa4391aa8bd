#pragma once

#include "pbquad/polynomial.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pbquad {

// .pbf text format:
//
//   # comment
//   p pbf <n>
//   <coef> [<lit> ...]
//
// <coef> is an integer or fraction (`3`, `-3/2`); <lit> is a nonzero
// integer, `k` or `+k` for x_k and `-k` for ~x_k, 1 <= k <= n. A line with
// only a coefficient is a constant. Repeated products accumulate. Blank
// lines are ignored. Every syntax or range violation throws ParseError.
LiteralForm parse_pbf(std::string_view text);

// Header then one line per term in shortlex key order, single spaces, `\n`
// endings. Canonical functions only ever produce positive tokens.
std::string emit_pbf(const LiteralForm& form);
std::string emit_pbf(const PseudoBooleanFunction& f);

struct EdgeList {
    std::size_t num_vertices = 0;
    std::vector<std::pair<VarId, VarId>> edges;
};

// One `i j` pair per line over vertices 1..n; `#` comments; an optional
// `p edge <n> [<m>]` header fixes n, otherwise n is the largest vertex seen.
EdgeList parse_edge_list(std::string_view text);

// sum_{(i,j) in E} x_0 x_i x_j over universe n+1, where the hub x_0 is
// variable n+1. Throws InvalidInput on loops or vertices outside 1..n.
PseudoBooleanFunction gen_star_family(const std::vector<std::pair<VarId, VarId>>& edges, std::size_t n);

}  // namespace pbquad
