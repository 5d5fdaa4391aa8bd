#pragma once

#include "pbquad/polynomial.hpp"
#include "pbquad/quadratization.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pbquad {

// Single-term rules. Each takes the magnitude alpha > 0 of the monomial and
// scales the whole right-hand side by it; alpha <= 0 throws InvalidInput.
// Terms of degree <= 2 are returned unchanged with no auxiliaries.

// -alpha * prod_S x  ->  alpha * w * ((d-1) - sum_S x_j)
Quadratization quadratize_negative_term(const Rational& alpha, const Monomial& s, AuxAllocator& fresh);

// alpha * prod_S x via negated-literal chaining: d-2 aux, d-1 positive
// quadratic terms. The two largest indices of S form the kept pair; the
// chain runs over the remaining indices in increasing order. Needs d >= 3.
Quadratization quadratize_positive_term_chain(const Rational& alpha, const Monomial& s, AuxAllocator& fresh);

// -alpha * prod_S xbar  ->  alpha * (-1 + sum x_j + w'(1 - sum x_j)), submodular.
Quadratization quadratize_negated_negative_term(const Rational& alpha, const Monomial& s, AuxAllocator& fresh);

// -alpha * prod_{S0} xbar * prod_{S1} x  ->  alpha * (-uv + u sum_{S0} x + v sum_{S1} xbar).
// Always introduces u and v. S0 and S1 must be disjoint and not both empty.
Quadratization quadratize_mixed_term_rkfj(const Rational& alpha, const Monomial& s0, const Monomial& s1,
                                          AuxAllocator& fresh);

// alpha * prod_S x with k = floor((d-1)/2) aux and C(d,2) positive quadratic
// terms. Needs d >= 3.
Quadratization quadratize_positive_term_ishikawa(const Rational& alpha, const Monomial& s, AuxAllocator& fresh);

// The penalty xy - 2xw - 2yw + 3w: zero iff w = xy, at least 1 otherwise.
PseudoBooleanFunction rosenberg_penalty(VarId x, VarId y, VarId w);

// Repeated pair substitution with a big-M penalty until the degree is <= 2.
// Pair choice: the pair contained in the most terms of degree >= 3, ties to
// the lexicographically smallest. M = 1 + sum_{S containing the pair} |a_S|.
Quadratization rosenberg_reduce(const PseudoBooleanFunction& f, AuxAllocator& fresh);

// Literal-level forms of the rules above. They only use the fact that every
// literal is a binary symbol, so any polarity mix is accepted. Products of
// size <= 2 come back unchanged.
LiteralForm negative_term_literals(const Rational& alpha, const LiteralProduct& p, AuxAllocator& fresh);
LiteralForm chain_literals(const Rational& alpha, const LiteralProduct& p, AuxAllocator& fresh);
LiteralForm ishikawa_literals(const Rational& alpha, const LiteralProduct& p, AuxAllocator& fresh);
// -alpha * prod(u_side) * prod(v_side) with u paired to the complements of
// u_side and v to the complements of v_side.
LiteralForm rkfj_literals(const Rational& alpha, std::span<const Literal> u_side,
                          std::span<const Literal> v_side, AuxAllocator& fresh);
// alpha * prod p (positive coefficient) peeled into -alpha*~l_i*prod_{j>i} l_j
// pieces, each handled by rkfj_literals: 2(d-2) aux.
LiteralForm positive_rkfj_literals(const Rational& alpha, const LiteralProduct& p, AuxAllocator& fresh);

// Family of Boolean functions phi_1..phi_q over y in B^p, each a conjunction
// of literals over y_1..y_p (Literal::var is the y index).
struct SplitSystem {
    std::size_t p = 0;
    std::vector<LiteralProduct> phis;

    std::size_t q() const { return phis.size(); }
};

// {y1, ~y1}
SplitSystem two_split();
// {y1, y2, ~y1 ~y2}
SplitSystem three_split();

// One leaf per root-to-leaf path; each path lists the literals taken at
// successive depths (depth k branches on y_{k+1}).
SplitSystem split_system_from_tree(std::size_t depth, const std::vector<std::vector<bool>>& leaf_paths);

// min_y sum_i phi_i(y) = 1 and, for every k, some y zeroes all phi_i with
// i != k. Malformed systems (index out of 1..p, p > 20) are reported false.
bool validate_split_system(const SplitSystem& sys);

// alpha * sum_i phi_i(y) prod_{P_i} x over fresh y. The cover must have q
// parts, each inside S, together covering S. Throws InvalidInput otherwise.
LiteralForm apply_split(const Rational& alpha, const Monomial& s, const SplitSystem& sys,
                        const std::vector<Monomial>& cover, AuxAllocator& fresh);

// Contiguous cover of S for sys: parts as equal as possible, larger parts
// assigned to phis with fewer literals.
std::vector<Monomial> balanced_cover(const Monomial& s, const SplitSystem& sys);

enum class PositiveMethod { chain, ishikawa, rkfj };

// Negative terms of degree >= 3 via the single-aux rule, positive ones via
// `method`, terms of degree <= 2 passed through.
Quadratization quadratize_termwise(const PseudoBooleanFunction& f, PositiveMethod method, AuxAllocator& fresh);

// Positive terms recursively split with `sys` (falling back to the 2-split
// when sys would not lower the degree of some piece), negative pieces
// finished by the single-aux rule.
Quadratization quadratize_split(const PseudoBooleanFunction& f, const SplitSystem& sys, AuxAllocator& fresh);

// Unary negaform term by term: unnegated products via the single-aux rule,
// negated products via the complemented single-aux rule. The result is
// submodular. Throws InvalidInput if `form` is not a unary negaform.
Quadratization quadratize_unary_negaform(const LiteralForm& form, AuxAllocator& fresh);

// Negative terms only: throws InvalidInput on a positive term of degree >= 3.
Quadratization quadratize_kzfd(const PseudoBooleanFunction& f, AuxAllocator& fresh);

}  // namespace pbquad
