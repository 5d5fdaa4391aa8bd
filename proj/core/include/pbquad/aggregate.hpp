#pragma once

#include "pbquad/polynomial.hpp"
#include "pbquad/quadratization.hpp"
#include "pbquad/termwise.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pbquad {

enum class Sign { positive, negative };

struct GroupMember {
    Rational alpha;     // > 0
    LiteralProduct rest; // H, disjoint from the common part
};

// sign * sum_H alpha_H * prod(common) * prod(H)
struct TermGroup {
    LiteralProduct common;
    std::vector<GroupMember> members;
    Sign sign = Sign::positive;
};

// (sum alpha_H) * ~w * prod(C) + sum_H alpha_H * w * prod(H) over one fresh w.
// Setting w = prod(C) is always optimal.
LiteralForm split_common_positive(const TermGroup& group, AuxAllocator& fresh);

// sum_H alpha_H * w * (1 - prod(C) - prod(H)) over one fresh w.
LiteralForm split_common_negative(const TermGroup& group, AuxAllocator& fresh);

// The group as a plain literal form, i.e. the left-hand side of either split.
LiteralForm expand_group(const TermGroup& group, std::size_t num_vars);

struct CommonPart {
    Literal first;
    Literal second;
    Sign sign = Sign::positive;
    std::vector<LiteralProduct> matched;
};

// The literal pair contained in the most same-sign terms of degree >= 3,
// provided at least two terms share it. Ties go to the smallest pair, then
// to the positive sign.
std::optional<CommonPart> select_common_part(const LiteralForm& terms);

// Sum over terms of max(size - 2, 0); every aggregation step lowers it.
std::size_t excess_degree(const LiteralForm& terms);

struct AggregateTrace {
    std::vector<std::size_t> potentials;  // before the first step, then after each step
    std::vector<CommonPart> steps;
};

// Aggregates common pairs until none is shared, then finishes positive terms
// with `fallback` and negative ones with the single-aux rule. Works on any
// literal form; the result is still a literal form (quadratic in literals).
LiteralForm aggregate_literals(const LiteralForm& form, PositiveMethod fallback, AuxAllocator& fresh,
                               AggregateTrace* trace = nullptr);

Quadratization aggregate_pipeline(const PseudoBooleanFunction& f, PositiveMethod fallback, AuxAllocator& fresh,
                                  AggregateTrace* trace = nullptr);

}  // namespace pbquad
