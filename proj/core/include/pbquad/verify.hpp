#pragma once

#include "pbquad/polynomial.hpp"
#include "pbquad/quadratization.hpp"

#include <cstddef>

namespace pbquad {

// Caps on exhaustive enumeration. Exceeding a cap raises CapExceeded.
struct EnumerationLimits {
    std::size_t max_vars = 24;             // brute_force_min, is_quadratization
    std::size_t lattice_max_vars = 10;     // is_submodular_lattice, 4^n pairs
    std::size_t second_diff_max_vars = 20; // is_submodular_second_diff
    unsigned threads = 0;                  // 0: std::thread::hardware_concurrency()
};

struct MinResult {
    Rational value;
    Assignment argmin;
};

// Exact global minimum; argmin is the lexicographically smallest minimizer.
MinResult brute_force_min(const PseudoBooleanFunction& f, const EnumerationLimits& limits = {});

// True iff min_{w} g(x, w) == f(x) for every x in B^{f.num_vars()}, where the
// auxiliaries w are g's variables f.num_vars()+1 .. g.num_vars().
// Auxiliaries that share no term of g are minimized independently, so the
// cap applies to f's variables plus the largest group of linked auxiliaries.
bool is_quadratization(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g,
                       const EnumerationLimits& limits = {});

// f(x v y) + f(x ^ y) <= f(x) + f(y) for all pairs.
bool is_submodular_lattice(const PseudoBooleanFunction& f, const EnumerationLimits& limits = {});

// f(x+e_i+e_j) + f(x) <= f(x+e_i) + f(x+e_j) for all i<j and x with x_i = x_j = 0.
bool is_submodular_second_diff(const PseudoBooleanFunction& f, const EnumerationLimits& limits = {});

// Every degree-2 coefficient is <= 0. Throws InvalidInput if degree(g) > 2.
bool quadratic_submodularity(const PseudoBooleanFunction& g);

// Representation-level check: every non-constant term has a negative
// coefficient and a polarity-pure literal product.
bool is_unary_negaform(const LiteralForm& form);

QuadMetrics metrics(const Quadratization& q);

}  // namespace pbquad
