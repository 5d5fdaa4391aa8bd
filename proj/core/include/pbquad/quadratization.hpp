#pragma once

#include "pbquad/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pbquad {

// Hands out auxiliary variables n+1, n+2, ... in creation order. Rules take
// it by reference; callers running rules concurrently must give each its
// own allocator over a disjoint index range.
class AuxAllocator {
public:
    explicit AuxAllocator(std::size_t num_original) : num_original_(num_original), next_(num_original + 1) {}

    VarId fresh() { return next_++; }

    std::size_t num_original() const { return num_original_; }
    // Highest index issued so far (num_original when nothing was issued).
    std::size_t universe() const { return next_ - 1; }
    std::size_t issued() const { return universe() - num_original_; }
    bool is_auxiliary(VarId v) const { return v > num_original_; }

private:
    std::size_t num_original_;
    VarId next_;
};

// Size and non-submodularity figures of a quadratization, all read off the
// canonical multilinear form of g.
struct QuadMetrics {
    std::size_t aux_count = 0;
    std::size_t term_count = 0;
    std::size_t positive_quadratic_terms = 0;
    Rational max_abs_coefficient = 0;

    friend bool operator==(const QuadMetrics&, const QuadMetrics&) = default;
};

// g(x, w) with f(x) = min_w g(x, w). `aux` lists the variables this
// quadratization introduced; g may span further allocator indices issued
// earlier, which it simply does not mention.
struct Quadratization {
    PseudoBooleanFunction g;
    std::size_t num_original = 0;
    std::vector<VarId> aux;
    std::string method;
    QuadMetrics metrics;
};

QuadMetrics compute_metrics(const PseudoBooleanFunction& g, std::size_t aux_count);

// Canonicalizes `form`, collects the aux indices issued by `alloc` since
// `first_aux`, and fills in the metrics. Throws std::logic_error if the
// result is not quadratic.
Quadratization finish_quadratization(const LiteralForm& form, const AuxAllocator& alloc, VarId first_aux,
                                     std::string method);

}  // namespace pbquad
