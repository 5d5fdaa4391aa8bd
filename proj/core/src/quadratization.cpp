#include "pbquad/quadratization.hpp"

#include <stdexcept>

namespace pbquad {

QuadMetrics compute_metrics(const PseudoBooleanFunction& g, std::size_t aux_count) {
    QuadMetrics m;
    m.aux_count = aux_count;
    m.term_count = g.term_count();
    for (const auto& [mono, c] : g.terms()) {
        if (mono.size() == 2 && c > 0) {
            ++m.positive_quadratic_terms;
        }
        Rational mag = abs(c);
        if (mag > m.max_abs_coefficient) {
            m.max_abs_coefficient = mag;
        }
    }
    return m;
}

Quadratization finish_quadratization(const LiteralForm& form, const AuxAllocator& alloc, VarId first_aux,
                                     std::string method) {
    Quadratization q;
    q.g = canonicalize(form);
    q.g.extend_universe(alloc.universe());
    if (degree(q.g) > 2) {
        throw std::logic_error(method + " produced a polynomial of degree " + std::to_string(degree(q.g)));
    }
    q.num_original = alloc.num_original();
    for (VarId v = first_aux; v <= alloc.universe(); ++v) {
        q.aux.push_back(v);
    }
    q.method = std::move(method);
    q.metrics = compute_metrics(q.g, q.aux.size());
    return q;
}

}  // namespace pbquad
