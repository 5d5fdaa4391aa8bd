#include "pbquad/aggregate.hpp"

#include "pbquad/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace pbquad {

namespace {

void check_group(const TermGroup& group, Sign expected, const char* rule) {
    if (group.sign != expected) {
        throw InvalidInput(std::string(rule) + ": group has the wrong sign");
    }
    if (group.members.empty()) {
        throw InvalidInput(std::string(rule) + ": group has no members");
    }
    for (const auto& m : group.members) {
        if (m.alpha <= 0) {
            throw InvalidInput(std::string(rule) + ": member coefficient must be positive, got " +
                               to_string(m.alpha));
        }
        for (Literal l : m.rest) {
            for (Literal c : group.common) {
                if (l.var == c.var) {
                    throw InvalidInput(std::string(rule) + ": member shares x" + std::to_string(l.var) +
                                       " with the common part");
                }
            }
        }
    }
}

VarId max_var(const TermGroup& group) {
    VarId v = group.common.max_var();
    for (const auto& m : group.members) {
        v = std::max(v, m.rest.max_var());
    }
    return v;
}

Rational total_weight(const TermGroup& group) {
    Rational total = 0;
    for (const auto& m : group.members) {
        total += m.alpha;
    }
    return total;
}

LiteralProduct merge(const LiteralProduct& a, const LiteralProduct& b) {
    std::vector<Literal> lits = a.literals();
    lits.insert(lits.end(), b.begin(), b.end());
    return LiteralProduct(std::move(lits));
}

}  // namespace

LiteralForm split_common_positive(const TermGroup& group, AuxAllocator& fresh) {
    check_group(group, Sign::positive, "common-part split");
    const VarId w = fresh.fresh();
    LiteralForm out(std::max<std::size_t>(fresh.universe(), max_var(group)));
    out.add_term(group.common.with(Literal::neg(w)), total_weight(group));
    for (const auto& m : group.members) {
        out.add_term(m.rest.with(Literal::pos(w)), m.alpha);
    }
    return out;
}

LiteralForm split_common_negative(const TermGroup& group, AuxAllocator& fresh) {
    check_group(group, Sign::negative, "common-part split");
    const VarId w = fresh.fresh();
    const Literal wl = Literal::pos(w);
    LiteralForm out(std::max<std::size_t>(fresh.universe(), max_var(group)));
    for (const auto& m : group.members) {
        out.add_term({wl}, m.alpha);
        out.add_term(group.common.with(wl), -m.alpha);
        out.add_term(m.rest.with(wl), -m.alpha);
    }
    return out;
}

LiteralForm expand_group(const TermGroup& group, std::size_t num_vars) {
    LiteralForm out(std::max<std::size_t>(num_vars, max_var(group)));
    for (const auto& m : group.members) {
        out.add_term(merge(group.common, m.rest), group.sign == Sign::positive ? m.alpha : Rational(-m.alpha));
    }
    return out;
}

std::optional<CommonPart> select_common_part(const LiteralForm& terms) {
    // key order: pair, then positive before negative
    std::map<std::tuple<Literal, Literal, int>, std::vector<LiteralProduct>> shared;
    for (const auto& [p, c] : terms.terms()) {
        if (p.size() < 3) {
            continue;
        }
        const int sign = c > 0 ? 0 : 1;
        for (std::size_t a = 0; a < p.size(); ++a) {
            for (std::size_t b = a + 1; b < p.size(); ++b) {
                shared[{p[a], p[b], sign}].push_back(p);
            }
        }
    }
    const std::vector<LiteralProduct>* best = nullptr;
    std::tuple<Literal, Literal, int> best_key;
    for (const auto& [key, matched] : shared) {
        if (matched.size() >= 2 && (best == nullptr || matched.size() > best->size())) {
            best = &matched;
            best_key = key;
        }
    }
    if (best == nullptr) {
        return std::nullopt;
    }
    return CommonPart{std::get<0>(best_key), std::get<1>(best_key),
                      std::get<2>(best_key) == 0 ? Sign::positive : Sign::negative, *best};
}

std::size_t excess_degree(const LiteralForm& terms) {
    std::size_t total = 0;
    for (const auto& [p, c] : terms.terms()) {
        if (p.size() > 2) {
            total += p.size() - 2;
        }
    }
    return total;
}

LiteralForm aggregate_literals(const LiteralForm& form, PositiveMethod fallback, AuxAllocator& fresh,
                               AggregateTrace* trace) {
    LiteralForm work = form;
    work.extend_universe(fresh.universe());
    std::size_t potential = excess_degree(work);
    if (trace != nullptr) {
        trace->potentials.push_back(potential);
    }

    while (auto part = select_common_part(work)) {
        TermGroup group;
        group.common = LiteralProduct{part->first, part->second};
        group.sign = part->sign;
        for (const auto& p : part->matched) {
            const Rational& c = work.terms().at(p);
            group.members.push_back({abs(c), p.without(part->first).without(part->second)});
        }
        for (const auto& p : part->matched) {
            work.remove_term(p);
        }

        if (group.sign == Sign::positive) {
            // ~w * C  ->  C - w * C, leaving a quadratic and a negative cubic
            const LiteralForm split = split_common_positive(group, fresh);
            const Literal wbar_lit = Literal::neg(static_cast<VarId>(fresh.universe()));
            work.extend_universe(split.num_vars());
            for (const auto& [p, c] : split.terms()) {
                const auto wbar = std::find(p.begin(), p.end(), wbar_lit);
                if (wbar == p.end()) {
                    work.add_term(p, c);
                    continue;
                }
                const LiteralProduct rest = p.without(*wbar);
                work.add_term(rest, c);
                work.add_term(rest.with(wbar->complement()), -c);
            }
        } else {
            work.add(split_common_negative(group, fresh));
        }

        const std::size_t next = excess_degree(work);
        if (next >= potential) {
            throw std::logic_error("aggregation step did not lower the excess degree");
        }
        potential = next;
        if (trace != nullptr) {
            trace->potentials.push_back(potential);
            trace->steps.push_back(*part);
        }
    }

    LiteralForm out(work.num_vars());
    for (const auto& [p, c] : work.terms()) {
        if (p.size() <= 2) {
            out.add_term(p, c);
        } else if (c < 0) {
            out.add(negative_term_literals(-c, p, fresh));
        } else {
            switch (fallback) {
                case PositiveMethod::chain: out.add(chain_literals(c, p, fresh)); break;
                case PositiveMethod::ishikawa: out.add(ishikawa_literals(c, p, fresh)); break;
                case PositiveMethod::rkfj: out.add(positive_rkfj_literals(c, p, fresh)); break;
            }
        }
    }
    return out;
}

Quadratization aggregate_pipeline(const PseudoBooleanFunction& f, PositiveMethod fallback, AuxAllocator& fresh,
                                  AggregateTrace* trace) {
    const auto first = static_cast<VarId>(fresh.universe() + 1);
    const LiteralForm out = aggregate_literals(to_literal_form(f), fallback, fresh, trace);
    return finish_quadratization(out, fresh, first, "aggregate");
}

}  // namespace pbquad
