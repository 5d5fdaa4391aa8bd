#include "pbquad/termwise.hpp"

#include "pbquad/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace pbquad {

namespace {

void require_positive(const Rational& alpha, const char* rule) {
    if (alpha <= 0) {
        throw InvalidInput(std::string(rule) + ": coefficient magnitude must be positive, got " + to_string(alpha));
    }
}

void require_degree(const Monomial& s, std::size_t min_degree, const char* rule) {
    if (s.size() < min_degree) {
        throw InvalidInput(std::string(rule) + ": needs a term of degree >= " + std::to_string(min_degree));
    }
}

LiteralForm form_for(const AuxAllocator& fresh, VarId max_var) {
    return LiteralForm(std::max<std::size_t>(fresh.universe(), max_var));
}

LiteralForm single_term(const Rational& coef, const LiteralProduct& p, const AuxAllocator& fresh) {
    LiteralForm out = form_for(fresh, p.max_var());
    out.add_term(p, coef);
    return out;
}

Quadratization wrap(const LiteralForm& form, const AuxAllocator& fresh, VarId first_aux, const char* method) {
    return finish_quadratization(form, fresh, first_aux, method);
}

VarId next_aux(const AuxAllocator& fresh) { return static_cast<VarId>(fresh.universe() + 1); }

}  // namespace

// ---- literal-level rules ----

LiteralForm negative_term_literals(const Rational& alpha, const LiteralProduct& p, AuxAllocator& fresh) {
    require_positive(alpha, "negative term rule");
    if (p.size() <= 2) {
        return single_term(-alpha, p, fresh);
    }
    const VarId w = fresh.fresh();
    LiteralForm out = form_for(fresh, p.max_var());
    out.add_term({Literal::pos(w)}, alpha * static_cast<long>(p.size() - 1));
    for (Literal l : p) {
        out.add_term({Literal::pos(w), l}, -alpha);
    }
    return out;
}

LiteralForm chain_literals(const Rational& alpha, const LiteralProduct& p, AuxAllocator& fresh) {
    require_positive(alpha, "chain rule");
    const std::size_t d = p.size();
    if (d <= 2) {
        return single_term(alpha, p, fresh);
    }
    std::vector<VarId> w(d - 2);
    for (auto& v : w) {
        v = fresh.fresh();
    }
    LiteralForm out = form_for(fresh, p.max_var());
    out.add_term({p[d - 2], p[d - 1]}, alpha);
    // w_i (d - i - ~l_i - sum_{j>i} l_j), 1-based i
    for (std::size_t i = 1; i <= d - 2; ++i) {
        const Literal wi = Literal::pos(w[i - 1]);
        out.add_term({wi}, alpha * static_cast<long>(d - i));
        out.add_term({wi, p[i - 1].complement()}, -alpha);
        for (std::size_t j = i + 1; j <= d; ++j) {
            out.add_term({wi, p[j - 1]}, -alpha);
        }
    }
    return out;
}

LiteralForm ishikawa_literals(const Rational& alpha, const LiteralProduct& p, AuxAllocator& fresh) {
    require_positive(alpha, "ishikawa rule");
    const std::size_t d = p.size();
    if (d <= 2) {
        return single_term(alpha, p, fresh);
    }
    const std::size_t k = (d - 1) / 2;
    std::vector<VarId> w(k);
    for (auto& v : w) {
        v = fresh.fresh();
    }
    LiteralForm out = form_for(fresh, p.max_var());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            out.add_term({p[i], p[j]}, alpha);
        }
    }
    for (std::size_t j = 1; j <= k; ++j) {
        const Literal wj = Literal::pos(w[j - 1]);
        out.add_term({wj}, alpha * static_cast<long>(4 * j - 1));
        for (Literal l : p) {
            out.add_term({wj, l}, -2 * alpha);
        }
    }
    if (d % 2 == 1) {
        const Literal wk = Literal::pos(w[k - 1]);
        for (Literal l : p) {
            out.add_term({wk, l}, alpha);
        }
        out.add_term({wk}, -alpha * static_cast<long>(d - 1));
    }
    return out;
}

LiteralForm rkfj_literals(const Rational& alpha, std::span<const Literal> u_side, std::span<const Literal> v_side,
                          AuxAllocator& fresh) {
    require_positive(alpha, "type-I rule");
    if (u_side.empty() && v_side.empty()) {
        throw InvalidInput("type-I rule: empty monomial");
    }
    const VarId u = fresh.fresh();
    const VarId v = fresh.fresh();
    VarId max_var = 0;
    for (Literal l : u_side) {
        max_var = std::max(max_var, l.var);
    }
    for (Literal l : v_side) {
        max_var = std::max(max_var, l.var);
    }
    LiteralForm out = form_for(fresh, max_var);
    out.add_term({Literal::pos(u), Literal::pos(v)}, -alpha);
    for (Literal l : u_side) {
        out.add_term({Literal::pos(u), l.complement()}, alpha);
    }
    for (Literal l : v_side) {
        out.add_term({Literal::pos(v), l.complement()}, alpha);
    }
    return out;
}

LiteralForm positive_rkfj_literals(const Rational& alpha, const LiteralProduct& p, AuxAllocator& fresh) {
    require_positive(alpha, "type-I rule");
    const std::size_t d = p.size();
    if (d <= 2) {
        return single_term(alpha, p, fresh);
    }
    // prod_{j>=i} l_j = prod_{j>i} l_j - ~l_i prod_{j>i} l_j, telescoped down to the last pair.
    LiteralForm out = form_for(fresh, p.max_var());
    out.add_term({p[d - 2], p[d - 1]}, alpha);
    for (std::size_t i = 0; i + 2 < d; ++i) {
        const Literal head = p[i].complement();
        const auto tail = std::span<const Literal>(p.literals()).subspan(i + 1);
        out.add(rkfj_literals(alpha, std::span<const Literal>(&head, 1), tail, fresh));
    }
    return out;
}

// ---- monomial rules ----

Quadratization quadratize_negative_term(const Rational& alpha, const Monomial& s, AuxAllocator& fresh) {
    const VarId first = next_aux(fresh);
    return wrap(negative_term_literals(alpha, LiteralProduct::positive(s), fresh), fresh, first, "kzfd");
}

Quadratization quadratize_positive_term_chain(const Rational& alpha, const Monomial& s, AuxAllocator& fresh) {
    require_positive(alpha, "chain rule");
    require_degree(s, 3, "chain rule");
    const VarId first = next_aux(fresh);
    return wrap(chain_literals(alpha, LiteralProduct::positive(s), fresh), fresh, first, "chain");
}

Quadratization quadratize_negated_negative_term(const Rational& alpha, const Monomial& s, AuxAllocator& fresh) {
    require_positive(alpha, "negated negative term rule");
    const VarId first = next_aux(fresh);
    if (s.size() <= 2) {
        std::vector<Literal> lits;
        for (VarId v : s) {
            lits.push_back(Literal::neg(v));
        }
        return wrap(single_term(-alpha, LiteralProduct(lits), fresh), fresh, first, "negaform");
    }
    const VarId w = fresh.fresh();
    LiteralForm out = form_for(fresh, s.max_var());
    out.add_term({}, -alpha);
    out.add_term({Literal::pos(w)}, alpha);
    for (VarId v : s) {
        out.add_term({Literal::pos(v)}, alpha);
        out.add_term({Literal::pos(w), Literal::pos(v)}, -alpha);
    }
    return wrap(out, fresh, first, "negaform");
}

Quadratization quadratize_mixed_term_rkfj(const Rational& alpha, const Monomial& s0, const Monomial& s1,
                                          AuxAllocator& fresh) {
    for (VarId v : s0) {
        if (s1.contains(v)) {
            throw InvalidInput("type-I rule: x" + std::to_string(v) + " is both negated and unnegated");
        }
    }
    std::vector<Literal> u_side;
    std::vector<Literal> v_side;
    for (VarId v : s0) {
        u_side.push_back(Literal::neg(v));
    }
    for (VarId v : s1) {
        v_side.push_back(Literal::pos(v));
    }
    const VarId first = next_aux(fresh);
    return wrap(rkfj_literals(alpha, u_side, v_side, fresh), fresh, first, "rkfj");
}

Quadratization quadratize_positive_term_ishikawa(const Rational& alpha, const Monomial& s, AuxAllocator& fresh) {
    require_positive(alpha, "ishikawa rule");
    require_degree(s, 3, "ishikawa rule");
    const VarId first = next_aux(fresh);
    return wrap(ishikawa_literals(alpha, LiteralProduct::positive(s), fresh), fresh, first, "ishikawa");
}

// ---- Rosenberg ----

PseudoBooleanFunction rosenberg_penalty(VarId x, VarId y, VarId w) {
    PseudoBooleanFunction p(std::max({x, y, w}));
    p.add_term({x, y}, 1);
    p.add_term({x, w}, -2);
    p.add_term({y, w}, -2);
    p.add_term({w}, 3);
    return p;
}

Quadratization rosenberg_reduce(const PseudoBooleanFunction& f, AuxAllocator& fresh) {
    const VarId first = next_aux(fresh);
    PseudoBooleanFunction h = f;
    h.extend_universe(fresh.universe());
    while (true) {
        std::map<std::pair<VarId, VarId>, std::size_t> counts;
        for (const auto& [m, c] : h.terms()) {
            if (m.size() < 3) {
                continue;
            }
            for (std::size_t a = 0; a < m.size(); ++a) {
                for (std::size_t b = a + 1; b < m.size(); ++b) {
                    ++counts[{m[a], m[b]}];
                }
            }
        }
        if (counts.empty()) {
            break;
        }
        auto best = counts.begin();
        for (auto it = counts.begin(); it != counts.end(); ++it) {
            if (it->second > best->second) {
                best = it;
            }
        }
        const auto [i, j] = best->first;
        const Monomial pair{i, j};
        Rational big_m = 1;
        for (const auto& [m, c] : h.terms()) {
            if (m.contains_all(pair)) {
                big_m += abs(c);
            }
        }
        const VarId w = fresh.fresh();
        h = linear_combine(substitute_pair(h, i, j, w), 1, rosenberg_penalty(i, j, w), big_m);
    }
    return wrap(to_literal_form(h), fresh, first, "rosenberg");
}

// ---- split systems ----

SplitSystem two_split() { return SplitSystem{1, {LiteralProduct{Literal::pos(1)}, LiteralProduct{Literal::neg(1)}}}; }

SplitSystem three_split() {
    return SplitSystem{2,
                       {LiteralProduct{Literal::pos(1)}, LiteralProduct{Literal::pos(2)},
                        LiteralProduct{Literal::neg(1), Literal::neg(2)}}};
}

SplitSystem split_system_from_tree(std::size_t depth, const std::vector<std::vector<bool>>& leaf_paths) {
    SplitSystem sys;
    sys.p = depth;
    for (const auto& path : leaf_paths) {
        if (path.size() > depth) {
            throw InvalidInput("split tree path deeper than the declared depth");
        }
        std::vector<Literal> lits;
        for (std::size_t k = 0; k < path.size(); ++k) {
            lits.push_back({static_cast<VarId>(k + 1), !path[k]});
        }
        sys.phis.emplace_back(std::move(lits));
    }
    return sys;
}

bool validate_split_system(const SplitSystem& sys) {
    if (sys.phis.empty() || sys.p > 20) {
        return false;
    }
    for (const auto& phi : sys.phis) {
        if (!phi.empty() && phi.max_var() > sys.p) {
            return false;
        }
    }
    const std::size_t q = sys.q();
    std::vector<bool> can_drop(q, false);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << sys.p); ++y) {
        std::size_t ones = 0;
        std::size_t last = 0;
        for (std::size_t i = 0; i < q; ++i) {
            const bool on = std::all_of(sys.phis[i].begin(), sys.phis[i].end(),
                                        [&](Literal l) { return l.value((y >> (l.var - 1)) & 1U); });
            if (on) {
                ++ones;
                last = i;
            }
        }
        if (ones == 0) {
            return false;  // minimum of the sum would be 0
        }
        if (ones == 1) {
            can_drop[last] = true;
        }
    }
    // some y attains sum 1 iff some can_drop entry is set, so this also pins the minimum to 1
    return std::all_of(can_drop.begin(), can_drop.end(), [](bool b) { return b; });
}

std::vector<Monomial> balanced_cover(const Monomial& s, const SplitSystem& sys) {
    const std::size_t q = sys.q();
    if (q == 0) {
        throw InvalidInput("empty split system");
    }
    std::vector<std::size_t> order(q);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sys.phis[a].size() != sys.phis[b].size()) {
            return sys.phis[a].size() < sys.phis[b].size();
        }
        return a > b;
    });
    std::vector<std::size_t> sizes(q, s.size() / q);
    for (std::size_t r = 0; r < s.size() % q; ++r) {
        ++sizes[order[r]];
    }
    std::vector<Monomial> cover;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < q; ++i) {
        std::vector<VarId> part(s.vars().begin() + static_cast<std::ptrdiff_t>(pos),
                                s.vars().begin() + static_cast<std::ptrdiff_t>(pos + sizes[i]));
        cover.emplace_back(std::move(part));
        pos += sizes[i];
    }
    return cover;
}

LiteralForm apply_split(const Rational& alpha, const Monomial& s, const SplitSystem& sys,
                        const std::vector<Monomial>& cover, AuxAllocator& fresh) {
    require_positive(alpha, "split");
    if (!validate_split_system(sys)) {
        throw InvalidInput("split system violates the positive-minimum / minimality condition");
    }
    if (cover.size() != sys.q()) {
        throw InvalidInput("cover has " + std::to_string(cover.size()) + " parts, system has " +
                           std::to_string(sys.q()) + " functions");
    }
    std::vector<VarId> covered;
    for (const auto& part : cover) {
        if (!s.contains_all(part)) {
            throw InvalidInput("cover part " + to_string(part) + " is not inside " + to_string(s));
        }
        covered.insert(covered.end(), part.begin(), part.end());
    }
    if (Monomial(covered) != s) {
        throw InvalidInput("cover does not cover " + to_string(s));
    }
    std::vector<VarId> y(sys.p);
    for (auto& v : y) {
        v = fresh.fresh();
    }
    LiteralForm out = form_for(fresh, s.max_var());
    for (std::size_t i = 0; i < sys.q(); ++i) {
        std::vector<Literal> lits;
        for (Literal l : sys.phis[i]) {
            lits.push_back({y[l.var - 1], l.negated});
        }
        for (VarId v : cover[i]) {
            lits.push_back(Literal::pos(v));
        }
        out.add_term(LiteralProduct(std::move(lits)), alpha);
    }
    return out;
}

// ---- whole-function drivers ----

namespace {

const char* method_name(PositiveMethod m) {
    switch (m) {
        case PositiveMethod::chain: return "chain";
        case PositiveMethod::ishikawa: return "ishikawa";
        case PositiveMethod::rkfj: return "rkfj";
    }
    return "unknown";
}

// Largest degree of a positive monomial in the expansion of phi * prod(part).
std::size_t positive_expansion_degree(const LiteralProduct& phi, const Monomial& part) {
    const auto negated = static_cast<std::size_t>(
        std::count_if(phi.begin(), phi.end(), [](Literal l) { return l.negated; }));
    const std::size_t top = phi.size() + part.size();
    return negated % 2 == 0 ? top : top - 1;
}

bool lowers_degree(const SplitSystem& sys, const std::vector<Monomial>& cover, std::size_t d) {
    for (std::size_t i = 0; i < sys.q(); ++i) {
        const std::size_t deg = positive_expansion_degree(sys.phis[i], cover[i]);
        if (deg >= 3 && deg >= d) {
            return false;
        }
    }
    return true;
}

}  // namespace

Quadratization quadratize_termwise(const PseudoBooleanFunction& f, PositiveMethod method, AuxAllocator& fresh) {
    const VarId first = next_aux(fresh);
    LiteralForm out(f.num_vars());
    for (const auto& [m, c] : f.terms()) {
        const auto p = LiteralProduct::positive(m);
        if (m.size() <= 2) {
            out.add_term(p, c);
        } else if (c < 0) {
            out.add(negative_term_literals(-c, p, fresh));
        } else {
            switch (method) {
                case PositiveMethod::chain: out.add(chain_literals(c, p, fresh)); break;
                case PositiveMethod::ishikawa: out.add(ishikawa_literals(c, p, fresh)); break;
                case PositiveMethod::rkfj: out.add(positive_rkfj_literals(c, p, fresh)); break;
            }
        }
    }
    return wrap(out, fresh, first, method_name(method));
}

Quadratization quadratize_split(const PseudoBooleanFunction& f, const SplitSystem& sys, AuxAllocator& fresh) {
    if (!validate_split_system(sys)) {
        throw InvalidInput("split system violates the positive-minimum / minimality condition");
    }
    const VarId first = next_aux(fresh);
    const SplitSystem fallback = two_split();
    LiteralForm out(f.num_vars());

    std::function<void(const Monomial&, const Rational&)> process = [&](const Monomial& m, const Rational& c) {
        const auto p = LiteralProduct::positive(m);
        if (m.size() <= 2) {
            out.extend_universe(fresh.universe());
            out.add_term(p, c);
            return;
        }
        if (c < 0) {
            out.add(negative_term_literals(-c, p, fresh));
            return;
        }
        const SplitSystem* chosen = &sys;
        auto cover = balanced_cover(m, sys);
        if (!lowers_degree(sys, cover, m.size())) {
            chosen = &fallback;
            cover = balanced_cover(m, fallback);
        }
        const PseudoBooleanFunction pieces = canonicalize(apply_split(c, m, *chosen, cover, fresh));
        for (const auto& [pm, pc] : pieces.terms()) {
            process(pm, pc);
        }
    };
    for (const auto& [m, c] : f.terms()) {
        process(m, c);
    }
    return wrap(out, fresh, first, sys.q() == 2 ? "split2" : sys.q() == 3 ? "split3" : "split");
}

Quadratization quadratize_unary_negaform(const LiteralForm& form, AuxAllocator& fresh) {
    for (const auto& [p, c] : form.terms()) {
        if (!p.empty() && (c >= 0 || !(p.all_positive() || p.all_negated()))) {
            throw InvalidInput("not a unary negaform: term with coefficient " + to_string(c));
        }
    }
    const VarId first = next_aux(fresh);
    LiteralForm out(form.num_vars());
    for (const auto& [p, c] : form.terms()) {
        if (p.size() <= 2) {
            out.add_term(p, c);
            continue;
        }
        std::vector<VarId> vars;
        for (Literal l : p) {
            vars.push_back(l.var);
        }
        const Monomial s(vars);
        const Quadratization q = p.all_positive() ? quadratize_negative_term(-c, s, fresh)
                                                  : quadratize_negated_negative_term(-c, s, fresh);
        out.add(to_literal_form(q.g));
    }
    return wrap(out, fresh, first, "negaform");
}

Quadratization quadratize_kzfd(const PseudoBooleanFunction& f, AuxAllocator& fresh) {
    const VarId first = next_aux(fresh);
    LiteralForm out(f.num_vars());
    for (const auto& [m, c] : f.terms()) {
        const auto p = LiteralProduct::positive(m);
        if (m.size() <= 2) {
            out.add_term(p, c);
        } else if (c < 0) {
            out.add(negative_term_literals(-c, p, fresh));
        } else {
            throw InvalidInput("kzfd handles negative terms only; " + to_string(m) + " has coefficient " +
                               to_string(c));
        }
    }
    return wrap(out, fresh, first, "kzfd");
}

}  // namespace pbquad
