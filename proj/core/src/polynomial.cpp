#include "pbquad/polynomial.hpp"

#include "pbquad/errors.hpp"

#include <algorithm>
#include <sstream>

namespace pbquad {

namespace {

template <typename T>
std::strong_ordering shortlex(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) {
        return a.size() <=> b.size();
    }
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

void check_index(VarId v, std::size_t num_vars) {
    if (v == 0 || v > num_vars) {
        throw InvalidInput("variable x" + std::to_string(v) + " outside universe 1.." +
                           std::to_string(num_vars));
    }
}

}  // namespace

// ---- Monomial ----

Monomial::Monomial(std::initializer_list<VarId> vars) : Monomial(std::vector<VarId>(vars)) {}

Monomial::Monomial(std::vector<VarId> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    if (!vars_.empty() && vars_.front() == 0) {
        throw InvalidInput("variable index 0 is not allowed");
    }
}

bool Monomial::contains(VarId v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

bool Monomial::contains_all(const Monomial& other) const {
    return std::includes(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end());
}

Monomial Monomial::with(VarId v) const {
    auto vars = vars_;
    vars.push_back(v);
    return Monomial(std::move(vars));
}

Monomial Monomial::without(VarId v) const {
    auto vars = vars_;
    vars.erase(std::remove(vars.begin(), vars.end(), v), vars.end());
    return Monomial(std::move(vars));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return shortlex(a.vars_, b.vars_); }

// ---- LiteralProduct ----

LiteralProduct::LiteralProduct(std::initializer_list<Literal> lits)
    : LiteralProduct(std::vector<Literal>(lits)) {}

LiteralProduct::LiteralProduct(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
    for (std::size_t i = 0; i < lits_.size(); ++i) {
        if (lits_[i].var == 0) {
            throw InvalidInput("variable index 0 is not allowed");
        }
        if (i > 0 && lits_[i].var == lits_[i - 1].var) {
            throw InvalidInput("literal product holds both polarities of x" + std::to_string(lits_[i].var));
        }
    }
}

LiteralProduct LiteralProduct::positive(const Monomial& m) {
    LiteralProduct p;
    p.lits_.reserve(m.size());
    for (VarId v : m) {
        p.lits_.push_back(Literal::pos(v));
    }
    return p;
}

bool LiteralProduct::contains(Literal l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

bool LiteralProduct::all_positive() const {
    return std::none_of(lits_.begin(), lits_.end(), [](Literal l) { return l.negated; });
}

bool LiteralProduct::all_negated() const {
    return std::all_of(lits_.begin(), lits_.end(), [](Literal l) { return l.negated; });
}

LiteralProduct LiteralProduct::with(Literal l) const {
    auto lits = lits_;
    lits.push_back(l);
    return LiteralProduct(std::move(lits));
}

LiteralProduct LiteralProduct::without(Literal l) const {
    auto lits = lits_;
    lits.erase(std::remove(lits.begin(), lits.end(), l), lits.end());
    return LiteralProduct(std::move(lits));
}

std::strong_ordering operator<=>(const LiteralProduct& a, const LiteralProduct& b) {
    return shortlex(a.lits_, b.lits_);
}

// ---- Assignment ----

Assignment::Assignment(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        bits_.push_back(b != 0);
    }
}

Assignment Assignment::from_lex_index(std::uint64_t index, std::size_t n) {
    Assignment x(n);
    for (std::size_t v = 1; v <= n; ++v) {
        x.bits_[v - 1] = (index >> (n - v)) & 1U;
    }
    return x;
}

std::string Assignment::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

// ---- PseudoBooleanFunction ----

PseudoBooleanFunction::PseudoBooleanFunction(std::size_t num_vars,
                                             std::initializer_list<std::pair<Monomial, Rational>> terms)
    : num_vars_(num_vars) {
    for (const auto& [m, c] : terms) {
        add_term(m, c);
    }
}

PseudoBooleanFunction PseudoBooleanFunction::constant(const Rational& c, std::size_t num_vars) {
    PseudoBooleanFunction f(num_vars);
    f.add_term(Monomial{}, c);
    return f;
}

void PseudoBooleanFunction::add_term(const Monomial& m, const Rational& coef) {
    if (!m.empty()) {
        check_index(m.max_var(), num_vars_);
    }
    if (coef == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void PseudoBooleanFunction::extend_universe(std::size_t num_vars) { num_vars_ = std::max(num_vars_, num_vars); }

Rational PseudoBooleanFunction::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

// ---- LiteralForm ----

LiteralForm::LiteralForm(std::size_t num_vars,
                         std::initializer_list<std::pair<LiteralProduct, Rational>> terms)
    : num_vars_(num_vars) {
    for (const auto& [p, c] : terms) {
        add_term(p, c);
    }
}

void LiteralForm::add_term(const LiteralProduct& p, const Rational& coef) {
    if (!p.empty()) {
        check_index(p.max_var(), num_vars_);
    }
    if (coef == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void LiteralForm::add(const LiteralForm& other) {
    extend_universe(other.num_vars());
    for (const auto& [p, c] : other.terms()) {
        add_term(p, c);
    }
}

void LiteralForm::extend_universe(std::size_t num_vars) { num_vars_ = std::max(num_vars_, num_vars); }

// ---- operations ----

Rational evaluate(const PseudoBooleanFunction& f, const Assignment& x) {
    if (x.size() != f.num_vars()) {
        throw InvalidInput("assignment has " + std::to_string(x.size()) + " variables, function has " +
                           std::to_string(f.num_vars()));
    }
    Rational sum = 0;
    for (const auto& [m, c] : f.terms()) {
        if (std::all_of(m.begin(), m.end(), [&](VarId v) { return x.value(v); })) {
            sum += c;
        }
    }
    return sum;
}

Rational evaluate(const LiteralForm& f, const Assignment& x) {
    if (x.size() != f.num_vars()) {
        throw InvalidInput("assignment has " + std::to_string(x.size()) + " variables, form has " +
                           std::to_string(f.num_vars()));
    }
    Rational sum = 0;
    for (const auto& [p, c] : f.terms()) {
        if (std::all_of(p.begin(), p.end(), [&](Literal l) { return l.value(x.value(l.var)); })) {
            sum += c;
        }
    }
    return sum;
}

std::size_t degree(const PseudoBooleanFunction& f) {
    std::size_t d = 0;
    for (const auto& [m, c] : f.terms()) {
        d = std::max(d, m.size());
    }
    return d;
}

std::size_t degree(const LiteralForm& f) {
    std::size_t d = 0;
    for (const auto& [p, c] : f.terms()) {
        d = std::max(d, p.size());
    }
    return d;
}

PseudoBooleanFunction linear_combine(const PseudoBooleanFunction& f, const Rational& alpha,
                                     const PseudoBooleanFunction& g, const Rational& beta) {
    PseudoBooleanFunction out(std::max(f.num_vars(), g.num_vars()));
    for (const auto& [m, c] : f.terms()) {
        out.add_term(m, alpha * c);
    }
    for (const auto& [m, c] : g.terms()) {
        out.add_term(m, beta * c);
    }
    return out;
}

PseudoBooleanFunction canonicalize(const LiteralForm& form) {
    PseudoBooleanFunction out(form.num_vars());
    for (const auto& [p, c] : form.terms()) {
        std::vector<VarId> positive;
        std::vector<VarId> negated;
        for (Literal l : p) {
            (l.negated ? negated : positive).push_back(l.var);
        }
        // prod_P x * prod_N (1 - x) = sum_{T subset N} (-1)^|T| prod_{P u T} x
        const std::size_t k = negated.size();
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
            std::vector<VarId> vars = positive;
            int sign = 1;
            for (std::size_t b = 0; b < k; ++b) {
                if ((subset >> b) & 1U) {
                    vars.push_back(negated[b]);
                    sign = -sign;
                }
            }
            out.add_term(Monomial(std::move(vars)), sign > 0 ? c : Rational(-c));
        }
    }
    return out;
}

LiteralForm to_literal_form(const PseudoBooleanFunction& f) {
    LiteralForm out(f.num_vars());
    for (const auto& [m, c] : f.terms()) {
        out.add_term(LiteralProduct::positive(m), c);
    }
    return out;
}

PseudoBooleanFunction substitute_pair(const PseudoBooleanFunction& f, VarId i, VarId j, VarId w) {
    if (i == j) {
        throw InvalidInput("substitute_pair needs two distinct variables");
    }
    if (w == 0 || w == i || w == j) {
        throw InvalidInput("substitute_pair target must be a fresh variable");
    }
    for (const auto& [m, c] : f.terms()) {
        if (m.contains(w)) {
            throw InvalidInput("variable x" + std::to_string(w) + " already in use");
        }
    }
    const Monomial pair{i, j};
    PseudoBooleanFunction out(std::max<std::size_t>(f.num_vars(), w));
    for (const auto& [m, c] : f.terms()) {
        if (m.contains_all(pair)) {
            out.add_term(m.without(i).without(j).with(w), c);
        } else {
            out.add_term(m, c);
        }
    }
    return out;
}

PseudoBooleanFunction restrict(const PseudoBooleanFunction& f, VarId i, bool b) {
    PseudoBooleanFunction out(f.num_vars());
    for (const auto& [m, c] : f.terms()) {
        if (!m.contains(i)) {
            out.add_term(m, c);
        } else if (b) {
            out.add_term(m.without(i), c);
        }
    }
    return out;
}

std::string to_string(const Monomial& m) {
    std::string s;
    for (VarId v : m) {
        s += "x" + std::to_string(v);
    }
    return s;
}

std::string to_string(const PseudoBooleanFunction& f) {
    if (f.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        first = false;
        Rational mag = abs(c);
        if (m.empty() || mag != 1) {
            os << to_string(mag);
        }
        os << to_string(m);
    }
    return os.str();
}

std::string to_string(const LiteralForm& f) {
    if (f.terms().empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : f.terms()) {
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        first = false;
        Rational mag = abs(c);
        if (p.empty() || mag != 1) {
            os << to_string(mag);
        }
        for (Literal l : p) {
            os << (l.negated ? "~x" : "x") << l.var;
        }
    }
    return os.str();
}

}  // namespace pbquad
