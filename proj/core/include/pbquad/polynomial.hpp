#pragma once

#include "pbquad/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pbquad {

// 1-based variable index. Originals occupy 1..n, auxiliaries n+1, n+2, ...
using VarId = std::uint32_t;

// Sorted, duplicate-free set of variable indices: the key of one multilinear
// monomial. Ordered shortlex (by size, then lexicographically), which is the
// order terms are iterated and emitted in.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<VarId> vars);
    explicit Monomial(std::vector<VarId> vars);

    std::size_t size() const { return vars_.size(); }
    bool empty() const { return vars_.empty(); }
    auto begin() const { return vars_.begin(); }
    auto end() const { return vars_.end(); }
    VarId operator[](std::size_t i) const { return vars_[i]; }
    const std::vector<VarId>& vars() const { return vars_; }

    bool contains(VarId v) const;
    bool contains_all(const Monomial& other) const;
    VarId max_var() const { return vars_.empty() ? 0 : vars_.back(); }

    Monomial with(VarId v) const;
    Monomial without(VarId v) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<VarId> vars_;
};

struct Literal {
    VarId var = 0;
    bool negated = false;

    static Literal pos(VarId v) { return {v, false}; }
    static Literal neg(VarId v) { return {v, true}; }
    Literal complement() const { return {var, !negated}; }
    bool value(bool x) const { return negated ? !x : x; }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Conjunction of literals, sorted by (variable, polarity). A product never
// holds both polarities of one variable; construction throws InvalidInput.
class LiteralProduct {
public:
    LiteralProduct() = default;
    LiteralProduct(std::initializer_list<Literal> lits);
    explicit LiteralProduct(std::vector<Literal> lits);
    static LiteralProduct positive(const Monomial& m);

    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }
    Literal operator[](std::size_t i) const { return lits_[i]; }
    const std::vector<Literal>& literals() const { return lits_; }

    bool contains(Literal l) const;
    bool all_positive() const;
    bool all_negated() const;
    VarId max_var() const { return lits_.empty() ? 0 : lits_.back().var; }

    LiteralProduct with(Literal l) const;
    LiteralProduct without(Literal l) const;

    friend bool operator==(const LiteralProduct&, const LiteralProduct&) = default;
    friend std::strong_ordering operator<=>(const LiteralProduct& a, const LiteralProduct& b);

private:
    std::vector<Literal> lits_;
};

// A point of B^n. Positions are 1-based to match VarId.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t n) : bits_(n, false) {}
    Assignment(std::initializer_list<int> bits);

    // Bit (n - v) of `index` is x_v, so numeric order of the index is the
    // lexicographic order of assignments.
    static Assignment from_lex_index(std::uint64_t index, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool value(VarId v) const { return bits_.at(v - 1); }
    void set(VarId v, bool b) { bits_.at(v - 1) = b; }
    std::string to_string() const;

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment& a, const Assignment& b) { return a.bits_ <=> b.bits_; }

private:
    std::vector<bool> bits_;
};

// Canonical multilinear polynomial sum_S a_S prod_{j in S} x_j over the
// variable universe 1..num_vars. No stored coefficient is zero, so two
// functions are pointwise equal iff their term maps are identical.
class PseudoBooleanFunction {
public:
    using TermMap = std::map<Monomial, Rational>;

    PseudoBooleanFunction() = default;
    explicit PseudoBooleanFunction(std::size_t num_vars) : num_vars_(num_vars) {}
    PseudoBooleanFunction(std::size_t num_vars,
                          std::initializer_list<std::pair<Monomial, Rational>> terms);

    static PseudoBooleanFunction constant(const Rational& c, std::size_t num_vars = 0);

    // Accumulates into an existing coefficient; cancelled terms are erased.
    // Throws InvalidInput if a variable lies outside the universe.
    void add_term(const Monomial& m, const Rational& coef);
    void extend_universe(std::size_t num_vars);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    friend bool operator==(const PseudoBooleanFunction&, const PseudoBooleanFunction&) = default;

private:
    std::size_t num_vars_ = 0;
    TermMap terms_;
};

using PBF = PseudoBooleanFunction;

// Polynomial over literal products (a posiform-style expression). Identical
// products are merged; different products with equal value are not.
class LiteralForm {
public:
    using TermMap = std::map<LiteralProduct, Rational>;

    LiteralForm() = default;
    explicit LiteralForm(std::size_t num_vars) : num_vars_(num_vars) {}
    LiteralForm(std::size_t num_vars,
                std::initializer_list<std::pair<LiteralProduct, Rational>> terms);

    void add_term(const LiteralProduct& p, const Rational& coef);
    void add(const LiteralForm& other);
    void remove_term(const LiteralProduct& p) { terms_.erase(p); }
    void extend_universe(std::size_t num_vars);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    friend bool operator==(const LiteralForm&, const LiteralForm&) = default;

private:
    std::size_t num_vars_ = 0;
    TermMap terms_;
};

// Throws InvalidInput unless x.size() == f.num_vars().
Rational evaluate(const PseudoBooleanFunction& f, const Assignment& x);
Rational evaluate(const LiteralForm& f, const Assignment& x);

// Largest |S| with a nonzero coefficient; 0 for constants and the zero function.
std::size_t degree(const PseudoBooleanFunction& f);
// Largest literal count of any term.
std::size_t degree(const LiteralForm& f);

// alpha*f + beta*g over the larger of the two universes.
PseudoBooleanFunction linear_combine(const PseudoBooleanFunction& f, const Rational& alpha,
                                     const PseudoBooleanFunction& g, const Rational& beta);

// Multilinear expansion using xbar = 1 - x and x^2 = x.
PseudoBooleanFunction canonicalize(const LiteralForm& form);
LiteralForm to_literal_form(const PseudoBooleanFunction& f);

// Replaces {i, j} by {w} in every term containing both. The result's universe
// grows to include w. Throws InvalidInput if i == j or w occurs in f.
PseudoBooleanFunction substitute_pair(const PseudoBooleanFunction& f, VarId i, VarId j, VarId w);

// f with x_i fixed to b. The universe is unchanged; x_i simply no longer occurs.
PseudoBooleanFunction restrict(const PseudoBooleanFunction& f, VarId i, bool b);

std::string to_string(const Monomial& m);
std::string to_string(const PseudoBooleanFunction& f);
std::string to_string(const LiteralForm& f);

}  // namespace pbquad
