#include "pbquad/verify.hpp"

#include "pbquad/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pbquad {

namespace {

constexpr std::size_t kHardBitLimit = 40;

// Multilinear polynomial over bit masks, coefficients scaled to integers by
// a common denominator. Variable v lives at bit (nbits - v), so comparing
// masks numerically compares assignments lexicographically.
template <typename Int>
struct BitPolynomial {
    struct Entry {
        std::uint64_t rest;
        Int coef;
    };

    std::size_t nbits = 0;
    Int constant = 0;
    std::vector<Entry> terms;
    std::vector<std::vector<Entry>> by_bit;

    Int value(std::uint64_t m) const {
        Int v = constant;
        for (const auto& t : terms) {
            if ((t.rest & m) == t.rest) {
                v += t.coef;
            }
        }
        return v;
    }

    // Change of value when `bit` flips, given the state `m` before the flip.
    Int flip_delta(std::uint64_t m, unsigned bit) const {
        Int d = 0;
        for (const auto& e : by_bit[bit]) {
            if ((e.rest & m) == e.rest) {
                d += e.coef;
            }
        }
        if ((m >> bit) & 1U) {
            d = -d;
        }
        return d;
    }
};

mpz_class common_denominator(std::initializer_list<const PseudoBooleanFunction*> polys) {
    mpz_class den = 1;
    for (const auto* f : polys) {
        for (const auto& [m, c] : f->terms()) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    return den;
}

bool fits_int64(std::initializer_list<const PseudoBooleanFunction*> polys, const mpz_class& den) {
    const mpz_class bound = mpz_class(1) << 62;
    for (const auto* f : polys) {
        mpz_class total = 0;
        for (const auto& [m, c] : f->terms()) {
            total += abs(c.get_num()) * (den / c.get_den());
        }
        if (total >= bound) {
            return false;
        }
    }
    return true;
}

template <typename Int>
Int to_int(const mpz_class& z) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
        return z.get_si();
    } else {
        return z;
    }
}

template <typename Int>
Rational to_rational(const Int& v, const mpz_class& den) {
    Rational r;
    if constexpr (std::is_same_v<Int, std::int64_t>) {
        r = Rational(mpz_class(static_cast<long>(v)), den);
    } else {
        r = Rational(v, den);
    }
    r.canonicalize();
    return r;
}

template <typename Int>
BitPolynomial<Int> compile(const PseudoBooleanFunction& f, const mpz_class& den, std::size_t nbits) {
    BitPolynomial<Int> p;
    p.nbits = nbits;
    p.by_bit.resize(nbits);
    for (const auto& [m, c] : f.terms()) {
        const Int coef = to_int<Int>(mpz_class(c.get_num() * (den / c.get_den())));
        if (m.empty()) {
            p.constant += coef;
            continue;
        }
        std::uint64_t mask = 0;
        for (VarId v : m) {
            mask |= std::uint64_t{1} << (nbits - v);
        }
        p.terms.push_back({mask, coef});
        for (VarId v : m) {
            const unsigned bit = static_cast<unsigned>(nbits - v);
            p.by_bit[bit].push_back({mask & ~(std::uint64_t{1} << bit), coef});
        }
    }
    return p;
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// Runs fn(chunk) for chunk in [0, num_chunks) on up to `threads` workers.
// fn returns false to request early termination of the remaining chunks.
void for_each_chunk(std::uint64_t num_chunks, unsigned threads, const std::function<bool(std::uint64_t)>& fn) {
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, num_chunks));
    if (threads <= 1) {
        for (std::uint64_t c = 0; c < num_chunks; ++c) {
            if (!fn(c)) {
                return;
            }
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> stop{false};
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::uint64_t c = next++; c < num_chunks && !stop; c = next++) {
                if (!fn(c)) {
                    stop = true;
                }
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
}

// Number of high bits fixed per chunk: enough chunks to spread over the
// workers, never more than `max_chunk_bits`.
std::size_t chunk_bits(std::size_t max_chunk_bits, unsigned threads) {
    if (threads <= 1) {
        return 0;
    }
    std::size_t bits = 0;
    while (bits < max_chunk_bits && (std::uint64_t{1} << bits) < std::uint64_t{threads} * 8) {
        ++bits;
    }
    return bits;
}

template <typename Int>
std::pair<Int, std::uint64_t> minimize_bits(const BitPolynomial<Int>& p, unsigned threads) {
    const std::size_t n = p.nbits;
    const std::size_t cbits = chunk_bits(n, threads);
    const std::size_t low = n - cbits;
    const std::uint64_t chunks = std::uint64_t{1} << cbits;
    std::vector<std::pair<Int, std::uint64_t>> best(chunks);

    for_each_chunk(chunks, threads, [&](std::uint64_t chunk) {
        std::uint64_t mask = chunk << low;
        Int value = p.value(mask);
        Int best_value = value;
        std::uint64_t best_mask = mask;
        const std::uint64_t steps = std::uint64_t{1} << low;
        for (std::uint64_t i = 1; i < steps; ++i) {
            const auto bit = static_cast<unsigned>(std::countr_zero(i));
            value += p.flip_delta(mask, bit);
            mask ^= std::uint64_t{1} << bit;
            if (value < best_value || (value == best_value && mask < best_mask)) {
                best_value = value;
                best_mask = mask;
            }
        }
        best[chunk] = {best_value, best_mask};
        return true;
    });

    auto result = best.front();
    for (const auto& b : best) {
        if (b.first < result.first || (b.first == result.first && b.second < result.second)) {
            result = b;
        }
    }
    return result;
}

template <typename Int>
bool check_quadratization(const BitPolynomial<Int>& f, const BitPolynomial<Int>& g, std::size_t nx,
                          std::size_t nw, unsigned threads) {
    const std::size_t cbits = chunk_bits(nx, threads);
    const std::size_t low = nx + nw - cbits;
    const std::uint64_t chunks = std::uint64_t{1} << cbits;
    const std::uint64_t block = std::uint64_t{1} << nw;
    const std::uint64_t steps = std::uint64_t{1} << low;
    std::atomic<bool> ok{true};

    for_each_chunk(chunks, threads, [&](std::uint64_t chunk) {
        std::uint64_t mask = chunk << low;
        Int gval = g.value(mask);
        Int fval = f.value(mask);
        Int block_min = gval;
        for (std::uint64_t i = 1; i <= steps; ++i) {
            const auto bit = static_cast<unsigned>(std::countr_zero(i));
            if (i % block == 0) {
                if (block_min != fval) {
                    ok = false;
                    return false;
                }
                if (i == steps) {
                    break;
                }
                fval += f.flip_delta(mask, bit);
                gval += g.flip_delta(mask, bit);
                mask ^= std::uint64_t{1} << bit;
                block_min = gval;
            } else {
                gval += g.flip_delta(mask, bit);
                mask ^= std::uint64_t{1} << bit;
                if (gval < block_min) {
                    block_min = gval;
                }
            }
        }
        return ok.load();
    });
    return ok;
}

// table[x] = min over the low nw bits of p, x being the high nx bits.
template <typename Int>
std::vector<Int> min_over_low_bits(const BitPolynomial<Int>& p, std::size_t nx, std::size_t nw, unsigned threads) {
    const std::size_t cbits = chunk_bits(nx, threads);
    const std::size_t low = nx + nw - cbits;
    const std::uint64_t chunks = std::uint64_t{1} << cbits;
    const std::uint64_t block = std::uint64_t{1} << nw;
    const std::uint64_t steps = std::uint64_t{1} << low;
    std::vector<Int> table(std::uint64_t{1} << nx);

    for_each_chunk(chunks, threads, [&](std::uint64_t chunk) {
        std::uint64_t mask = chunk << low;
        Int value = p.value(mask);
        Int block_min = value;
        for (std::uint64_t i = 1; i <= steps; ++i) {
            const auto bit = static_cast<unsigned>(std::countr_zero(i));
            if (i % block == 0) {
                table[mask >> nw] = block_min;
                if (i == steps) {
                    break;
                }
                value += p.flip_delta(mask, bit);
                mask ^= std::uint64_t{1} << bit;
                block_min = value;
            } else {
                value += p.flip_delta(mask, bit);
                mask ^= std::uint64_t{1} << bit;
                if (value < block_min) {
                    block_min = value;
                }
            }
        }
        return true;
    });
    return table;
}

template <typename Int>
std::vector<Int> value_table(const BitPolynomial<Int>& p) {
    const std::uint64_t size = std::uint64_t{1} << p.nbits;
    std::vector<Int> table(size);
    std::uint64_t mask = 0;
    Int value = p.value(0);
    table[0] = value;
    for (std::uint64_t i = 1; i < size; ++i) {
        const auto bit = static_cast<unsigned>(std::countr_zero(i));
        value += p.flip_delta(mask, bit);
        mask ^= std::uint64_t{1} << bit;
        table[mask] = value;
    }
    return table;
}

template <typename Int>
bool lattice_submodular(const BitPolynomial<Int>& p) {
    const auto table = value_table(p);
    const std::uint64_t size = table.size();
    for (std::uint64_t x = 0; x < size; ++x) {
        for (std::uint64_t y = x + 1; y < size; ++y) {
            if (table[x | y] + table[x & y] > table[x] + table[y]) {
                return false;
            }
        }
    }
    return true;
}

template <typename Int>
bool second_diff_submodular(const BitPolynomial<Int>& p) {
    const auto table = value_table(p);
    const std::size_t n = p.nbits;
    const std::uint64_t size = table.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint64_t ei = std::uint64_t{1} << i;
            const std::uint64_t ej = std::uint64_t{1} << j;
            for (std::uint64_t x = 0; x < size; ++x) {
                if ((x & (ei | ej)) != 0) {
                    continue;
                }
                if (table[x | ei | ej] + table[x] > table[x | ei] + table[x | ej]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Auxiliary variables grouped by shared terms of g. With x fixed, the
// minimum over w is the sum of the minima over each group.
struct AuxSplit {
    PseudoBooleanFunction base;                      // terms without auxiliaries, over nx
    std::vector<PseudoBooleanFunction> components;   // over nx + group size, aux renumbered
};

AuxSplit split_auxiliaries(const PseudoBooleanFunction& g, std::size_t nx) {
    const std::size_t n = g.num_vars();
    std::vector<std::size_t> parent(n + 1);
    for (std::size_t v = 0; v <= n; ++v) {
        parent[v] = v;
    }
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& [m, c] : g.terms()) {
        std::size_t first = 0;
        for (VarId v : m) {
            if (v <= nx) {
                continue;
            }
            if (first == 0) {
                first = find(v);
            } else {
                parent[find(v)] = first;
            }
        }
    }

    AuxSplit split;
    split.base = PseudoBooleanFunction(nx);
    std::vector<std::size_t> index_of(n + 1, 0);  // root -> component index + 1
    std::vector<std::vector<VarId>> members;
    for (std::size_t v = nx + 1; v <= n; ++v) {
        const std::size_t r = find(v);
        if (index_of[r] == 0) {
            members.emplace_back();
            index_of[r] = members.size();
        }
        members[index_of[r] - 1].push_back(static_cast<VarId>(v));
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
        split.components.emplace_back(nx + members[k].size());
    }
    std::vector<VarId> local(n + 1, 0);
    for (const auto& group : members) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            local[group[i]] = static_cast<VarId>(nx + i + 1);
        }
    }
    for (const auto& [m, c] : g.terms()) {
        std::size_t comp = 0;
        std::vector<VarId> vars;
        for (VarId v : m) {
            if (v <= nx) {
                vars.push_back(v);
            } else {
                comp = index_of[find(v)];
                vars.push_back(local[v]);
            }
        }
        if (comp == 0) {
            split.base.add_term(m, c);
        } else {
            split.components[comp - 1].add_term(Monomial(vars), c);
        }
    }
    return split;
}

template <typename Int>
bool check_decomposed(const PseudoBooleanFunction& f, const AuxSplit& split, const mpz_class& den, std::size_t nx,
                      unsigned threads) {
    std::vector<Int> total = value_table(compile<Int>(split.base, den, nx));
    for (const auto& gc : split.components) {
        const std::size_t nw = gc.num_vars() - nx;
        const auto table = min_over_low_bits(compile<Int>(gc, den, nx + nw), nx, nw, threads);
        for (std::size_t i = 0; i < total.size(); ++i) {
            total[i] += table[i];
        }
    }
    return total == value_table(compile<Int>(f, den, nx));
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap || n > kHardBitLimit) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " variables exceed the cap of " +
                          std::to_string(std::min(cap, kHardBitLimit)));
    }
}

}  // namespace

MinResult brute_force_min(const PseudoBooleanFunction& f, const EnumerationLimits& limits) {
    const std::size_t n = f.num_vars();
    check_cap(n, limits.max_vars, "brute_force_min");
    const mpz_class den = common_denominator({&f});
    const unsigned threads = resolve_threads(limits.threads);
    auto finish = [&](const auto& best) {
        return MinResult{to_rational(best.first, den), Assignment::from_lex_index(best.second, n)};
    };
    if (fits_int64({&f}, den)) {
        return finish(minimize_bits(compile<std::int64_t>(f, den, n), threads));
    }
    return finish(minimize_bits(compile<mpz_class>(f, den, n), threads));
}

bool is_quadratization(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g,
                       const EnumerationLimits& limits) {
    const std::size_t nx = f.num_vars();
    if (g.num_vars() < nx) {
        throw InvalidInput("quadratization universe (" + std::to_string(g.num_vars()) +
                           ") is smaller than the source universe (" + std::to_string(nx) + ")");
    }
    const std::size_t n = g.num_vars();
    const mpz_class den = common_denominator({&f, &g});
    const unsigned threads = resolve_threads(limits.threads);
    const AuxSplit split = split_auxiliaries(g, nx);
    if (split.components.size() >= 2) {
        std::size_t widest = nx;
        for (const auto& gc : split.components) {
            widest = std::max(widest, gc.num_vars());
        }
        check_cap(widest, limits.max_vars, "is_quadratization");
        if (fits_int64({&f, &g}, den)) {
            return check_decomposed<std::int64_t>(f, split, den, nx, threads);
        }
        return check_decomposed<mpz_class>(f, split, den, nx, threads);
    }
    check_cap(n, limits.max_vars, "is_quadratization");
    if (fits_int64({&f, &g}, den)) {
        return check_quadratization(compile<std::int64_t>(f, den, n), compile<std::int64_t>(g, den, n), nx,
                                    n - nx, threads);
    }
    return check_quadratization(compile<mpz_class>(f, den, n), compile<mpz_class>(g, den, n), nx, n - nx,
                                threads);
}

bool is_submodular_lattice(const PseudoBooleanFunction& f, const EnumerationLimits& limits) {
    const std::size_t n = f.num_vars();
    check_cap(n, limits.lattice_max_vars, "is_submodular_lattice");
    const mpz_class den = common_denominator({&f});
    if (fits_int64({&f}, den)) {
        return lattice_submodular(compile<std::int64_t>(f, den, n));
    }
    return lattice_submodular(compile<mpz_class>(f, den, n));
}

bool is_submodular_second_diff(const PseudoBooleanFunction& f, const EnumerationLimits& limits) {
    const std::size_t n = f.num_vars();
    check_cap(n, limits.second_diff_max_vars, "is_submodular_second_diff");
    const mpz_class den = common_denominator({&f});
    if (fits_int64({&f}, den)) {
        return second_diff_submodular(compile<std::int64_t>(f, den, n));
    }
    return second_diff_submodular(compile<mpz_class>(f, den, n));
}

bool quadratic_submodularity(const PseudoBooleanFunction& g) {
    if (degree(g) > 2) {
        throw InvalidInput("quadratic_submodularity needs a function of degree <= 2");
    }
    return std::all_of(g.terms().begin(), g.terms().end(),
                       [](const auto& t) { return t.first.size() != 2 || t.second <= 0; });
}

bool is_unary_negaform(const LiteralForm& form) {
    for (const auto& [p, c] : form.terms()) {
        if (p.empty()) {
            continue;
        }
        if (c >= 0 || !(p.all_positive() || p.all_negated())) {
            return false;
        }
    }
    return true;
}

QuadMetrics metrics(const Quadratization& q) { return compute_metrics(q.g, q.aux.size()); }

}  // namespace pbquad
