#include "pbquad/pbf_io.hpp"

#include "pbquad/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace pbquad {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            tokens.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

std::optional<long long> parse_int(std::string_view token) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
        if (!token.empty() && token.front() == '-') {
            return std::nullopt;
        }
    }
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        return std::nullopt;
    }
    return value;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        fn(line_no, text.substr(start, end - start));
        start = end + 1;
    }
}

void emit_coefficient(std::ostringstream& os, const Rational& c) { os << to_string(c); }

}  // namespace

LiteralForm parse_pbf(std::string_view text) {
    std::optional<LiteralForm> form;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            return;
        }
        if (tokens.front() == "p") {
            if (form) {
                fail(line_no, "duplicate header");
            }
            if (tokens.size() != 3 || tokens[1] != "pbf") {
                fail(line_no, "header must read 'p pbf <n>'");
            }
            const auto n = parse_int(tokens[2]);
            if (!n || *n < 0 || tokens[2].front() == '+' || tokens[2].front() == '-') {
                fail(line_no, "bad variable count '" + std::string(tokens[2]) + "'");
            }
            form.emplace(static_cast<std::size_t>(*n));
            return;
        }
        if (!form) {
            fail(line_no, "term before the 'p pbf <n>' header");
        }
        Rational coef;
        try {
            coef = parse_rational(tokens.front());
        } catch (const ParseError& e) {
            fail(line_no, e.what());
        }
        std::vector<Literal> lits;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            const auto k = parse_int(tokens[t]);
            if (!k) {
                fail(line_no, "bad literal '" + std::string(tokens[t]) + "'");
            }
            const long long var = *k < 0 ? -*k : *k;
            if (var == 0 || static_cast<unsigned long long>(var) > form->num_vars()) {
                fail(line_no, "literal '" + std::string(tokens[t]) + "' outside 1.." +
                                  std::to_string(form->num_vars()));
            }
            lits.push_back({static_cast<VarId>(var), *k < 0});
        }
        LiteralProduct product;
        try {
            product = LiteralProduct(std::move(lits));
        } catch (const InvalidInput& e) {
            fail(line_no, e.what());
        }
        form->add_term(product, coef);
    });
    if (!form) {
        throw ParseError("missing 'p pbf <n>' header");
    }
    return *form;
}

std::string emit_pbf(const LiteralForm& form) {
    std::ostringstream os;
    os << "p pbf " << form.num_vars() << '\n';
    for (const auto& [p, c] : form.terms()) {
        emit_coefficient(os, c);
        for (Literal l : p) {
            os << ' ' << (l.negated ? "-" : "") << l.var;
        }
        os << '\n';
    }
    return os.str();
}

std::string emit_pbf(const PseudoBooleanFunction& f) {
    std::ostringstream os;
    os << "p pbf " << f.num_vars() << '\n';
    for (const auto& [m, c] : f.terms()) {
        emit_coefficient(os, c);
        for (VarId v : m) {
            os << ' ' << v;
        }
        os << '\n';
    }
    return os.str();
}

EdgeList parse_edge_list(std::string_view text) {
    EdgeList list;
    std::optional<std::size_t> declared;
    VarId largest = 0;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            return;
        }
        if (tokens.front() == "p") {
            if (declared || tokens.size() < 3 || tokens.size() > 4 || tokens[1] != "edge") {
                fail(line_no, "header must read 'p edge <n> [<m>]'");
            }
            const auto n = parse_int(tokens[2]);
            if (!n || *n < 0) {
                fail(line_no, "bad vertex count");
            }
            declared = static_cast<std::size_t>(*n);
            return;
        }
        if (tokens.size() != 2) {
            fail(line_no, "edge lines hold exactly two vertices");
        }
        const auto a = parse_int(tokens[0]);
        const auto b = parse_int(tokens[1]);
        if (!a || !b || *a <= 0 || *b <= 0) {
            fail(line_no, "vertices are positive integers");
        }
        const auto i = static_cast<VarId>(*a);
        const auto j = static_cast<VarId>(*b);
        largest = std::max({largest, i, j});
        list.edges.emplace_back(i, j);
    });
    list.num_vertices = declared.value_or(largest);
    if (largest > list.num_vertices) {
        throw ParseError("edge endpoint " + std::to_string(largest) + " exceeds the declared vertex count " +
                         std::to_string(list.num_vertices));
    }
    return list;
}

PseudoBooleanFunction gen_star_family(const std::vector<std::pair<VarId, VarId>>& edges, std::size_t n) {
    const auto hub = static_cast<VarId>(n + 1);
    PseudoBooleanFunction f(n + 1);
    for (const auto& [i, j] : edges) {
        if (i == 0 || j == 0 || i > n || j > n) {
            throw InvalidInput("edge (" + std::to_string(i) + "," + std::to_string(j) + ") outside vertices 1.." +
                               std::to_string(n));
        }
        if (i == j) {
            throw InvalidInput("loop at vertex " + std::to_string(i));
        }
        f.add_term({hub, i, j}, 1);
    }
    return f;
}

}  // namespace pbquad
