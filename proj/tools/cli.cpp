#include "cli.hpp"

#include "pbquad/errors.hpp"
#include "pbquad/flowmin.hpp"
#include "pbquad/methods.hpp"
#include "pbquad/pbf_io.hpp"
#include "pbquad/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace pbquad::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) {
        throw InvalidInput("cannot write '" + path + "'");
    }
}

PseudoBooleanFunction load_function(const std::string& path) { return canonicalize(parse_pbf(read_file(path))); }

void print_metrics(std::ostream& out, const QuadMetrics& m) {
    out << "aux_count " << m.aux_count << '\n'
        << "term_count " << m.term_count << '\n'
        << "positive_quadratic_terms " << m.positive_quadratic_terms << '\n'
        << "max_abs_coefficient " << to_string(m.max_abs_coefficient) << '\n';
}

std::string quadratization_file(const Quadratization& q) {
    std::ostringstream os;
    os << "# method " << q.method << '\n';
    os << "# original " << q.num_original << " aux " << q.aux.size() << '\n';
    os << emit_pbf(q.g);
    return os.str();
}

struct Options {
    std::string method = "ishikawa";
    std::string input;
    std::string second;
    std::string output;
    std::string engine = "brute";
    std::string family = "star";
    std::string edges;
    bool report = false;
    std::size_t aux = 0;
    std::size_t vertices = 0;
    std::size_t max_vars = EnumerationLimits{}.max_vars;
};

int cmd_quadratize(const Options& o, std::ostream& out) {
    const auto method = parse_method(o.method);
    if (!method) {
        throw InvalidInput("unknown method '" + o.method + "'");
    }
    const PseudoBooleanFunction f = load_function(o.input);
    const Quadratization q = quadratize(f, *method);
    write_output(o.output, quadratization_file(q), out);
    if (o.report) {
        print_metrics(out, q.metrics);
    }
    return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const PseudoBooleanFunction f = load_function(o.input);
    const PseudoBooleanFunction g = load_function(o.second);
    if (o.aux > g.num_vars() || g.num_vars() - o.aux != f.num_vars()) {
        throw InvalidInput("universe mismatch: F has " + std::to_string(f.num_vars()) + " variables, G has " +
                           std::to_string(g.num_vars()) + " with " + std::to_string(o.aux) + " auxiliaries");
    }
    EnumerationLimits limits;
    limits.max_vars = o.max_vars;
    if (is_quadratization(f, g, limits)) {
        out << "verified\n";
        return kSuccess;
    }
    out << "not a quadratization\n";
    return kVerificationFailed;
}

int cmd_minimize(const Options& o, std::ostream& out) {
    const PseudoBooleanFunction g = load_function(o.input);
    MinResult r;
    if (o.engine == "flow") {
        r = min_cut_minimize(g);
    } else if (o.engine == "brute") {
        EnumerationLimits limits;
        limits.max_vars = o.max_vars;
        r = brute_force_min(g, limits);
    } else {
        throw InvalidInput("unknown engine '" + o.engine + "'");
    }
    out << "value " << to_string(r.value) << '\n' << "argmin " << r.argmin.to_string() << '\n';
    return kSuccess;
}

int cmd_stats(const Options& o, std::ostream& out) {
    const LiteralForm form = parse_pbf(read_file(o.input));
    const PseudoBooleanFunction f = canonicalize(form);
    const EnumerationLimits limits;
    std::string submodular;
    if (degree(f) <= 2) {
        submodular = quadratic_submodularity(f) ? "yes" : "no";
    } else if (f.num_vars() <= limits.lattice_max_vars) {
        submodular = is_submodular_lattice(f, limits) ? "yes" : "no";
    } else if (f.num_vars() <= limits.second_diff_max_vars) {
        submodular = is_submodular_second_diff(f, limits) ? "yes" : "no";
    } else {
        submodular = "unknown (cap exceeded)";
    }
    std::size_t positive_quadratic = 0;
    for (const auto& [m, c] : f.terms()) {
        positive_quadratic += (m.size() == 2 && c > 0) ? 1 : 0;
    }
    out << "variables " << f.num_vars() << '\n'
        << "degree " << degree(f) << '\n'
        << "terms " << f.term_count() << '\n'
        << "positive_quadratic_terms " << positive_quadratic << '\n'
        << "submodular " << submodular << '\n'
        << "unary_negaform " << (is_unary_negaform(form) ? "yes" : "no") << '\n';
    return kSuccess;
}

int cmd_compare(const Options& o, std::ostream& out) {
    const PseudoBooleanFunction f = load_function(o.input);
    EnumerationLimits limits;
    limits.max_vars = o.max_vars;
    out << std::left << std::setw(11) << "method" << std::right << std::setw(6) << "aux" << std::setw(7) << "terms"
        << std::setw(10) << "pos_quad" << std::setw(12) << "max_coef" << std::setw(10) << "verified" << '\n';
    for (Method m : all_methods()) {
        out << std::left << std::setw(11) << to_string(m) << std::right;
        try {
            const Quadratization q = quadratize(f, m);
            std::string verified;
            try {
                verified = is_quadratization(f, q.g, limits) ? "yes" : "NO";
            } catch (const CapExceeded&) {
                verified = "skipped";
            }
            out << std::setw(6) << q.metrics.aux_count << std::setw(7) << q.metrics.term_count << std::setw(10)
                << q.metrics.positive_quadratic_terms << std::setw(12) << to_string(q.metrics.max_abs_coefficient)
                << std::setw(10) << verified << '\n';
        } catch (const InvalidInput&) {
            out << std::setw(6) << "n/a" << std::setw(7) << "n/a" << std::setw(10) << "n/a" << std::setw(12)
                << "n/a" << std::setw(10) << "n/a" << '\n';
        }
    }
    return kSuccess;
}

int cmd_gen(const Options& o, std::ostream& out) {
    if (o.family != "star") {
        throw InvalidInput("unknown family '" + o.family + "'");
    }
    EdgeList edges = parse_edge_list(read_file(o.edges));
    const std::size_t n = o.vertices != 0 ? o.vertices : edges.num_vertices;
    const PseudoBooleanFunction f = gen_star_family(edges.edges, n);
    std::ostringstream os;
    os << "# star family: hub x0 is variable " << n + 1 << '\n' << emit_pbf(f);
    write_output(o.output, os.str(), out);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quadratization of pseudo-Boolean polynomials", "pbquad"};
    app.require_subcommand(1);
    Options o;

    std::vector<std::string> method_names;
    for (Method m : all_methods()) {
        method_names.emplace_back(to_string(m));
    }

    auto* quad = app.add_subcommand("quadratize", "Rewrite a polynomial as a quadratic with auxiliary variables");
    quad->add_option("--method", o.method, "Quadratization method")->check(CLI::IsMember(method_names));
    quad->add_option("input", o.input, "Input .pbf file")->required();
    quad->add_option("-o,--output", o.output, "Output .pbf file (stdout if omitted)");
    quad->add_flag("--report", o.report, "Print size and submodularity metrics");

    auto* ver = app.add_subcommand("verify", "Check that G quadratizes F by exhaustive enumeration");
    ver->add_option("f", o.input, "Source .pbf file")->required();
    ver->add_option("g", o.second, "Candidate quadratization .pbf file")->required();
    ver->add_option("--aux", o.aux, "Number of auxiliary variables (the last K of G)")->required();
    ver->add_option("--max-vars", o.max_vars, "Enumeration cap");

    auto* mini = app.add_subcommand("minimize", "Exact minimum and minimizer");
    mini->add_option("input", o.input, "Input .pbf file")->required();
    mini->add_option("--engine", o.engine, "brute or flow")->check(CLI::IsMember({"brute", "flow"}));
    mini->add_option("--max-vars", o.max_vars, "Enumeration cap for the brute engine");

    auto* stats = app.add_subcommand("stats", "Degree, size and submodularity of a polynomial");
    stats->add_option("input", o.input, "Input .pbf file")->required();

    auto* cmp = app.add_subcommand("compare", "Metrics of every quadratization method");
    cmp->add_option("input", o.input, "Input .pbf file")->required();
    cmp->add_option("--max-vars", o.max_vars, "Enumeration cap for the verified column");

    auto* gen = app.add_subcommand("gen", "Generate an instance family");
    gen->add_option("--family", o.family, "Instance family")->check(CLI::IsMember({"star"}));
    gen->add_option("--edges", o.edges, "Edge list file")->required();
    gen->add_option("--vertices", o.vertices, "Vertex count (default: from the edge list)");
    gen->add_option("-o,--output", o.output, "Output .pbf file (stdout if omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "pbquad: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (quad->parsed()) return cmd_quadratize(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
        if (mini->parsed()) return cmd_minimize(o, out);
        if (stats->parsed()) return cmd_stats(o, out);
        if (cmp->parsed()) return cmd_compare(o, out);
        if (gen->parsed()) return cmd_gen(o, out);
    } catch (const ParseError& e) {
        err << "pbquad: parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const CapExceeded& e) {
        err << "pbquad: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const InvalidInput& e) {
        err << "pbquad: invalid input: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace pbquad::cli
