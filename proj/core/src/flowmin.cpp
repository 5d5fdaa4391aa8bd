#include "pbquad/flowmin.hpp"

#include "pbquad/errors.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>

namespace pbquad {

FlowNetwork build_network(const PseudoBooleanFunction& g) {
    if (degree(g) > 2) {
        throw InvalidInput("flow minimization needs a quadratic function, got degree " + std::to_string(degree(g)));
    }
    if (!quadratic_submodularity(g)) {
        throw InvalidInput("flow minimization needs nonpositive quadratic coefficients");
    }
    FlowNetwork net;
    net.num_vars = g.num_vars();
    net.constant_offset = 0;
    std::vector<Rational> linear(g.num_vars() + 1, Rational(0));

    for (const auto& [m, c] : g.terms()) {
        if (m.empty()) {
            net.constant_offset += c;
        } else if (m.size() == 1) {
            linear[m[0]] += c;
        } else {
            // -c x_i x_j = c [x_i = 0, x_j = 1] - c x_j
            const Rational cap = -c;
            net.arcs.push_back({m[0] - 1, m[1] - 1, cap});
            linear[m[1]] -= cap;
        }
    }
    for (VarId v = 1; v <= g.num_vars(); ++v) {
        const Rational& a = linear[v];
        if (a > 0) {
            net.arcs.push_back({net.source(), v - 1, a});  // cut when x_v = 1
        } else if (a < 0) {
            net.arcs.push_back({v - 1, net.sink(), -a});  // a x = a + |a| (1 - x)
            net.constant_offset += a;
        }
    }
    return net;
}

Rational cut_value(const FlowNetwork& net, const Assignment& x) {
    if (x.size() != net.num_vars) {
        throw InvalidInput("assignment size does not match the network");
    }
    auto sink_side = [&](std::size_t node) {
        if (node == net.source()) {
            return false;
        }
        if (node == net.sink()) {
            return true;
        }
        return x.value(static_cast<VarId>(node + 1));
    };
    Rational total = 0;
    for (const auto& arc : net.arcs) {
        if (!sink_side(arc.from) && sink_side(arc.to)) {
            total += arc.capacity;
        }
    }
    return total;
}

namespace {

class Dinic {
public:
    explicit Dinic(const FlowNetwork& net) : adj_(net.node_count()), level_(net.node_count()), next_(net.node_count()) {
        for (const auto& arc : net.arcs) {
            if (arc.capacity < 0) {
                throw std::logic_error("negative arc capacity");
            }
            adj_[arc.from].push_back({arc.to, adj_[arc.to].size(), arc.capacity});
            adj_[arc.to].push_back({arc.from, adj_[arc.from].size() - 1, Rational(0)});
        }
    }

    Rational run(std::size_t s, std::size_t t) {
        Rational flow = 0;
        while (bfs(s, t)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (true) {
                Rational pushed = augment(s, t, std::nullopt);
                if (pushed == 0) {
                    break;
                }
                flow += pushed;
            }
        }
        return flow;
    }

    std::vector<bool> reachable(std::size_t s) const {
        std::vector<bool> seen(adj_.size(), false);
        std::queue<std::size_t> todo;
        seen[s] = true;
        todo.push(s);
        while (!todo.empty()) {
            const std::size_t u = todo.front();
            todo.pop();
            for (const auto& e : adj_[u]) {
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = true;
                    todo.push(e.to);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        std::size_t to;
        std::size_t rev;
        Rational cap;
    };

    bool bfs(std::size_t s, std::size_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::size_t> todo;
        level_[s] = 0;
        todo.push(s);
        while (!todo.empty()) {
            const std::size_t u = todo.front();
            todo.pop();
            for (const auto& e : adj_[u]) {
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[u] + 1;
                    todo.push(e.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    // Pushes along one shortest augmenting path; `limit` is unbounded at the source.
    Rational augment(std::size_t u, std::size_t t, std::optional<Rational> limit) {
        if (u == t) {
            return *limit;
        }
        for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
            Edge& e = adj_[u][i];
            if (e.cap <= 0 || level_[e.to] != level_[u] + 1) {
                continue;
            }
            const Rational bound = limit && *limit < e.cap ? *limit : e.cap;
            Rational pushed = augment(e.to, t, bound);
            if (pushed > 0) {
                e.cap -= pushed;
                adj_[e.to][e.rev].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Edge>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
    Dinic dinic(net);
    MaxFlowResult result;
    result.value = dinic.run(net.source(), net.sink());
    result.source_side = dinic.reachable(net.source());
    return result;
}

MinResult min_cut_minimize(const PseudoBooleanFunction& g) {
    const FlowNetwork net = build_network(g);
    const MaxFlowResult flow = max_flow(net);
    Assignment x(g.num_vars());
    for (VarId v = 1; v <= g.num_vars(); ++v) {
        x.set(v, !flow.source_side[v - 1]);
    }
    MinResult result{flow.value + net.constant_offset, x};
    if (evaluate(g, x) != result.value) {
        throw std::logic_error("min cut does not reproduce the function value");
    }
    return result;
}

}  // namespace pbquad
