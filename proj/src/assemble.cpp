#include "pairgraph/assemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "pairgraph/rng.hpp"

namespace pairgraph {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_or_neg_inf(double p) { return p > 0.0 ? std::log(p) : kNegInf; }

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Reachability to -> from over an adjacency-list DAG; used as the
// would-this-edge-close-a-cycle test during greedy insertion.
bool reaches(const std::vector<std::vector<int>>& out, int from, int to,
             std::vector<char>& visited, std::vector<int>& stack) {
    if (from == to) return true;
    std::fill(visited.begin(), visited.end(), 0);
    stack.clear();
    stack.push_back(from);
    visited[from] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : out[v]) {
            if (w == to) return true;
            if (!visited[w]) {
                visited[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

}  // namespace

WeightedAdjacency beliefs_to_adjacency(const PairBeliefs& beliefs) {
    const int d = beliefs.node_count();
    std::vector<double> a(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const BeliefTriple& t = beliefs.at(i, j);
            a[static_cast<std::size_t>(i) * d + j] = t.fwd;
            a[static_cast<std::size_t>(j) * d + i] = t.rev;
        }
    }
    return WeightedAdjacency(d, std::move(a));
}

double graph_log_probability(const PairBeliefs& beliefs, const DirectedGraph& g) {
    if (g.node_count() != beliefs.node_count()) {
        throw invariant_error("graph and beliefs disagree on node count");
    }
    const int d = beliefs.node_count();
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const BeliefTriple& t = beliefs.at(i, j);
            if (g.has_edge(i, j)) {
                acc += log_or_neg_inf(t.fwd);
            } else if (g.has_edge(j, i)) {
                acc += log_or_neg_inf(t.rev);
            } else {
                acc += log_or_neg_inf(t.none);
            }
        }
    }
    return acc;
}

DirectedGraph mlg(const PairBeliefs& beliefs) {
    const int d = beliefs.node_count();
    std::vector<Edge> edges;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const BeliefTriple& t = beliefs.at(i, j);
            // Tie preference: none, then forward, then reverse.
            if (t.fwd > t.none && t.fwd >= t.rev) {
                edges.push_back({i, j});
            } else if (t.rev > t.none && t.rev > t.fwd) {
                edges.push_back({j, i});
            }
        }
    }
    return DirectedGraph(d, std::move(edges));
}

AcyclicGraph msdag(const WeightedAdjacency& adjacency) {
    const int d = adjacency.node_count();

    // Phase 1: maximum spanning forest on the pairwise max weights,
    // oriented along the stronger direction.
    struct Undirected {
        double w;
        int i, j;
    };
    std::vector<Undirected> forest_candidates;
    forest_candidates.reserve(pair_count(d));
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const double w = std::max(adjacency.at(i, j), adjacency.at(j, i));
            if (w > 0.0) forest_candidates.push_back({w, i, j});
        }
    }
    std::sort(forest_candidates.begin(), forest_candidates.end(),
              [](const Undirected& a, const Undirected& b) {
                  return std::tie(b.w, a.i, a.j) < std::tie(a.w, b.i, b.j);
              });

    UnionFind components(d);
    std::vector<std::vector<int>> out(d);
    std::vector<Edge> edges;
    for (const Undirected& c : forest_candidates) {
        if (!components.unite(c.i, c.j)) continue;
        const bool forward = adjacency.at(c.i, c.j) >= adjacency.at(c.j, c.i);
        const Edge e = forward ? Edge{c.i, c.j} : Edge{c.j, c.i};
        out[e.first].push_back(e.second);
        edges.push_back(e);
    }

    // Phase 2: greedy completion over the remaining directed edges.
    struct Directed {
        double w;
        int from, to;
    };
    std::vector<Directed> rest;
    rest.reserve(static_cast<std::size_t>(d) * (d - 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j || adjacency.at(i, j) <= 0.0) continue;
            if (std::find(out[i].begin(), out[i].end(), j) != out[i].end()) continue;
            rest.push_back({adjacency.at(i, j), i, j});
        }
    }
    std::sort(rest.begin(), rest.end(), [](const Directed& a, const Directed& b) {
        return std::tie(b.w, a.from, a.to) < std::tie(a.w, b.from, b.to);
    });

    std::vector<char> visited(d);
    std::vector<int> stack;
    for (const Directed& c : rest) {
        if (reaches(out, c.to, c.from, visited, stack)) continue;  // would close a cycle
        out[c.from].push_back(c.to);
        edges.push_back({c.from, c.to});
    }

    return AcyclicGraph(d, std::move(edges));
}

TopologicalOrder ml_order(const PairBeliefs& beliefs) {
    return toposort(msdag(beliefs_to_adjacency(beliefs)));
}

OrderedEdgeBeliefs renormalize(const PairBeliefs& beliefs, const TopologicalOrder& order) {
    const int d = beliefs.node_count();
    if (order.node_count() != d) throw invariant_error("order and beliefs disagree on node count");
    const std::vector<int>& pos = order.position();

    std::vector<double> probs(pair_count(d));
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const BeliefTriple& t = beliefs.at(i, j);
            const double fwd_mass = pos[i] < pos[j] ? t.fwd : t.rev;
            const double denom = fwd_mass + t.none;
            probs[pair_index(d, i, j)] = denom > 0.0 ? fwd_mass / denom : 0.0;
        }
    }
    return OrderedEdgeBeliefs(order, std::move(probs));
}

double dag_log_probability(const OrderedEdgeBeliefs& ordered, const AcyclicGraph& g) {
    const int d = ordered.node_count();
    if (g.node_count() != d) throw invariant_error("graph and beliefs disagree on node count");
    const std::vector<int>& pos = ordered.order().position();
    for (const Edge& e : g.edges()) {
        if (pos[e.first] >= pos[e.second]) {
            throw invariant_error("graph inconsistent with topological order: edge " +
                                  std::to_string(e.first) + " -> " + std::to_string(e.second));
        }
    }

    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const int from = pos[i] < pos[j] ? i : j;
            const int to = pos[i] < pos[j] ? j : i;
            const double p = ordered.prob_along_order(i, j);
            acc += g.has_edge(from, to) ? log_or_neg_inf(p) : log_or_neg_inf(1.0 - p);
        }
    }
    return acc;
}

AcyclicGraph mldag(const OrderedEdgeBeliefs& ordered) {
    const int d = ordered.node_count();
    const std::vector<int>& pos = ordered.order().position();
    std::vector<Edge> edges;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (ordered.prob_along_order(i, j) > 0.5) {  // ties excluded
                edges.push_back(pos[i] < pos[j] ? Edge{i, j} : Edge{j, i});
            }
        }
    }
    return AcyclicGraph(d, std::move(edges));
}

DirectedGraph sample_digraph(const PairBeliefs& beliefs, std::uint64_t seed) {
    const int d = beliefs.node_count();
    std::mt19937_64 eng = make_engine(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const BeliefTriple& t = beliefs.at(i, j);
            const double x = next_double(eng);
            if (x < t.rev) {
                edges.push_back({j, i});
            } else if (x >= t.rev + t.none) {
                edges.push_back({i, j});
            }
        }
    }
    return DirectedGraph(d, std::move(edges));
}

AcyclicGraph sample_dag(const OrderedEdgeBeliefs& ordered, std::uint64_t seed) {
    const int d = ordered.node_count();
    const std::vector<int>& pos = ordered.order().position();
    std::mt19937_64 eng = make_engine(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (next_double(eng) < ordered.prob_along_order(i, j)) {
                edges.push_back(pos[i] < pos[j] ? Edge{i, j} : Edge{j, i});
            }
        }
    }
    return AcyclicGraph(d, std::move(edges));
}

}  // namespace pairgraph
