#include "pairgraph/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace pairgraph {

namespace {

void check_same_d(int a, int b) {
    if (a != b) {
        throw invariant_error("node count mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b));
    }
}

struct PairSums {
    double shd = 0.0;
    double tp = 0.0;
    double fp = 0.0;
    std::size_t true_edges = 0;
};

PairSums pair_sums(const WeightedAdjacency& a, const AcyclicGraph& truth) {
    check_same_d(a.node_count(), truth.node_count());
    const int d = truth.node_count();
    PairSums s;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (truth.has_edge(i, j)) {
                s.shd += 1.0 - a.at(i, j);
                s.tp += a.at(i, j);
                s.fp += a.at(j, i);
                ++s.true_edges;
            } else if (truth.has_edge(j, i)) {
                s.shd += 1.0 - a.at(j, i);
                s.tp += a.at(j, i);
                s.fp += a.at(i, j);
                ++s.true_edges;
            } else {
                s.shd += a.at(i, j) + a.at(j, i);
                s.fp += a.at(i, j) + a.at(j, i);
            }
        }
    }
    return s;
}

}  // namespace

double prob_shd(const WeightedAdjacency& a, const AcyclicGraph& truth) {
    return pair_sums(a, truth).shd;
}

double prob_tpr(const WeightedAdjacency& a, const AcyclicGraph& truth) {
    const PairSums s = pair_sums(a, truth);
    return s.tp / std::max<double>(static_cast<double>(s.true_edges), 1.0);
}

double prob_fpr(const WeightedAdjacency& a, const AcyclicGraph& truth) {
    const PairSums s = pair_sums(a, truth);
    const double m = static_cast<double>(pair_count(truth.node_count()));
    return s.fp / std::max(m - static_cast<double>(s.true_edges), 1.0);
}

GraphMetrics prob_metrics(const WeightedAdjacency& a, const AcyclicGraph& truth) {
    const PairSums s = pair_sums(a, truth);
    const double m = static_cast<double>(pair_count(truth.node_count()));
    GraphMetrics gm;
    gm.shd = s.shd;
    gm.shd_per_node = s.shd / truth.node_count();
    gm.tpr = s.tp / std::max<double>(static_cast<double>(s.true_edges), 1.0);
    gm.fpr = s.fp / std::max(m - static_cast<double>(s.true_edges), 1.0);
    return gm;
}

WeightedAdjacency indicator_adjacency(const MixedGraph& g) {
    const int d = g.node_count();
    std::vector<double> a(static_cast<std::size_t>(d) * d, 0.0);
    for (const Edge& e : g.directed()) a[static_cast<std::size_t>(e.first) * d + e.second] = 1.0;
    for (const Edge& e : g.undirected()) {
        a[static_cast<std::size_t>(e.first) * d + e.second] = 0.5;
        a[static_cast<std::size_t>(e.second) * d + e.first] = 0.5;
    }
    return WeightedAdjacency(d, std::move(a));
}

GraphMetrics point_metrics(const DirectedGraph& g, const AcyclicGraph& truth) {
    check_same_d(g.node_count(), truth.node_count());
    return prob_metrics(indicator_adjacency(MixedGraph(g.node_count(), g.edges(), {})), truth);
}

GraphMetrics cpdag_point_metrics(const MixedGraph& g, const AcyclicGraph& truth) {
    check_same_d(g.node_count(), truth.node_count());
    return prob_metrics(indicator_adjacency(g), truth);
}

EdgeCounts expected_edge_counts(const WeightedAdjacency& a, const std::vector<Edge>& truth_edges) {
    const int d = a.node_count();
    EdgeCounts counts;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i != j) counts.predicted += a.at(i, j);
        }
    }
    for (const Edge& e : truth_edges) {
        if (e.first < 0 || e.first >= d || e.second < 0 || e.second >= d || e.first == e.second) {
            throw invariant_error("consensus edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ") out of range");
        }
        counts.correct += a.at(e.first, e.second);
        counts.reversed += a.at(e.second, e.first);
    }
    return counts;
}

AggregateStat aggregate_values(const std::vector<double>& values) {
    if (values.empty()) throw data_error("cannot aggregate an empty group");
    AggregateStat stat;
    for (double v : values) stat.mean += v;
    stat.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - stat.mean) * (v - stat.mean);
        const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
        stat.stderr_ = sd / std::sqrt(static_cast<double>(values.size()));
    }
    return stat;
}

}  // namespace pairgraph
