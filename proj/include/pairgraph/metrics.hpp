#pragma once

// Probabilistic structural metrics over edge-probability adjacencies, their
// point-estimate specialization on 0/1 indicator adjacencies, expected edge
// counts against a consensus edge set, and mean/stderr aggregation.

#include <string>
#include <vector>

#include "pairgraph/types.hpp"

namespace pairgraph {

struct GraphMetrics {
    double shd = 0.0;
    double shd_per_node = 0.0;
    double tpr = 0.0;
    double fpr = 0.0;
};

struct EdgeCounts {
    double predicted = 0.0;
    double correct = 0.0;
    double reversed = 0.0;
};

// The three probabilistic metrics. Per unordered pair: a true edge
// contributes (1 - mass on its direction) to SHD, its mass to TP, and its
// reversed mass to FP; a non-adjacent pair contributes both direction
// masses to SHD and FP. TPR = TP / max(|E|, 1) and
// FPR = FP / max(d(d-1)/2 - |E|, 1).
double prob_shd(const WeightedAdjacency& a, const AcyclicGraph& truth);
double prob_tpr(const WeightedAdjacency& a, const AcyclicGraph& truth);
double prob_fpr(const WeightedAdjacency& a, const AcyclicGraph& truth);

GraphMetrics prob_metrics(const WeightedAdjacency& a, const AcyclicGraph& truth);

// Probabilistic metrics applied to the 0/1 indicator adjacency of g.
GraphMetrics point_metrics(const DirectedGraph& g, const AcyclicGraph& truth);

// Same, with each undirected edge entering as 0.5 mass in both directions.
GraphMetrics cpdag_point_metrics(const MixedGraph& g, const AcyclicGraph& truth);

// Indicator adjacency used by the point metrics (0.5 for undirected edges).
WeightedAdjacency indicator_adjacency(const MixedGraph& g);

// Expected edge counts against a consensus edge set that need not cover a
// full DAG: predicted sums every entry, correct/reversed sum the mass on
// each consensus edge's direction and its reverse.
EdgeCounts expected_edge_counts(const WeightedAdjacency& a, const std::vector<Edge>& truth_edges);

struct AggregateStat {
    double mean = 0.0;
    double stderr_ = 0.0;  // sample std / sqrt(count); 0 for a single value
};

// Throws data_error on an empty group.
AggregateStat aggregate_values(const std::vector<double>& values);

}  // namespace pairgraph
