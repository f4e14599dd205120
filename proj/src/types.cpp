#include "pairgraph/types.hpp"

#include <utility>

namespace pairgraph {

namespace {
constexpr double kSimplexTolerance = 1e-9;
}

VariableMatrix::VariableMatrix(int n_, int d_, std::vector<double> values_,
                               std::vector<std::string> column_names_)
    : n(n_), d(d_), values(std::move(values_)), column_names(std::move(column_names_)) {
    if (n < 2) throw invariant_error("need at least 2 samples, got " + std::to_string(n));
    if (d < 2) throw invariant_error("need at least 2 variables, got " + std::to_string(d));
    if (values.size() != static_cast<std::size_t>(n) * d) {
        throw invariant_error("value buffer size does not match n*d");
    }
    if (!column_names.empty() && column_names.size() != static_cast<std::size_t>(d)) {
        throw invariant_error("column_names size does not match d");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw invariant_error("non-finite entry in data matrix");
    }
}

std::vector<double> VariableMatrix::column(int col) const {
    std::vector<double> out(n);
    for (int r = 0; r < n; ++r) out[r] = at(r, col);
    return out;
}

PairBeliefs::PairBeliefs(int d, std::vector<BeliefTriple> entries)
    : d_(d), entries_(std::move(entries)) {
    if (d_ < 2) throw invariant_error("beliefs need at least 2 nodes");
    if (entries_.size() != pair_count(d_)) {
        throw invariant_error("expected " + std::to_string(pair_count(d_)) + " pair entries, got " +
                              std::to_string(entries_.size()));
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const BeliefTriple& t = entries_[k];
        const bool in_range = t.rev >= 0.0 && t.rev <= 1.0 && t.none >= 0.0 && t.none <= 1.0 &&
                              t.fwd >= 0.0 && t.fwd <= 1.0;
        if (!in_range || std::abs(t.rev + t.none + t.fwd - 1.0) > kSimplexTolerance) {
            throw invariant_error("pair entry " + std::to_string(k) +
                                  " is not a probability triple");
        }
    }
}

WeightedAdjacency::WeightedAdjacency(int d, std::vector<double> values)
    : d_(d), values_(std::move(values)) {
    if (d_ < 2) throw invariant_error("adjacency needs at least 2 nodes");
    if (values_.size() != static_cast<std::size_t>(d_) * d_) {
        throw invariant_error("adjacency buffer size does not match d*d");
    }
    for (int i = 0; i < d_; ++i) {
        for (int j = 0; j < d_; ++j) {
            const double v = at(i, j);
            if (i == j && v != 0.0) throw invariant_error("adjacency diagonal must be zero");
            if (!(v >= 0.0 && v <= 1.0)) {
                throw invariant_error("adjacency entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") outside [0,1]");
            }
        }
    }
}

OrderedEdgeBeliefs::OrderedEdgeBeliefs(TopologicalOrder order, std::vector<double> probs)
    : order_(std::move(order)), probs_(std::move(probs)) {
    if (probs_.size() != pair_count(node_count())) {
        throw invariant_error("expected " + std::to_string(pair_count(node_count())) +
                              " ordered-pair entries, got " + std::to_string(probs_.size()));
    }
    for (double p : probs_) {
        if (!(p >= 0.0 && p <= 1.0)) throw invariant_error("edge probability outside [0,1]");
    }
}

double OrderedEdgeBeliefs::prob_edge(int from, int to) const {
    if (order_.position()[from] >= order_.position()[to]) {
        throw invariant_error("edge (" + std::to_string(from) + "," + std::to_string(to) +
                              ") points against the topological order");
    }
    return prob_along_order(from, to);
}

}  // namespace pairgraph
