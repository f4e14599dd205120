#pragma once

// Value types carrying the pairwise belief data and its derived forms.
// Constructors validate invariants; instances are immutable afterwards and
// safe to share across threads.

#include <cmath>
#include <string>
#include <vector>

#include "pairgraph/error.hpp"
#include "pairgraph/graph.hpp"

namespace pairgraph {

// n x d matrix of observational samples, row-major.
struct VariableMatrix {
    VariableMatrix(int n, int d, std::vector<double> values,
                   std::vector<std::string> column_names = {});

    int n = 0;
    int d = 0;
    std::vector<double> values;              // values[row * d + col]
    std::vector<std::string> column_names;   // empty or size d

    double at(int row, int col) const { return values[static_cast<std::size_t>(row) * d + col]; }
    std::vector<double> column(int col) const;
};

// Categorical belief over the three pair statuses, ordered (reverse, none,
// forward) = (-1, 0, 1).
struct BeliefTriple {
    double rev = 0.0;
    double none = 0.0;
    double fwd = 0.0;
};

// One BeliefTriple per unordered pair i < j; rev is the mass of j -> i,
// fwd the mass of i -> j.
class PairBeliefs {
public:
    PairBeliefs(int d, std::vector<BeliefTriple> entries);

    int node_count() const { return d_; }
    const BeliefTriple& at(int i, int j) const {  // requires i < j
        return entries_[pair_index(d_, i, j)];
    }
    const std::vector<BeliefTriple>& entries() const { return entries_; }

private:
    int d_;
    std::vector<BeliefTriple> entries_;
};

// d x d matrix of directed-edge probabilities, zero diagonal.
class WeightedAdjacency {
public:
    WeightedAdjacency(int d, std::vector<double> values);  // row-major d*d

    int node_count() const { return d_; }
    double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * d_ + j]; }
    const std::vector<double>& values() const { return values_; }

private:
    int d_;
    std::vector<double> values_;
};

// Edge probabilities under a fixed topological order: for each unordered
// pair, the probability of the edge pointing from the earlier-positioned
// node to the later one. Indexed by unordered pair like PairBeliefs.
class OrderedEdgeBeliefs {
public:
    OrderedEdgeBeliefs(TopologicalOrder order, std::vector<double> probs);

    int node_count() const { return order_.node_count(); }
    const TopologicalOrder& order() const { return order_; }
    const std::vector<double>& probs() const { return probs_; }

    // Probability of the order-consistent edge on unordered pair {i, j}.
    double prob_along_order(int i, int j) const {
        if (i > j) std::swap(i, j);
        return probs_[pair_index(node_count(), i, j)];
    }

    // Probability of edge from -> to; requires position[from] < position[to].
    double prob_edge(int from, int to) const;

private:
    TopologicalOrder order_;
    std::vector<double> probs_;
};

}  // namespace pairgraph
