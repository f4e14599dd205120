#pragma once

// Graph primitives shared by every other module. Node identity is the
// 0-based column index of the data matrix; names are metadata elsewhere.
// All types are immutable values after construction.

#include <cstddef>
#include <utility>
#include <vector>

#include "pairgraph/error.hpp"

namespace pairgraph {

using Edge = std::pair<int, int>;  // (from, to)

// Number of unordered pairs on d nodes: d*(d-1)/2.
inline std::size_t pair_count(int d) {
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(d - 1) / 2;
}

// Index of unordered pair (i, j), i < j, in lexicographic order.
inline std::size_t pair_index(int d, int i, int j) {
    return static_cast<std::size_t>(i) * d - static_cast<std::size_t>(i) * (i + 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
}

// Directed graph on d nodes. No self-loops and no 2-cycles: the pair
// factorization assigns a single status to each unordered pair, so both
// directions at once carry zero probability and are rejected outright.
class DirectedGraph {
public:
    DirectedGraph(int d, std::vector<Edge> edges);

    int node_count() const { return d_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted (from, to)
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(int from, int to) const;

private:
    int d_;
    std::vector<Edge> edges_;
};

// Directed acyclic graph; construction verifies the no-cycle invariant.
class AcyclicGraph : public DirectedGraph {
public:
    AcyclicGraph(int d, std::vector<Edge> edges);
};

// Graph with both directed and undirected edges, as produced by
// equivalence-class learners. Used only for metric ingestion.
class MixedGraph {
public:
    MixedGraph(int d, std::vector<Edge> directed, std::vector<Edge> undirected);

    int node_count() const { return d_; }
    const std::vector<Edge>& directed() const { return directed_; }
    const std::vector<Edge>& undirected() const { return undirected_; }  // stored with i < j

private:
    int d_;
    std::vector<Edge> directed_;
    std::vector<Edge> undirected_;
};

// Node permutation pi with inverse-position lookup pi^-1.
class TopologicalOrder {
public:
    explicit TopologicalOrder(std::vector<int> order);

    int node_count() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }        // order[k] = node at position k
    const std::vector<int>& position() const { return position_; }  // position[node] = k

private:
    std::vector<int> order_;
    std::vector<int> position_;
};

// True iff g contains a directed cycle.
bool has_cycle(const DirectedGraph& g);

// Kahn topological sort. Deterministic: among simultaneously available
// nodes the smallest index is emitted first. Throws invariant_error naming
// one cycle's node sequence if the edge set is cyclic.
TopologicalOrder toposort(const AcyclicGraph& g);

namespace detail {
// Shared worker for cycle detection and sorting over a raw edge set.
// Returns the order on success; fills `cycle` (if non-null) on failure.
bool try_toposort(int d, const std::vector<Edge>& edges, std::vector<int>* order,
                  std::vector<int>* cycle);
}  // namespace detail

}  // namespace pairgraph
