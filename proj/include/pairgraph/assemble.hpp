#pragma once

// Graph estimators built from pairwise beliefs: the factorized digraph
// distribution and its maximum-likelihood digraph, the greedy maximum
// spanning DAG, the order-constrained DAG distribution and its
// maximum-likelihood DAG, and samplers for both distributions.

#include <cstdint>

#include "pairgraph/types.hpp"

namespace pairgraph {

// A[i,j] = p_fwd(i,j), A[j,i] = p_rev(i,j) for i < j; zero diagonal.
WeightedAdjacency beliefs_to_adjacency(const PairBeliefs& beliefs);

// Log probability of a digraph under the independent-pair factorization.
// Returns -infinity when any selected class has probability 0.
double graph_log_probability(const PairBeliefs& beliefs, const DirectedGraph& g);

// Maximum-likelihood digraph: per-pair argmax with ties resolved
// none > forward > reverse.
DirectedGraph mlg(const PairBeliefs& beliefs);

// Greedy maximum spanning DAG. Phase 1 builds the maximum spanning forest
// of the pairwise max weights and orients each edge in its
// higher-probability direction (i -> j for i < j on exact ties); phase 2
// inserts the remaining positive-weight directed edges in descending
// weight order whenever no cycle results. Zero-weight edges are never added.
AcyclicGraph msdag(const WeightedAdjacency& adjacency);

// Approximate maximum-likelihood topological order:
// toposort(msdag(beliefs_to_adjacency(beliefs))).
TopologicalOrder ml_order(const PairBeliefs& beliefs);

// Constrains each pair to the direction compatible with the order and
// renormalizes: p = fwd_mass / (fwd_mass + none_mass) with the forward mass
// oriented along the order; a zero denominator maps to 0.
OrderedEdgeBeliefs renormalize(const PairBeliefs& beliefs, const TopologicalOrder& order);

// Log probability of an order-consistent DAG: log p for present edges,
// log(1-p) for absent ones. Throws invariant_error if g has an edge
// pointing against the order.
double dag_log_probability(const OrderedEdgeBeliefs& ordered, const AcyclicGraph& g);

// Maximum-likelihood DAG under the order: edge included iff p > 0.5.
AcyclicGraph mldag(const OrderedEdgeBeliefs& ordered);

// One draw from the independent-pair digraph distribution.
DirectedGraph sample_digraph(const PairBeliefs& beliefs, std::uint64_t seed);

// One draw from the order-constrained distribution; always acyclic.
AcyclicGraph sample_dag(const OrderedEdgeBeliefs& ordered, std::uint64_t seed);

}  // namespace pairgraph
