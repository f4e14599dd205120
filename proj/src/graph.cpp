#include "pairgraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace pairgraph {

namespace {

void check_endpoints(int d, const Edge& e) {
    if (e.first < 0 || e.first >= d || e.second < 0 || e.second >= d) {
        throw invariant_error("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                              ") out of range for d=" + std::to_string(d));
    }
    if (e.first == e.second) {
        throw invariant_error("self-loop at node " + std::to_string(e.first));
    }
}

}  // namespace

DirectedGraph::DirectedGraph(int d, std::vector<Edge> edges) : d_(d), edges_(std::move(edges)) {
    if (d_ < 1) throw invariant_error("graph needs at least one node");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
        check_endpoints(d_, e);
        if (std::binary_search(edges_.begin(), edges_.end(), Edge{e.second, e.first})) {
            throw invariant_error("2-cycle between nodes " + std::to_string(e.first) + " and " +
                                  std::to_string(e.second));
        }
    }
}

bool DirectedGraph::has_edge(int from, int to) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

AcyclicGraph::AcyclicGraph(int d, std::vector<Edge> edges) : DirectedGraph(d, std::move(edges)) {
    std::vector<int> cycle;
    if (!detail::try_toposort(node_count(), this->edges(), nullptr, &cycle)) {
        std::string seq;
        for (int v : cycle) seq += (seq.empty() ? "" : " -> ") + std::to_string(v);
        throw invariant_error("graph contains a cycle: " + seq);
    }
}

MixedGraph::MixedGraph(int d, std::vector<Edge> directed, std::vector<Edge> undirected)
    : d_(d), directed_(std::move(directed)), undirected_(std::move(undirected)) {
    if (d_ < 1) throw invariant_error("graph needs at least one node");
    std::sort(directed_.begin(), directed_.end());
    directed_.erase(std::unique(directed_.begin(), directed_.end()), directed_.end());
    for (Edge& e : undirected_) {
        check_endpoints(d_, e);
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(undirected_.begin(), undirected_.end());
    undirected_.erase(std::unique(undirected_.begin(), undirected_.end()), undirected_.end());
    for (const Edge& e : directed_) {
        check_endpoints(d_, e);
        if (std::binary_search(directed_.begin(), directed_.end(), Edge{e.second, e.first})) {
            throw invariant_error("2-cycle between nodes " + std::to_string(e.first) + " and " +
                                  std::to_string(e.second));
        }
        const Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
        if (std::binary_search(undirected_.begin(), undirected_.end(), key)) {
            throw invariant_error("pair (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ") is both directed and undirected");
        }
    }
}

TopologicalOrder::TopologicalOrder(std::vector<int> order) : order_(std::move(order)) {
    const int d = static_cast<int>(order_.size());
    position_.assign(d, -1);
    for (int k = 0; k < d; ++k) {
        const int v = order_[k];
        if (v < 0 || v >= d || position_[v] != -1) {
            throw invariant_error("order is not a permutation of 0.." + std::to_string(d - 1));
        }
        position_[v] = k;
    }
}

namespace detail {

bool try_toposort(int d, const std::vector<Edge>& edges, std::vector<int>* order,
                  std::vector<int>* cycle) {
    std::vector<std::vector<int>> out(d);
    std::vector<int> indegree(d, 0);
    for (const Edge& e : edges) {
        out[e.first].push_back(e.second);
        ++indegree[e.second];
    }

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < d; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }

    std::vector<int> result;
    result.reserve(d);
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        result.push_back(v);
        for (int w : out[v]) {
            if (--indegree[w] == 0) ready.push(w);
        }
    }

    if (static_cast<int>(result.size()) == d) {
        if (order) *order = std::move(result);
        return true;
    }

    if (cycle) {
        // Every unprocessed node still has an unprocessed predecessor, so a
        // backward walk through the residual subgraph must revisit a node;
        // the revisited suffix is a cycle (reversed).
        std::vector<std::vector<int>> in(d);
        for (const Edge& e : edges) {
            if (indegree[e.first] > 0 && indegree[e.second] > 0) in[e.second].push_back(e.first);
        }
        int v = 0;
        while (indegree[v] == 0) ++v;
        std::vector<int> path;
        std::vector<int> seen(d, -1);
        while (seen[v] < 0) {
            seen[v] = static_cast<int>(path.size());
            path.push_back(v);
            v = in[v].front();
        }
        cycle->assign(path.begin() + seen[v], path.end());
        cycle->push_back(v);
        std::reverse(cycle->begin(), cycle->end());
    }
    return false;
}

}  // namespace detail

bool has_cycle(const DirectedGraph& g) {
    return !detail::try_toposort(g.node_count(), g.edges(), nullptr, nullptr);
}

TopologicalOrder toposort(const AcyclicGraph& g) {
    std::vector<int> order;
    std::vector<int> cycle;
    if (!detail::try_toposort(g.node_count(), g.edges(), &order, &cycle)) {
        std::string seq;
        for (int v : cycle) seq += (seq.empty() ? "" : " -> ") + std::to_string(v);
        throw invariant_error("graph contains a cycle: " + seq);
    }
    return TopologicalOrder(std::move(order));
}

}  // namespace pairgraph
