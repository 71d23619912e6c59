#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace commbench {

using NodeId = std::uint32_t;

// One entry per edge endpoint, so node u appears degree(u) times and a
// uniform draw from `endpoints` is degree-proportional.
struct EndpointPool {
    std::vector<NodeId> endpoints;

    [[nodiscard]] bool empty() const { return endpoints.empty(); }
    [[nodiscard]] std::size_t size() const { return endpoints.size(); }
};

// Undirected simple graph over dense node ids 0..node_count()-1.
// Adjacency lists keep insertion order; the endpoint pool is maintained
// on every successful edge insertion.
class Graph {
  public:
    Graph() = default;

    explicit Graph(NodeId n) : adj_(n) {}

    NodeId add_node() {
        adj_.emplace_back();
        return static_cast<NodeId>(adj_.size() - 1);
    }

    // Inserts {u,v} unless it is a self-loop or already present.
    // Returns whether the edge was inserted.
    bool add_edge(NodeId u, NodeId v) {
        check_node(u);
        check_node(v);
        if (u == v || has_edge(u, v)) return false;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        pool_.endpoints.push_back(u);
        pool_.endpoints.push_back(v);
        ++edges_;
        return true;
    }

    [[nodiscard]] bool has_edge(NodeId u, NodeId v) const {
        check_node(u);
        check_node(v);
        const auto& smaller = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        NodeId other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::find(smaller.begin(), smaller.end(), other) != smaller.end();
    }

    [[nodiscard]] NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
    [[nodiscard]] std::uint64_t edge_count() const { return edges_; }
    [[nodiscard]] std::size_t degree(NodeId u) const {
        check_node(u);
        return adj_[u].size();
    }
    [[nodiscard]] const std::vector<NodeId>& neighbors(NodeId u) const {
        check_node(u);
        return adj_[u];
    }
    [[nodiscard]] const EndpointPool& endpoint_pool() const { return pool_; }

  private:
    void check_node(NodeId u) const {
        if (u >= adj_.size()) throw std::out_of_range("graph: node id out of range");
    }

    std::vector<std::vector<NodeId>> adj_;
    EndpointPool pool_;
    std::uint64_t edges_ = 0;
};

// Returns node u with probability degree(u) / (2 * edge_count).
template <typename Rng>
NodeId preferential_select(const EndpointPool& pool, Rng& rng) {
    if (pool.empty())
        throw std::invalid_argument("preferential_select: graph has no edges");
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool.endpoints[pick(rng)];
}

} // namespace commbench
