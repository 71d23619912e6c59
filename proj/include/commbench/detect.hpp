#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "commbench/community.hpp"
#include "commbench/graph.hpp"
#include "commbench/partition.hpp"

namespace commbench {

struct DetectionResult {
    Partition partition;
    std::string algorithm;
    std::uint32_t rounds = 0; // sweeps (label propagation) or levels (louvain)
    double modularity = 0.0;
};

// Asynchronous label propagation: unique initial labels, seeded-random
// node order per sweep, each node adopts the majority label among its
// neighbors with ties broken uniformly at random. Stops when every node
// already holds a majority label, or after 100 sweeps.
inline DetectionResult label_propagation(const Graph& g, std::uint64_t seed) {
    const NodeId n = g.node_count();
    if (n == 0 || g.edge_count() == 0)
        throw std::invalid_argument("label_propagation: graph has no edges");

    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::vector<std::uint32_t> count(n, 0);
    std::vector<std::uint32_t> touched;
    std::vector<std::uint32_t> best;

    auto majority_labels = [&](NodeId v) -> const std::vector<std::uint32_t>& {
        touched.clear();
        best.clear();
        std::uint32_t best_count = 0;
        for (NodeId w : g.neighbors(v)) {
            std::uint32_t l = labels[w];
            if (count[l] == 0) touched.push_back(l);
            ++count[l];
            if (count[l] > best_count) best_count = count[l];
        }
        for (std::uint32_t l : touched)
            if (count[l] == best_count) best.push_back(l);
        for (std::uint32_t l : touched) count[l] = 0;
        return best;
    };

    constexpr std::uint32_t kMaxSweeps = 100;
    std::uint32_t sweeps = 0;
    while (sweeps < kMaxSweeps) {
        ++sweeps;
        std::shuffle(order.begin(), order.end(), rng);
        for (NodeId v : order) {
            const auto& majors = majority_labels(v);
            if (majors.empty()) continue; // isolated node keeps its label
            std::uniform_int_distribution<std::size_t> pick(0, majors.size() - 1);
            labels[v] = majors[pick(rng)];
        }
        bool stable = true;
        for (NodeId v = 0; v < n && stable; ++v) {
            const auto& majors = majority_labels(v);
            if (!majors.empty() &&
                std::find(majors.begin(), majors.end(), labels[v]) == majors.end())
                stable = false;
        }
        if (stable) break;
    }

    DetectionResult result;
    result.partition = densify_labels(labels);
    result.algorithm = "labelprop";
    result.rounds = sweeps;
    result.modularity = modularity(g, result.partition);
    return result;
}

namespace detail {

// Weighted graph for the aggregation levels. `self` holds the edge weight
// collapsed inside a node (each original edge counted once); `strength`
// is the weighted degree with self-loops counted twice.
struct LevelGraph {
    std::vector<std::vector<std::pair<NodeId, double>>> adj;
    std::vector<double> self;
    std::vector<double> strength;
    double total_weight = 0.0; // sum of all edge weights, each edge once

    [[nodiscard]] NodeId size() const { return static_cast<NodeId>(adj.size()); }
};

inline LevelGraph level_from_graph(const Graph& g) {
    LevelGraph lg;
    const NodeId n = g.node_count();
    lg.adj.resize(n);
    lg.self.assign(n, 0.0);
    lg.strength.assign(n, 0.0);
    for (NodeId u = 0; u < n; ++u) {
        lg.adj[u].reserve(g.degree(u));
        for (NodeId v : g.neighbors(u)) lg.adj[u].emplace_back(v, 1.0);
        lg.strength[u] = static_cast<double>(g.degree(u));
    }
    lg.total_weight = static_cast<double>(g.edge_count());
    return lg;
}

struct LocalMoveResult {
    std::vector<std::uint32_t> community; // dense 0-based
    std::uint32_t community_count = 0;
    bool moved = false;
};

// One Louvain level: greedy local moves until a full pass makes no move.
template <typename Rng>
LocalMoveResult local_move_phase(const LevelGraph& lg, Rng& rng) {
    const NodeId n = lg.size();
    const double w = lg.total_weight;
    std::vector<std::uint32_t> comm(n);
    std::iota(comm.begin(), comm.end(), 0);
    std::vector<double> comm_degree(lg.strength);

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::vector<double> link_to(n, 0.0);
    std::vector<std::uint32_t> touched;

    LocalMoveResult result;
    constexpr double kMinGain = 1e-12;

    bool moved_in_pass = true;
    while (moved_in_pass) {
        moved_in_pass = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (NodeId a : order) {
            const std::uint32_t home = comm[a];
            touched.clear();
            for (const auto& [b, weight] : lg.adj[a]) {
                std::uint32_t c = comm[b];
                if (link_to[c] == 0.0) touched.push_back(c);
                link_to[c] += weight;
            }
            const double k_a = lg.strength[a];
            const double link_home = link_to[home];
            const double degree_home = comm_degree[home];

            std::uint32_t best_comm = home;
            double best_gain = kMinGain; // a move must strictly improve Q
            for (std::uint32_t c : touched) {
                if (c == home) continue;
                double gain = (link_to[c] - link_home) / w -
                              k_a * (comm_degree[c] - (degree_home - k_a)) / (2.0 * w * w);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_comm = c;
                }
            }
            for (std::uint32_t c : touched) link_to[c] = 0.0;
            if (best_comm != home) {
                comm_degree[home] -= k_a;
                comm_degree[best_comm] += k_a;
                comm[a] = best_comm;
                moved_in_pass = true;
                result.moved = true;
            }
        }
    }

    // densify community ids
    std::vector<std::uint32_t> remap(n, std::numeric_limits<std::uint32_t>::max());
    std::uint32_t next = 0;
    for (NodeId a = 0; a < n; ++a) {
        if (remap[comm[a]] == std::numeric_limits<std::uint32_t>::max()) remap[comm[a]] = next++;
        comm[a] = remap[comm[a]];
    }
    result.community = std::move(comm);
    result.community_count = next;
    return result;
}

inline LevelGraph aggregate(const LevelGraph& lg, const LocalMoveResult& lm) {
    LevelGraph out;
    const std::uint32_t k = lm.community_count;
    out.adj.resize(k);
    out.self.assign(k, 0.0);
    out.strength.assign(k, 0.0);
    out.total_weight = lg.total_weight;

    std::vector<double> acc(k, 0.0);
    std::vector<std::uint32_t> touched;
    touched.reserve(k);

    // gather, per source community, the weights to every other community
    std::vector<std::vector<NodeId>> members(k);
    for (NodeId a = 0; a < lg.size(); ++a) members[lm.community[a]].push_back(a);

    for (std::uint32_t c = 0; c < k; ++c) {
        touched.clear();
        double self_weight = 0.0;
        for (NodeId a : members[c]) {
            self_weight += lg.self[a];
            for (const auto& [b, weight] : lg.adj[a]) {
                std::uint32_t d = lm.community[b];
                if (d == c) {
                    self_weight += weight / 2.0; // both directions visited
                } else {
                    if (acc[d] == 0.0) touched.push_back(d);
                    acc[d] += weight;
                }
            }
        }
        out.self[c] = self_weight;
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t d : touched) {
            out.adj[c].emplace_back(d, acc[d]);
            acc[d] = 0.0;
        }
        double s = 2.0 * self_weight;
        for (const auto& [d, weight] : out.adj[c]) s += weight;
        out.strength[c] = s;
    }
    return out;
}

// Modularity of the current level graph with every node its own
// community; after the final local-move phase the level's nodes are
// exactly the detected communities.
inline double level_modularity(const LevelGraph& lg) {
    const double w = lg.total_weight;
    double q = 0.0;
    for (NodeId a = 0; a < lg.size(); ++a) {
        double frac = lg.strength[a] / (2.0 * w);
        q += lg.self[a] / w - frac * frac;
    }
    return q;
}

} // namespace detail

// Multilevel greedy modularity optimization: local moves, aggregate the
// communities into super-nodes, repeat until a level yields no
// improvement.
inline DetectionResult louvain(const Graph& g, std::uint64_t seed) {
    const NodeId n = g.node_count();
    if (n == 0 || g.edge_count() == 0)
        throw std::invalid_argument("louvain: graph has no edges");

    std::mt19937_64 rng(seed);
    detail::LevelGraph level = detail::level_from_graph(g);
    std::vector<std::uint32_t> assign(n);
    std::iota(assign.begin(), assign.end(), 0);

    std::uint32_t levels = 0;
    while (true) {
        detail::LocalMoveResult lm = detail::local_move_phase(level, rng);
        ++levels;
        for (auto& a : assign) a = lm.community[a];
        if (!lm.moved) break;
        level = detail::aggregate(level, lm);
        if (level.size() <= 1) break;
    }

    DetectionResult result;
    result.partition = densify_labels(assign);
    result.algorithm = "louvain";
    result.rounds = levels;
    result.modularity = detail::level_modularity(level);
    return result;
}

} // namespace commbench
