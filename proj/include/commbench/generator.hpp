#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "commbench/graph.hpp"
#include "commbench/partition.hpp"

namespace commbench {

// Parameters of the community-benchmark growth model.
struct GeneratorConfig {
    std::uint32_t n = 0;      // target node count
    std::uint32_t sigma = 0;  // number of communities
    double pt = 0.0;          // triad-formation probability
    double mu = 0.0;          // mixing: probability a new edge is designated inter-community
    std::uint32_t m = 2;      // edge attempts per new node
    std::uint64_t seed = 0;
};

inline void validate(const GeneratorConfig& c) {
    if (c.sigma < 1)
        throw std::invalid_argument("generator config: sigma must be >= 1");
    if (c.n < 3 * static_cast<std::uint64_t>(c.sigma))
        throw std::invalid_argument("generator config: n must be >= 3*sigma (got n=" +
                                    std::to_string(c.n) + ", sigma=" + std::to_string(c.sigma) +
                                    ")");
    if (c.pt < 0.0 || c.pt > 1.0)
        throw std::invalid_argument("generator config: pt must be in [0,1]");
    if (c.mu < 0.0 || c.mu > 1.0)
        throw std::invalid_argument("generator config: mu must be in [0,1]");
    if (c.m < 1)
        throw std::invalid_argument("generator config: m must be >= 1");
}

// Counters for constraint fallbacks and skipped edge attempts.
struct GrowthDiagnostics {
    std::uint64_t triad_fallbacks = 0;  // triad candidates exhausted, fell back to in-class PA
    std::uint64_t class_fallbacks = 0;  // label class exhausted, fell back to unrestricted PA
    std::uint64_t skipped_edges = 0;    // edge attempt abandoned entirely
};

struct LabeledNetwork {
    Graph graph;
    Partition ground_truth;
    GeneratorConfig config;
    GrowthDiagnostics diagnostics;
};

namespace detail {

inline constexpr NodeId kNoPartner = std::numeric_limits<NodeId>::max();
inline constexpr int kMaxResamples = 100;

inline bool class_matches(const Partition& p, NodeId v, std::uint32_t home, bool inter) {
    return inter ? p.labels[v] != home : p.labels[v] == home;
}

// Degree-proportional draw restricted to the requested label class,
// excluding the new node and anything already adjacent to it. Up to
// kMaxResamples rejection draws from the global pool, then an explicit
// degree-weighted enumeration of the class. Returns kNoPartner if the
// class holds no eligible node at all.
template <typename Rng>
NodeId pa_within_class(const Graph& g, const Partition& p, NodeId n, std::uint32_t home,
                       bool inter, Rng& rng) {
    for (int i = 0; i < kMaxResamples; ++i) {
        NodeId cand = preferential_select(g.endpoint_pool(), rng);
        if (cand == n || g.has_edge(n, cand)) continue;
        if (class_matches(p, cand, home, inter)) return cand;
    }
    std::uint64_t total = 0;
    std::vector<std::pair<NodeId, std::uint64_t>> eligible;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (v == n || g.degree(v) == 0) continue;
        if (!class_matches(p, v, home, inter)) continue;
        if (g.has_edge(n, v)) continue;
        eligible.emplace_back(v, g.degree(v));
        total += g.degree(v);
    }
    if (eligible.empty()) return kNoPartner;
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::uint64_t r = pick(rng);
    for (const auto& [v, d] : eligible) {
        if (r < d) return v;
        r -= d;
    }
    return eligible.back().first;
}

// Unrestricted degree-proportional draw avoiding the new node and its
// neighbors. Gives up after kMaxResamples collisions.
template <typename Rng>
NodeId pa_avoiding(const Graph& g, NodeId n, Rng& rng) {
    for (int i = 0; i < kMaxResamples; ++i) {
        NodeId cand = preferential_select(g.endpoint_pool(), rng);
        if (cand != n && !g.has_edge(n, cand)) return cand;
    }
    return kNoPartner;
}

} // namespace detail

// Seeds the network with sigma disjoint triangles; the nodes of triangle k
// are labeled k.
inline LabeledNetwork setup_triads(const GeneratorConfig& config) {
    validate(config);
    LabeledNetwork net;
    net.config = config;
    net.ground_truth.sigma = config.sigma;
    for (std::uint32_t k = 1; k <= config.sigma; ++k) {
        NodeId a = net.graph.add_node();
        NodeId b = net.graph.add_node();
        NodeId c = net.graph.add_node();
        net.graph.add_edge(a, b);
        net.graph.add_edge(b, c);
        net.graph.add_edge(a, c);
        net.ground_truth.labels.insert(net.ground_truth.labels.end(), 3, k);
    }
    return net;
}

// One growth step: a new node joins via preferential attachment, inherits
// its anchor's community label, then places its remaining m-1 edges. Each
// of those edges is independently designated inter-community with
// probability mu, and is a triad closure (partner among the anchor's
// neighbors) with probability pt, otherwise a preferential-attachment
// draw. Partner draws are restricted to the designated label class;
// exhausted constraint sets fall back in order triad -> in-class PA ->
// unrestricted PA, and a placement that still finds no partner is skipped.
template <typename Rng>
void grow_step(LabeledNetwork& net, Rng& rng) {
    Graph& g = net.graph;
    const GeneratorConfig& cfg = net.config;

    NodeId n = g.add_node();
    NodeId anchor = preferential_select(g.endpoint_pool(), rng);
    g.add_edge(n, anchor);
    const std::uint32_t home = net.ground_truth.labels[anchor];
    net.ground_truth.labels.push_back(home);

    std::bernoulli_distribution is_inter(cfg.mu);
    std::bernoulli_distribution is_triad(cfg.pt);
    for (std::uint32_t e = 1; e < cfg.m; ++e) {
        bool inter = is_inter(rng);
        bool triad = is_triad(rng);
        NodeId partner = detail::kNoPartner;

        if (triad) {
            std::vector<NodeId> cands;
            for (NodeId w : g.neighbors(anchor)) {
                if (w == n || g.has_edge(n, w)) continue;
                if (detail::class_matches(net.ground_truth, w, home, inter)) cands.push_back(w);
            }
            if (!cands.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
                partner = cands[pick(rng)];
            } else {
                ++net.diagnostics.triad_fallbacks;
            }
        }
        if (partner == detail::kNoPartner) {
            partner = detail::pa_within_class(g, net.ground_truth, n, home, inter, rng);
            if (partner == detail::kNoPartner) {
                ++net.diagnostics.class_fallbacks;
                partner = detail::pa_avoiding(g, n, rng);
            }
        }
        if (partner == detail::kNoPartner) {
            ++net.diagnostics.skipped_edges;
            continue;
        }
        g.add_edge(n, partner);
    }
}

// Runs setup followed by n - 3*sigma growth steps. Deterministic for a
// given (config, seed).
inline LabeledNetwork generate(const GeneratorConfig& config) {
    LabeledNetwork net = setup_triads(config);
    std::mt19937_64 rng(config.seed);
    while (net.graph.node_count() < config.n) grow_step(net, rng);
    return net;
}

// Holme-Kim baseline: seed clique of m+1 nodes; each new node places m
// edges, the first by preferential attachment and each subsequent one a
// triad closure with probability pt (neighbor of the last PA partner),
// otherwise another PA draw. No community labels.
inline Graph generate_holme_kim(std::uint32_t n, std::uint32_t m, double pt, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("holme-kim: m must be >= 1");
    if (n <= m) throw std::invalid_argument("holme-kim: n must exceed m");
    if (pt < 0.0 || pt > 1.0) throw std::invalid_argument("holme-kim: pt must be in [0,1]");

    Graph g;
    for (std::uint32_t i = 0; i <= m; ++i) g.add_node();
    for (NodeId u = 0; u <= m; ++u)
        for (NodeId v = u + 1; v <= m; ++v) g.add_edge(u, v);

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution is_triad(pt);
    while (g.node_count() < n) {
        NodeId v = g.add_node();
        NodeId last = detail::pa_avoiding(g, v, rng);
        if (last == detail::kNoPartner) continue; // cannot happen: v has no edges yet
        g.add_edge(v, last);
        for (std::uint32_t e = 1; e < m; ++e) {
            if (is_triad(rng)) {
                std::vector<NodeId> cands;
                for (NodeId w : g.neighbors(last))
                    if (w != v && !g.has_edge(v, w)) cands.push_back(w);
                if (!cands.empty()) {
                    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
                    g.add_edge(v, cands[pick(rng)]);
                    continue;
                }
                // triad impossible, fall through to a PA draw
            }
            NodeId u = detail::pa_avoiding(g, v, rng);
            if (u == detail::kNoPartner) continue;
            g.add_edge(v, u);
            last = u;
        }
    }
    return g;
}

// Share of edges whose endpoints carry different ground-truth labels.
inline double inter_community_fraction(const LabeledNetwork& net) {
    if (net.graph.edge_count() == 0) return 0.0;
    std::uint64_t inter = 0;
    for (NodeId u = 0; u < net.graph.node_count(); ++u)
        for (NodeId v : net.graph.neighbors(u))
            if (u < v && net.ground_truth.labels[u] != net.ground_truth.labels[v]) ++inter;
    return static_cast<double>(inter) / static_cast<double>(net.graph.edge_count());
}

} // namespace commbench
