#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

#include "commbench/graph.hpp"

namespace commbench {

struct DegreeDistribution {
    std::map<std::uint32_t, std::uint64_t> histogram;
    std::uint32_t max_degree = 0;
};

inline DegreeDistribution degree_distribution(const Graph& g) {
    DegreeDistribution d;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto deg = static_cast<std::uint32_t>(g.degree(v));
        ++d.histogram[deg];
        d.max_degree = std::max(d.max_degree, deg);
    }
    return d;
}

struct ComponentInfo {
    std::vector<std::uint32_t> component; // per-node component id, 0-based
    std::uint32_t count = 0;
};

inline ComponentInfo connected_components(const Graph& g) {
    ComponentInfo info;
    info.component.assign(g.node_count(), std::numeric_limits<std::uint32_t>::max());
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (info.component[s] != std::numeric_limits<std::uint32_t>::max()) continue;
        std::uint32_t id = info.count++;
        stack.push_back(s);
        info.component[s] = id;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : g.neighbors(u)) {
                if (info.component[v] == std::numeric_limits<std::uint32_t>::max()) {
                    info.component[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return info;
}

inline double largest_component_fraction(const Graph& g) {
    if (g.node_count() == 0) return 0.0;
    ComponentInfo info = connected_components(g);
    std::vector<std::uint64_t> sizes(info.count, 0);
    for (std::uint32_t c : info.component) ++sizes[c];
    return static_cast<double>(*std::max_element(sizes.begin(), sizes.end())) /
           static_cast<double>(g.node_count());
}

namespace detail {

// Sum of BFS distances and count of reachable ordered pairs for sources
// in [begin, end).
inline void bfs_accumulate(const Graph& g, NodeId begin, NodeId end, std::uint64_t& dist_sum,
                           std::uint64_t& pair_count) {
    const NodeId n = g.node_count();
    std::vector<std::uint32_t> dist(n);
    std::vector<NodeId> frontier;
    dist_sum = 0;
    pair_count = 0;
    for (NodeId s = begin; s < end; ++s) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<std::uint32_t>::max());
        dist[s] = 0;
        frontier.assign(1, s);
        std::size_t head = 0;
        while (head < frontier.size()) {
            NodeId u = frontier[head++];
            for (NodeId v : g.neighbors(u)) {
                if (dist[v] == std::numeric_limits<std::uint32_t>::max()) {
                    dist[v] = dist[u] + 1;
                    frontier.push_back(v);
                    dist_sum += dist[v];
                    ++pair_count;
                }
            }
        }
    }
}

} // namespace detail

// Mean shortest-path length in hops over ordered reachable pairs,
// computed by BFS from every node. Per-source runs are spread over
// hardware threads; the integer accumulation keeps the result identical
// to a serial pass.
inline double average_path_length(const Graph& g) {
    const NodeId n = g.node_count();
    if (n < 2) throw std::invalid_argument("average_path_length: need at least 2 nodes");

    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    if (n < 256) jobs = 1;
    jobs = std::min<unsigned>(jobs, n);

    std::vector<std::uint64_t> sums(jobs, 0), counts(jobs, 0);
    if (jobs == 1) {
        detail::bfs_accumulate(g, 0, n, sums[0], counts[0]);
    } else {
        std::vector<std::thread> workers;
        NodeId chunk = (n + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            NodeId lo = std::min<NodeId>(t * chunk, n);
            NodeId hi = std::min<NodeId>(lo + chunk, n);
            workers.emplace_back([&g, lo, hi, &sums, &counts, t] {
                detail::bfs_accumulate(g, lo, hi, sums[t], counts[t]);
            });
        }
        for (auto& w : workers) w.join();
    }
    std::uint64_t total = 0, pairs = 0;
    for (unsigned t = 0; t < jobs; ++t) {
        total += sums[t];
        pairs += counts[t];
    }
    if (pairs == 0) throw std::invalid_argument("average_path_length: no reachable pairs");
    return static_cast<double>(total) / static_cast<double>(pairs);
}

namespace detail {

struct TriangleCounts {
    std::vector<std::uint64_t> per_node; // triangles through each node
    std::uint64_t triangles = 0;
    std::uint64_t triples = 0; // connected triples, sum over nodes of C(deg,2)
};

inline TriangleCounts count_triangles(const Graph& g) {
    const NodeId n = g.node_count();
    TriangleCounts tc;
    tc.per_node.assign(n, 0);
    std::vector<std::vector<NodeId>> sorted(n);
    for (NodeId v = 0; v < n; ++v) {
        sorted[v] = g.neighbors(v);
        std::sort(sorted[v].begin(), sorted[v].end());
        std::uint64_t d = sorted[v].size();
        tc.triples += d * (d - 1) / 2;
    }
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : sorted[u]) {
            if (v <= u) continue;
            auto iu = sorted[u].begin();
            auto iv = sorted[v].begin();
            while (iu != sorted[u].end() && iv != sorted[v].end()) {
                if (*iu < *iv) {
                    ++iu;
                } else if (*iv < *iu) {
                    ++iv;
                } else {
                    ++tc.per_node[u];
                    ++tc.per_node[v];
                    ++tc.per_node[*iu];
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    // each triangle was found once per edge, so every counter is tripled
    std::uint64_t sum = 0;
    for (auto c : tc.per_node) sum += c;
    tc.triangles = sum / 9;
    for (auto& c : tc.per_node) c /= 3;
    return tc;
}

} // namespace detail

// Transitivity: 3 * triangles / connected triples, 0 when no triples.
inline double global_clustering_coefficient(const Graph& g) {
    detail::TriangleCounts tc = detail::count_triangles(g);
    if (tc.triples == 0) return 0.0;
    return 3.0 * static_cast<double>(tc.triangles) / static_cast<double>(tc.triples);
}

// Mean of per-node local clustering coefficients; degree < 2 counts 0.
inline double mean_local_clustering(const Graph& g) {
    if (g.node_count() == 0) return 0.0;
    detail::TriangleCounts tc = detail::count_triangles(g);
    double sum = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::uint64_t d = g.degree(v);
        if (d < 2) continue;
        sum += static_cast<double>(tc.per_node[v]) / (static_cast<double>(d) * (d - 1) / 2.0);
    }
    return sum / g.node_count();
}

namespace detail {

struct TailStats {
    double alpha = 0.0;
    std::uint64_t n_tail = 0;
};

inline TailStats discrete_mle(const DegreeDistribution& dist, std::uint32_t xmin) {
    TailStats ts;
    double log_sum = 0.0;
    for (const auto& [d, count] : dist.histogram) {
        if (d < xmin) continue;
        ts.n_tail += count;
        log_sum += static_cast<double>(count) * std::log(d / (xmin - 0.5));
    }
    ts.alpha = 1.0 + static_cast<double>(ts.n_tail) / log_sum;
    return ts;
}

inline std::uint32_t distinct_degrees_from(const DegreeDistribution& dist, std::uint32_t xmin) {
    std::uint32_t k = 0;
    for (const auto& [d, count] : dist.histogram)
        if (d >= xmin && count > 0) ++k;
    return k;
}

// Kolmogorov-Smirnov distance between the empirical tail CCDF and the
// fitted power-law CCDF, evaluated at the observed degrees.
inline double ks_distance(const DegreeDistribution& dist, std::uint32_t xmin, double alpha,
                          std::uint64_t n_tail) {
    double ks = 0.0;
    std::uint64_t seen = 0;
    for (const auto& [d, count] : dist.histogram) {
        if (d < xmin || count == 0) continue;
        double empirical = static_cast<double>(n_tail - seen) / static_cast<double>(n_tail);
        double fitted = std::pow((d - 0.5) / (xmin - 0.5), 1.0 - alpha);
        ks = std::max(ks, std::abs(empirical - fitted));
        seen += count;
    }
    return ks;
}

} // namespace detail

// Discrete maximum-likelihood power-law exponent over degrees >= xmin,
// alpha = 1 + n * [sum ln(x_i / (xmin - 0.5))]^-1. Without an explicit
// xmin the cutoff minimizing the KS distance between empirical and fitted
// tails is chosen (smallest xmin on ties). Returns nullopt when fewer
// than two distinct degrees remain at every admissible cutoff.
inline std::optional<double> try_fit_power_law_alpha(const DegreeDistribution& dist,
                                                     std::optional<std::uint32_t> xmin = {}) {
    if (xmin) {
        std::uint32_t x = std::max<std::uint32_t>(*xmin, 1);
        if (detail::distinct_degrees_from(dist, x) < 2) return std::nullopt;
        return detail::discrete_mle(dist, x).alpha;
    }
    std::optional<double> best_alpha;
    double best_ks = std::numeric_limits<double>::infinity();
    for (const auto& [d, count] : dist.histogram) {
        if (d < 1 || count == 0) continue;
        if (detail::distinct_degrees_from(dist, d) < 2) continue;
        detail::TailStats ts = detail::discrete_mle(dist, d);
        double ks = detail::ks_distance(dist, d, ts.alpha, ts.n_tail);
        if (ks < best_ks) {
            best_ks = ks;
            best_alpha = ts.alpha;
        }
    }
    return best_alpha;
}

inline double fit_power_law_alpha(const DegreeDistribution& dist,
                                  std::optional<std::uint32_t> xmin = {}) {
    auto alpha = try_fit_power_law_alpha(dist, xmin);
    if (!alpha)
        throw std::runtime_error("fit_power_law_alpha: alpha undefined, "
                                 "fewer than 2 distinct degrees in the tail");
    return *alpha;
}

struct MetricsReport {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    double edge_node_ratio = 0.0;
    double apl = 0.0;
    double cc_global = 0.0;
    double cc_local_mean = 0.0;
    double alpha = std::numeric_limits<double>::quiet_NaN(); // NaN when undefined
    double gcc_fraction = 0.0;
};

inline MetricsReport metrics_report(const Graph& g) {
    MetricsReport r;
    r.nodes = g.node_count();
    r.edges = g.edge_count();
    r.edge_node_ratio = r.nodes ? static_cast<double>(r.edges) / r.nodes : 0.0;
    r.apl = average_path_length(g);
    r.cc_global = global_clustering_coefficient(g);
    r.cc_local_mean = mean_local_clustering(g);
    if (auto alpha = try_fit_power_law_alpha(degree_distribution(g))) r.alpha = *alpha;
    r.gcc_fraction = largest_component_fraction(g);
    return r;
}

} // namespace commbench
