#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "commbench/generator.hpp"
#include "commbench/graph.hpp"
#include "commbench/partition.hpp"

namespace commbench {

namespace detail {

inline void check_community(const Partition& p, std::uint32_t c) {
    if (c < 1 || c > p.sigma)
        throw std::out_of_range("unknown community id " + std::to_string(c));
}

struct EdgeSplit {
    std::uint64_t internal = 0; // undirected edges with both endpoints in c
    std::uint64_t boundary = 0; // edges with exactly one endpoint in c
};

inline EdgeSplit community_edges(const Graph& g, const Partition& p, std::uint32_t c) {
    EdgeSplit s;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (p.labels[u] != c) continue;
        for (NodeId v : g.neighbors(u)) {
            if (p.labels[v] == c) {
                if (u < v) ++s.internal;
            } else {
                ++s.boundary;
            }
        }
    }
    return s;
}

} // namespace detail

// Internal edges over boundary edges; +inf when the community has no
// boundary edges at all.
inline double separability(const Graph& g, const Partition& p, std::uint32_t c) {
    detail::check_community(p, c);
    detail::EdgeSplit s = detail::community_edges(g, p, c);
    if (s.boundary == 0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(s.internal) / static_cast<double>(s.boundary);
}

// Internal edges over the maximum possible n_c(n_c-1)/2; 0 for singletons.
inline double density(const Graph& g, const Partition& p, std::uint32_t c) {
    detail::check_community(p, c);
    std::uint64_t n_c = 0;
    for (std::uint32_t l : p.labels)
        if (l == c) ++n_c;
    if (n_c < 2) return 0.0;
    detail::EdgeSplit s = detail::community_edges(g, p, c);
    return static_cast<double>(s.internal) / (static_cast<double>(n_c) * (n_c - 1) / 2.0);
}

// Mean local clustering coefficient of the community's nodes on the
// subgraph induced by the community; induced degree < 2 contributes 0.
inline double community_clustering(const Graph& g, const Partition& p, std::uint32_t c) {
    detail::check_community(p, c);
    std::vector<NodeId> members;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (p.labels[v] == c) members.push_back(v);

    double sum = 0.0;
    for (NodeId v : members) {
        std::vector<NodeId> nbrs;
        for (NodeId w : g.neighbors(v))
            if (p.labels[w] == c) nbrs.push_back(w);
        if (nbrs.size() < 2) continue;
        std::uint64_t links = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) ++links;
        sum += static_cast<double>(links) /
               (static_cast<double>(nbrs.size()) * (nbrs.size() - 1) / 2.0);
    }
    return members.empty() ? 0.0 : sum / static_cast<double>(members.size());
}

// Mean over the community's nodes of (intra-community incident edges /
// incident edges); isolated nodes contribute 0.
inline double loyalty(const Graph& g, const Partition& p, std::uint32_t c) {
    detail::check_community(p, c);
    double sum = 0.0;
    std::uint64_t n_c = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (p.labels[v] != c) continue;
        ++n_c;
        if (g.degree(v) == 0) continue;
        std::uint64_t intra = 0;
        for (NodeId w : g.neighbors(v))
            if (p.labels[w] == c) ++intra;
        sum += static_cast<double>(intra) / static_cast<double>(g.degree(v));
    }
    return n_c == 0 ? 0.0 : sum / static_cast<double>(n_c);
}

// Ratio-of-sums variant: community-wide intra incident edges over all
// incident edges.
inline double loyalty_ratio(const Graph& g, const Partition& p, std::uint32_t c) {
    detail::check_community(p, c);
    detail::EdgeSplit s = detail::community_edges(g, p, c);
    std::uint64_t incident = 2 * s.internal + s.boundary;
    if (incident == 0) return 0.0;
    return static_cast<double>(2 * s.internal) / static_cast<double>(incident);
}

// Q = sum over communities of [e_c/m - (d_c/2m)^2].
inline double modularity(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("modularity undefined on an edgeless graph");
    std::vector<std::uint64_t> internal(static_cast<std::size_t>(p.sigma) + 1, 0);
    std::vector<std::uint64_t> degree_sum(static_cast<std::size_t>(p.sigma) + 1, 0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        degree_sum[p.labels[u]] += g.degree(u);
        for (NodeId v : g.neighbors(u))
            if (u < v && p.labels[u] == p.labels[v]) ++internal[p.labels[u]];
    }
    const double m = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (std::uint32_t c = 1; c <= p.sigma; ++c) {
        double frac = degree_sum[c] / (2.0 * m);
        q += internal[c] / m - frac * frac;
    }
    return q;
}

// Normalized mutual information, 2*I/(H1+H2) from the confusion matrix.
// Both partitions single-cluster means they are identical: 1 by
// convention.
inline double nmi(const Partition& a, const Partition& b) {
    if (a.labels.size() != b.labels.size())
        throw std::invalid_argument("nmi: partitions label different node sets");
    const std::uint64_t n = a.labels.size();
    if (n == 0) throw std::invalid_argument("nmi: empty partitions");

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> confusion;
    std::map<std::uint32_t, std::uint64_t> row, col;
    for (std::uint64_t v = 0; v < n; ++v) {
        ++confusion[{a.labels[v], b.labels[v]}];
        ++row[a.labels[v]];
        ++col[b.labels[v]];
    }
    double h_a = 0.0, h_b = 0.0, info = 0.0;
    for (const auto& [label, count] : row) {
        double p = static_cast<double>(count) / n;
        h_a -= p * std::log(p);
    }
    for (const auto& [label, count] : col) {
        double p = static_cast<double>(count) / n;
        h_b -= p * std::log(p);
    }
    for (const auto& [cell, count] : confusion) {
        double p = static_cast<double>(count) / n;
        double pa = static_cast<double>(row[cell.first]) / n;
        double pb = static_cast<double>(col[cell.second]) / n;
        info += p * std::log(p / (pa * pb));
    }
    if (h_a + h_b == 0.0) return 1.0;
    return 2.0 * info / (h_a + h_b);
}

struct CommunityGoodness {
    std::uint32_t community = 0;
    std::uint64_t size = 0;
    double separability = 0.0;
    double density = 0.0;
    double clustering = 0.0;
    double loyalty = 0.0;
    double loyalty_ratio = 0.0;
};

struct GoodnessReport {
    std::vector<CommunityGoodness> communities;
};

inline GoodnessReport goodness_report(const Graph& g, const Partition& p) {
    GoodnessReport report;
    std::vector<std::uint64_t> sizes(static_cast<std::size_t>(p.sigma) + 1, 0);
    for (std::uint32_t l : p.labels) ++sizes[l];
    for (std::uint32_t c = 1; c <= p.sigma; ++c) {
        CommunityGoodness row;
        row.community = c;
        row.size = sizes[c];
        row.separability = separability(g, p, c);
        row.density = density(g, p, c);
        row.clustering = community_clustering(g, p, c);
        row.loyalty = loyalty(g, p, c);
        row.loyalty_ratio = loyalty_ratio(g, p, c);
        report.communities.push_back(row);
    }
    return report;
}

inline GoodnessReport goodness_report(const LabeledNetwork& net) {
    return goodness_report(net.graph, net.ground_truth);
}

} // namespace commbench
