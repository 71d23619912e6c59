#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "commbench/graph.hpp"

namespace commbench {

// Node -> community labeling. Labels are 1..sigma.
struct Partition {
    std::vector<std::uint32_t> labels;
    std::uint32_t sigma = 0;
};

// Relabels arbitrary values to dense community ids 1..k, assigned in
// ascending order of the original labels. The original->dense mapping is
// returned through `mapping` when non-null.
template <typename Label>
Partition densify_labels(const std::vector<Label>& raw,
                         std::vector<std::pair<Label, std::uint32_t>>* mapping = nullptr) {
    std::map<Label, std::uint32_t> dense;
    for (const Label& l : raw) dense.emplace(l, 0);
    std::uint32_t next = 1;
    for (auto& [orig, id] : dense) id = next++;

    Partition p;
    p.labels.reserve(raw.size());
    for (const Label& l : raw) p.labels.push_back(dense.at(l));
    p.sigma = next - 1;
    if (mapping) {
        mapping->clear();
        for (const auto& [orig, id] : dense) mapping->emplace_back(orig, id);
    }
    return p;
}

// Member lists indexed by community id (index 0 unused).
inline std::vector<std::vector<NodeId>> community_members(const Partition& p) {
    std::vector<std::vector<NodeId>> members(static_cast<std::size_t>(p.sigma) + 1);
    for (NodeId v = 0; v < p.labels.size(); ++v) members[p.labels[v]].push_back(v);
    return members;
}

} // namespace commbench
