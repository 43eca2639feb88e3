#pragma once

#include <optional>
#include <vector>

namespace jdm {

// Maximum matching in a general (not necessarily bipartite) undirected
// graph via blossom contraction. Returns mate per vertex, -1 if unmatched.
std::vector<int> maximum_matching(int n, const std::vector<std::vector<int>>& adj);

// Convenience: the matching as mate[] when it covers every vertex, else
// nothing.
std::optional<std::vector<int>> perfect_matching(int n, const std::vector<std::vector<int>>& adj);

}  // namespace jdm
