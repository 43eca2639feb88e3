#include "jdm/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace jdm {

namespace {

// Alternating-forest search with blossom contraction, O(V^3) overall.
// base[v] is the representative of the blossom currently containing v.
struct BlossomSearch {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    BlossomSearch(int n_, const std::vector<std::vector<int>>& adj_)
        : n(n_), adj(adj_), match(n_, -1), parent(n_, -1), base(n_, 0), used(n_, 0),
          in_blossom(n_, 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    bool grow_from(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle: contract the blossom
                    const int b = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        // augmenting path found; flip it
                        int u = to;
                        while (u != -1) {
                            const int pv = parent[u];
                            const int ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return false;
    }
};

}  // namespace

std::vector<int> maximum_matching(int n, const std::vector<std::vector<int>>& adj) {
    BlossomSearch s(n, adj);
    // greedy warm start
    for (int v = 0; v < n; ++v)
        if (s.match[v] == -1)
            for (int to : adj[v])
                if (s.match[to] == -1) {
                    s.match[v] = to;
                    s.match[to] = v;
                    break;
                }
    for (int v = 0; v < n; ++v)
        if (s.match[v] == -1) s.grow_from(v);
    return s.match;
}

std::optional<std::vector<int>> perfect_matching(int n, const std::vector<std::vector<int>>& adj) {
    auto match = maximum_matching(n, adj);
    for (int v = 0; v < n; ++v)
        if (match[v] == -1) return std::nullopt;
    return match;
}

}  // namespace jdm
