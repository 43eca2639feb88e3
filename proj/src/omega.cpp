#include "jdm/omega.hpp"

#include <string>

namespace jdm {

namespace {

// Backtracking over the lexicographic list of vertex pairs. The pruning uses
// only definitional facts about realizations (exact quotas, exact degrees),
// so the enumerator stays an independent route from the feasibility theory.
struct OmegaSearch {
    const JdmInstance& inst;
    LabeledGraph g;
    std::vector<std::pair<int, int>> pairs;   // all (a, b), a < b, lex order
    std::vector<int> pair_class;              // dense class-pair id per slot
    std::vector<std::vector<long long>> slots_after;   // per class pair, remaining slots from idx
    std::vector<std::vector<int>> vslots_after;        // per vertex, remaining incident slots
    std::vector<long long> quota_left;        // per class pair
    std::vector<int> deg_left;                // per vertex
    int npairs = 0;
    std::vector<LabeledGraph> out;

    explicit OmegaSearch(const JdmInstance& i) : inst(i), g(LabeledGraph::empty_like(i)) {
        const int n = g.vertex_count(), k = inst.class_count();
        auto cp = [&](int a, int b) { return a * k + b; };  // a <= b
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                pairs.emplace_back(a, b);
                pair_class.push_back(cp(g.class_of(a), g.class_of(b)));
            }
        npairs = static_cast<int>(pairs.size());
        quota_left.assign(k * k, 0);
        for (int i2 = 0; i2 < k; ++i2)
            for (int j2 = i2; j2 < k; ++j2) quota_left[cp(i2, j2)] = inst.matrix[i2][j2];
        deg_left.assign(n, 0);
        for (int v = 0; v < n; ++v) deg_left[v] = inst.class_degrees[g.class_of(v)];
        slots_after.assign(npairs + 1, std::vector<long long>(k * k, 0));
        vslots_after.assign(npairs + 1, std::vector<int>(n, 0));
        for (int idx = npairs - 1; idx >= 0; --idx) {
            slots_after[idx] = slots_after[idx + 1];
            vslots_after[idx] = vslots_after[idx + 1];
            slots_after[idx][pair_class[idx]] += 1;
            vslots_after[idx][pairs[idx].first] += 1;
            vslots_after[idx][pairs[idx].second] += 1;
        }
    }

    bool viable(int idx) const {
        for (std::size_t c = 0; c < quota_left.size(); ++c)
            if (quota_left[c] > slots_after[idx][c]) return false;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (deg_left[v] > vslots_after[idx][v]) return false;
        return true;
    }

    void rec(int idx) {
        if (idx == npairs) {
            for (long long q : quota_left)
                if (q != 0) return;
            for (int d : deg_left)
                if (d != 0) return;
            out.push_back(g);
            return;
        }
        if (!viable(idx)) return;
        auto [a, b] = pairs[idx];
        const int c = pair_class[idx];
        if (quota_left[c] > 0 && deg_left[a] > 0 && deg_left[b] > 0) {
            g.add_edge(a, b);
            quota_left[c] -= 1;
            deg_left[a] -= 1;
            deg_left[b] -= 1;
            rec(idx + 1);
            deg_left[b] += 1;
            deg_left[a] += 1;
            quota_left[c] += 1;
            g.remove_edge(a, b);
        }
        rec(idx + 1);
    }
};

}  // namespace

std::vector<LabeledGraph> enumerate_omega(const JdmInstance& inst, int cap) {
    inst.validate();
    if (inst.total_vertices() > cap)
        throw error("enumerate_omega: instance has " + std::to_string(inst.total_vertices()) +
                    " vertices, above the cap of " + std::to_string(cap));
    OmegaSearch s(inst);
    s.rec(0);
    return std::move(s.out);
}

}  // namespace jdm
