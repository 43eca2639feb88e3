#include "jdm/realize.hpp"

#include <algorithm>
#include <string>

namespace jdm {

namespace {

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

BalancedBuilder::BalancedBuilder(const JdmInstance& inst)
    : BalancedBuilder(inst, LabeledGraph(inst.class_sizes)) {}

BalancedBuilder::BalancedBuilder(const JdmInstance& inst, LabeledGraph seed)
    : inst_(inst), g_(std::move(seed)) {
    // The case analysis needs matrix feasibility only; degree feasibility is
    // what makes the finished graph a realization and is enforced by the
    // realize entry points.
    inst_.validate();
    if (!check_matrix_feasibility(inst_))
        throw feasibility_error("matrix feasibility violated");
    if (g_.class_sizes() != inst_.class_sizes)
        throw validation_error("seed graph vertex set does not match the instance");
    const int k = inst_.class_count();
    realized_.assign(k, std::vector<long long>(k, 0));
    for (auto [u, v] : g_.edges()) {
        const int cu = g_.class_of(u), cv = g_.class_of(v);
        realized_[cu][cv] += 1;
        if (cu != cv) realized_[cv][cu] += 1;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            if (realized_[i][j] > inst_.matrix[i][j])
                throw validation_error("seed overshoots quota for pair " + pair_str(i, j));
    const int n = g_.vertex_count();
    hist_.assign(k, std::vector<int>(n + 1, 0));
    min_deg_.assign(k, 0);
    max_deg_.assign(k, 0);
    for (int c = 0; c < k; ++c) {
        int lo = n, hi = 0;
        for (int v = g_.class_begin(c); v < g_.class_end(c); ++v) {
            const int d = g_.degree(v);
            hist_[c][d] += 1;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        min_deg_[c] = lo;
        max_deg_[c] = hi;
        if (hi - lo > 1)
            throw validation_error("seed violates the balance invariant in class " + std::to_string(c));
    }
}

bool BalancedBuilder::finished() const {
    const int k = inst_.class_count();
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            if (realized_[i][j] < inst_.matrix[i][j]) return false;
    return true;
}

std::pair<int, int> BalancedBuilder::next_unsatisfied() const {
    const int k = inst_.class_count();
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            if (realized_[i][j] < inst_.matrix[i][j]) return {i, j};
    throw internal_error("next_unsatisfied: all quotas met");
}

long long BalancedBuilder::residual(int ci, int cj) const {
    return inst_.matrix[ci][cj] - realized_[ci][cj];
}

int BalancedBuilder::first_min(int c, int exclude) const {
    for (int v = g_.class_begin(c); v < g_.class_end(c); ++v)
        if (v != exclude && in_min(v)) return v;
    throw internal_error("no min-degree vertex available in class " + std::to_string(c));
}

void BalancedBuilder::bump(int v, int delta) {
    const int c = g_.class_of(v);
    const int now = g_.degree(v);
    hist_[c][now - delta] -= 1;
    hist_[c][now] += 1;
    if (now < min_deg_[c]) min_deg_[c] = now;
    if (now > max_deg_[c]) max_deg_[c] = now;
    while (hist_[c][min_deg_[c]] == 0) ++min_deg_[c];
    while (hist_[c][max_deg_[c]] == 0) --max_deg_[c];
}

void BalancedBuilder::do_add(int u, int v) {
    g_.add_edge(u, v);
    const int cu = g_.class_of(u), cv = g_.class_of(v);
    realized_[cu][cv] += 1;
    if (cu != cv) realized_[cv][cu] += 1;
    bump(u, +1);
    bump(v, +1);
}

void BalancedBuilder::do_remove(int u, int v) {
    g_.remove_edge(u, v);
    const int cu = g_.class_of(u), cv = g_.class_of(v);
    realized_[cu][cv] -= 1;
    if (cu != cv) realized_[cv][cu] -= 1;
    bump(u, -1);
    bump(v, -1);
}

bool BalancedBuilder::case_a1(int ci, int cj) {
    for (int u = g_.class_begin(ci); u < g_.class_end(ci); ++u) {
        if (!in_min(u)) continue;
        for (int v = g_.class_begin(cj); v < g_.class_end(cj); ++v) {
            if (!in_min(v) || g_.has_edge(u, v)) continue;
            do_add(u, v);
            return true;
        }
    }
    return false;
}

bool BalancedBuilder::case_a2(int ci, int cj) {
    for (int u = g_.class_begin(ci); u < g_.class_end(ci); ++u) {
        if (!in_min(u)) continue;
        for (int v = g_.class_begin(cj); v < g_.class_end(cj); ++v) {
            if (!in_max(v) || g_.has_edge(u, v)) continue;
            // A1 was exhausted, so v is strictly above the minimum of its class.
            const int vp = first_min(cj, v);
            for (int x : g_.neighbors(v)) {
                if (x == vp || g_.has_edge(vp, x)) continue;
                do_remove(v, x);
                do_add(u, v);
                do_add(vp, x);
                return true;
            }
            throw internal_error("case A2: no movable neighbor for pair " + pair_str(ci, cj));
        }
    }
    return false;
}

bool BalancedBuilder::case_a2_prime(int ci, int cj) {
    for (int u = g_.class_begin(ci); u < g_.class_end(ci); ++u) {
        if (!in_max(u)) continue;
        for (int v = g_.class_begin(cj); v < g_.class_end(cj); ++v) {
            if (!in_min(v) || g_.has_edge(u, v)) continue;
            const int up = first_min(ci, u);
            for (int x : g_.neighbors(u)) {
                if (x == up || g_.has_edge(up, x)) continue;
                do_remove(u, x);
                do_add(u, v);
                do_add(up, x);
                return true;
            }
            throw internal_error("case A2': no movable neighbor for pair " + pair_str(ci, cj));
        }
    }
    return false;
}

bool BalancedBuilder::case_a3(int ci, int cj) {
    for (int u = g_.class_begin(ci); u < g_.class_end(ci); ++u) {
        if (!in_max(u)) continue;
        for (int v = g_.class_begin(cj); v < g_.class_end(cj); ++v) {
            if (!in_max(v) || g_.has_edge(u, v)) continue;
            const int up = first_min(ci, u);
            const int vp = first_min(cj, v);
            int x = -1, y = -1;
            for (int c : g_.neighbors(u))
                if (c != up && !g_.has_edge(up, c)) {
                    x = c;
                    break;
                }
            for (int c : g_.neighbors(v))
                if (c != vp && !g_.has_edge(vp, c)) {
                    y = c;
                    break;
                }
            if (x < 0 || y < 0)
                throw internal_error("case A3: no movable neighbor for pair " + pair_str(ci, cj));
            do_remove(u, x);
            do_remove(v, y);
            do_add(up, x);
            do_add(u, v);
            do_add(vp, y);
            return true;
        }
    }
    return false;
}

bool BalancedBuilder::case_b1(int ci) {
    for (int u = g_.class_begin(ci); u < g_.class_end(ci); ++u) {
        if (!in_min(u)) continue;
        for (int v = u + 1; v < g_.class_end(ci); ++v) {
            if (!in_min(v) || g_.has_edge(u, v)) continue;
            do_add(u, v);
            return true;
        }
    }
    return false;
}

bool BalancedBuilder::case_b2(int ci) {
    for (int u = g_.class_begin(ci); u < g_.class_end(ci); ++u) {
        if (!in_min(u)) continue;
        for (int v = g_.class_begin(ci); v < g_.class_end(ci); ++v) {
            if (v == u || !in_max(v) || g_.has_edge(u, v)) continue;
            if (min_deg_[ci] == max_deg_[ci])
                throw internal_error("case B2 reached a pair that B1 should have handled");
            if (min_count(ci) == 1) {
                do_add(u, v);
                return true;
            }
            const int vp = first_min(ci, u);
            for (int x : g_.neighbors(v)) {
                if (x == vp || g_.has_edge(vp, x)) continue;
                do_remove(v, x);
                do_add(vp, x);
                do_add(u, v);
                return true;
            }
            throw internal_error("case B2: no movable neighbor in class " + std::to_string(ci));
        }
    }
    return false;
}

bool BalancedBuilder::case_b3(int ci) {
    for (int u = g_.class_begin(ci); u < g_.class_end(ci); ++u) {
        if (!in_max(u)) continue;
        for (int v = u + 1; v < g_.class_end(ci); ++v) {
            if (!in_max(v) || g_.has_edge(u, v)) continue;
            if (min_deg_[ci] == max_deg_[ci])
                throw internal_error("case B3 reached with all degrees equal in class " +
                                     std::to_string(ci));
            if (min_count(ci) == 1) {
                const int w = first_min(ci);
                for (int x : g_.neighbors(u)) {
                    if (x == w || g_.has_edge(w, x)) continue;
                    do_remove(u, x);
                    do_add(w, x);
                    do_add(u, v);
                    return true;
                }
                throw internal_error("case B3: no movable neighbor in class " + std::to_string(ci));
            }
            const int w = first_min(ci);
            const int wp = first_min(ci, w);
            int x = -1, y = -1;
            for (int c : g_.neighbors(u))
                if (c != w && !g_.has_edge(w, c)) {
                    x = c;
                    break;
                }
            for (int c : g_.neighbors(v))
                if (c != wp && !g_.has_edge(wp, c)) {
                    y = c;
                    break;
                }
            if (x < 0 || y < 0)
                throw internal_error("case B3: no movable neighbor in class " + std::to_string(ci));
            do_remove(u, x);
            do_remove(v, y);
            do_add(w, x);
            do_add(u, v);
            do_add(wp, y);
            return true;
        }
    }
    return false;
}

void BalancedBuilder::add_edge(int ci, int cj) {
    if (ci > cj) std::swap(ci, cj);
    if (residual(ci, cj) <= 0)
        throw internal_error("add_edge called on satisfied pair " + pair_str(ci, cj));
    bool done = false;
    if (ci == cj)
        done = case_b1(ci) || case_b2(ci) || case_b3(ci);
    else
        done = case_a1(ci, cj) || case_a2(ci, cj) || case_a2_prime(ci, cj) || case_a3(ci, cj);
    if (!done) throw internal_error("no construction case applies for pair " + pair_str(ci, cj));
}

LabeledGraph BalancedBuilder::run() {
    const int k = inst_.class_count();
    long long todo = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) todo += residual(i, j);
    for (long long step = 0; step < todo; ++step) {
        auto [i, j] = next_unsatisfied();
        add_edge(i, j);
    }
    if (!finished()) throw internal_error("balanced construction ended with unmet quotas");
    return g_;
}

LabeledGraph balanced_realize(const JdmInstance& inst) {
    require_feasible(inst);
    return BalancedBuilder(inst).run();
}

LabeledGraph balanced_realize(const JdmInstance& inst, LabeledGraph seed) {
    require_feasible(inst);
    return BalancedBuilder(inst, std::move(seed)).run();
}

LabeledGraph simple_realize(const JdmInstance& inst) {
    require_feasible(inst);
    const int k = inst.class_count();
    LabeledGraph g = LabeledGraph::empty_like(inst);

    for (int i = 0; i < k; ++i) {
        long long left = inst.matrix[i][i];
        for (int a = g.class_begin(i); a < g.class_end(i) && left > 0; ++a)
            for (int b = a + 1; b < g.class_end(i) && left > 0; ++b) {
                g.add_edge(a, b);
                --left;
            }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            long long left = inst.matrix[i][j];
            for (int a = g.class_begin(i); a < g.class_end(i) && left > 0; ++a)
                for (int b = g.class_begin(j); b < g.class_end(j) && left > 0; ++b) {
                    g.add_edge(a, b);
                    --left;
                }
        }

    for (int i = 0; i < k; ++i) {
        const int want = inst.class_degrees[i];
        for (;;) {
            int u = -1, v = -1;
            for (int c = g.class_begin(i); c < g.class_end(i); ++c) {
                if (u < 0 && g.degree(c) < want) u = c;
                if (v < 0 && g.degree(c) > want) v = c;
            }
            if (u < 0 && v < 0) break;
            if (u < 0 || v < 0) throw internal_error("degree repair out of balance in class " + std::to_string(i));
            const int moves = std::min(want - g.degree(u), g.degree(v) - want);
            for (int m = 0; m < moves; ++m) {
                int x = -1;
                for (int c : g.neighbors(v))
                    if (c != u && !g.has_edge(u, c)) {
                        x = c;
                        break;
                    }
                if (x < 0) throw internal_error("degree repair found no movable neighbor");
                g.remove_edge(v, x);
                g.add_edge(u, x);
            }
        }
    }
    return g;
}

}  // namespace jdm
