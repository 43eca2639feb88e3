#include <optional>

#include "jdm/sampler.hpp"

namespace jdm {

namespace {

enum class Color { straight, squiggly, dashed, dotted };

// Edge color relative to the working graph G and the working target T:
// straight = G only, squiggly = T only, dashed = both, dotted = neither.
struct PathSearch {
    LabeledGraph G, T;
    std::vector<SwitchMove> prefix;       // applied to the G side, in order
    std::vector<SwitchMove> suffix_rev;   // inverses of target-side moves, reversed at the end

    // pairing triple scheduled by a case-2c move
    struct Pairing {
        int x, sn, qn;  // x-sn straight, x-qn squiggly, sn and qn in one class
    };
    std::optional<Pairing> pending;

    Color color(int a, int b) const {
        const bool in_g = G.has_edge(a, b), in_t = T.has_edge(a, b);
        if (in_g && in_t) return Color::dashed;
        if (in_g) return Color::straight;
        if (in_t) return Color::squiggly;
        return Color::dotted;
    }

    void move_g(const SwitchMove& m) {
        apply_switch(G, m);
        prefix.push_back(m);
    }
    void move_t(const SwitchMove& m) {
        apply_switch(T, m);
        suffix_rev.push_back(m.inverse());
    }

    std::optional<Pairing> find_pairing() const {
        for (int x = 0; x < G.vertex_count(); ++x)
            for (int sn : G.neighbors(x)) {
                if (T.has_edge(x, sn)) continue;  // dashed, not straight
                for (int qn : T.neighbors(x)) {
                    if (G.has_edge(x, qn)) continue;
                    if (qn != sn && G.class_of(qn) == G.class_of(sn)) return Pairing{x, sn, qn};
                }
            }
        return std::nullopt;
    }

    // Shrink the symmetric difference at a pairing node. Subcase a removes
    // four of its edges, subcase b two; subcase c switches the target
    // instead, shrinking the difference by two as well.
    void run_case1(const Pairing& p) {
        int w_a = -1, w_b = -1, w_c = -1;
        for (int w = 0; w < G.vertex_count(); ++w) {
            if (w == p.x || w == p.sn || w == p.qn) continue;
            const Color cq = color(p.qn, w), cs = color(p.sn, w);
            if (cq == Color::straight && cs == Color::squiggly) {
                if (w_a < 0) w_a = w;
            } else if ((cq == Color::straight && cs == Color::dotted) ||
                       (cq == Color::dashed && cs == Color::squiggly)) {
                if (w_b < 0) w_b = w;
            } else if ((cq == Color::straight && cs == Color::dashed) ||
                       (cq == Color::dotted && cs == Color::squiggly)) {
                if (w_c < 0) w_c = w;
            }
        }
        if (w_a >= 0)
            move_g(SwitchMove{p.sn, p.x, p.qn, w_a});
        else if (w_b >= 0)
            move_g(SwitchMove{p.sn, p.x, p.qn, w_b});
        else if (w_c >= 0)
            move_t(SwitchMove{p.qn, p.x, p.sn, w_c});
        else
            throw internal_error("switch path: pairing node with no usable neighbor");
    }

    // No pairing node: rewire one same-class pair of a squiggly and a
    // straight edge to create one. When the crossing edge is dashed the
    // rewiring has to happen on the target side.
    void run_case2() {
        std::vector<std::pair<int, int>> squiggly, straight;
        for (auto [a, b] : T.edges())
            if (!G.has_edge(a, b)) squiggly.emplace_back(a, b);
        for (auto [a, b] : G.edges())
            if (!T.has_edge(a, b)) straight.emplace_back(a, b);

        struct Quad {
            int x, u, y, v;
        };
        std::optional<Quad> dotted_q, dashed_q;
        for (auto [a, b] : squiggly) {
            for (auto [x, u] : {std::pair{a, b}, std::pair{b, a}}) {
                for (auto [c, d] : straight) {
                    for (auto [y, v] : {std::pair{c, d}, std::pair{d, c}}) {
                        if (G.class_of(x) != G.class_of(y) || G.class_of(u) != G.class_of(v))
                            continue;
                        if (x == y || x == v || u == y || u == v) continue;
                        const Color cxv = color(x, v);
                        if (cxv == Color::dotted) {
                            if (!dotted_q) dotted_q = Quad{x, u, y, v};
                        } else if (cxv == Color::dashed) {
                            if (!dashed_q) dashed_q = Quad{x, u, y, v};
                        } else {
                            throw internal_error("switch path: missed a pairing node");
                        }
                    }
                    if (dotted_q) break;
                }
                if (dotted_q) break;
            }
            if (dotted_q) break;
        }

        if (dotted_q) {
            const auto [x, u, y, v] = *dotted_q;
            int w_a = -1, w_b = -1, w_c = -1;
            for (int w = 0; w < G.vertex_count(); ++w) {
                if (w == x || w == y) continue;
                const Color cx = color(x, w), cy = color(y, w);
                if (cx == Color::straight && cy == Color::dotted) {
                    if (w_a < 0) w_a = w;
                } else if (cx == Color::dashed && cy == Color::squiggly) {
                    if (w_b < 0) w_b = w;
                } else if (cx == Color::dashed && cy == Color::dotted) {
                    if (w_c < 0) w_c = w;
                } else if (cx == Color::straight && cy == Color::squiggly) {
                    throw internal_error("switch path: missed a pairing node at w");
                }
            }
            if (w_a >= 0)
                move_g(SwitchMove{x, w_a, y, v});
            else if (w_b >= 0)
                move_g(SwitchMove{x, w_b, y, v});
            else if (w_c >= 0) {
                move_g(SwitchMove{x, w_c, y, v});
                pending = Pairing{x, v, u};
            } else
                throw internal_error("switch path: no rewiring neighbor");
            return;
        }
        if (dashed_q) {
            const auto [x, u, y, v] = *dashed_q;
            int w_a = -1, w_b = -1, w_c = -1;
            for (int w = 0; w < G.vertex_count(); ++w) {
                if (w == x || w == y) continue;
                const Color cy = color(y, w), cx = color(x, w);
                if (cy == Color::squiggly && cx == Color::dotted) {
                    if (w_a < 0) w_a = w;
                } else if (cy == Color::dashed && cx == Color::straight) {
                    if (w_b < 0) w_b = w;
                } else if (cy == Color::dashed && cx == Color::dotted) {
                    if (w_c < 0) w_c = w;
                } else if (cy == Color::squiggly && cx == Color::straight) {
                    throw internal_error("switch path: missed a pairing node at w");
                }
            }
            if (w_a >= 0)
                move_t(SwitchMove{y, w_a, x, v});
            else if (w_b >= 0)
                move_t(SwitchMove{y, w_b, x, v});
            else if (w_c >= 0) {
                move_t(SwitchMove{y, w_c, x, v});
                pending = Pairing{x, v, u};
            } else
                throw internal_error("switch path: no target-side rewiring neighbor");
            return;
        }
        throw internal_error("switch path: difference is nonempty but no pattern found");
    }
};

}  // namespace

std::vector<SwitchMove> switch_path(const LabeledGraph& g0, const LabeledGraph& g1) {
    if (g0.class_sizes() != g1.class_sizes())
        throw validation_error("switch path: graphs live on different vertex sets");
    {
        const JdmSummary a = extract_jdm(g0), b = extract_jdm(g1);
        if (!a.class_regular() || !b.class_regular() || a.class_degrees != b.class_degrees ||
            a.realized != b.realized)
            throw validation_error("switch path: graphs do not realize the same instance");
    }
    PathSearch s{g0, g1, {}, {}, std::nullopt};
    const std::size_t start_diff = edge_difference(g0, g1);
    const std::size_t hard_cap = 50 * (start_diff + 2) + 100;

    // induction measure: the difference against the working target must keep
    // making progress within a bounded window
    std::size_t best = start_diff;
    int stall = 0;
    while (!(s.G == s.T)) {
        if (s.prefix.size() + s.suffix_rev.size() > hard_cap)
            throw internal_error("switch path: move cap exceeded");
        const std::size_t measure = edge_difference(s.G, s.T);
        if (measure < best) {
            best = measure;
            stall = 0;
        } else if (++stall > 16) {
            throw internal_error("switch path: induction measure stalled");
        }
        if (s.pending) {
            const auto p = *s.pending;
            s.pending.reset();
            s.run_case1(p);
        } else if (auto p = s.find_pairing()) {
            s.run_case1(*p);
        } else {
            s.run_case2();
        }
    }
    std::vector<SwitchMove> moves = std::move(s.prefix);
    moves.insert(moves.end(), s.suffix_rev.rbegin(), s.suffix_rev.rend());
    return moves;
}

}  // namespace jdm
