#include "jdm/sampler.hpp"

#include <algorithm>

namespace jdm {

void apply_switch(LabeledGraph& g, const SwitchMove& m) {
    if (g.class_of(m.u) != g.class_of(m.u2))
        throw internal_error("switch: u and u' are in different classes");
    if (!g.has_edge(m.u, m.v) || !g.has_edge(m.u2, m.v2))
        throw internal_error("switch: an edge to remove is absent");
    if (g.has_edge(m.u, m.v2) || g.has_edge(m.u2, m.v))
        throw internal_error("switch: an edge to add is present");
    g.remove_edge(m.u, m.v);
    g.remove_edge(m.u2, m.v2);
    g.add_edge(m.u, m.v2);
    g.add_edge(m.u2, m.v);
}

namespace {

// A switch is found once per same-class endpoint pair it can pivot on: via
// (u, u2) always, and additionally via (v, v2) when those two share a class.
// Keeping only a canonical pivot dedups by produced graph without storing
// keys: if both pivots qualify, the one holding the smallest vertex wins.
// Adjacency goes through a flat bitmask so the whole scan stays within the
// quartic bound.
template <typename Visit>
void scan_legal_switches(const LabeledGraph& g, Visit&& visit) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::uint64_t> adj((n * n + 63) / 64, 0);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            const std::size_t b = n * static_cast<std::size_t>(u) + static_cast<std::size_t>(v);
            adj[b >> 6] |= std::uint64_t{1} << (b & 63);
        }
    auto has = [&](int a, int b) {
        const std::size_t bit = n * static_cast<std::size_t>(a) + static_cast<std::size_t>(b);
        return (adj[bit >> 6] >> (bit & 63)) & 1;
    };
    for (int c = 0; c < g.class_count(); ++c)
        for (int u = g.class_begin(c); u < g.class_end(c); ++u)
            for (int u2 = u + 1; u2 < g.class_end(c); ++u2)
                for (int v : g.neighbors(u)) {
                    if (v == u2 || has(u2, v)) continue;
                    for (int v2 : g.neighbors(u2)) {
                        if (v2 == u || v2 == v || has(u, v2)) continue;
                        if (g.class_of(v) == g.class_of(v2) && std::min(v, v2) < u)
                            continue;  // the (v, v2) pivot owns this move
                        visit(SwitchMove{u, v, u2, v2});
                    }
                }
}

}  // namespace

std::vector<SwitchMove> enumerate_legal_switches(const LabeledGraph& g) {
    std::vector<SwitchMove> out;
    scan_legal_switches(g, [&](const SwitchMove& m) { out.push_back(m); });
    return out;
}

std::size_t count_legal_switches(const LabeledGraph& g) {
    std::size_t n = 0;
    scan_legal_switches(g, [&](const SwitchMove&) { ++n; });
    return n;
}

std::size_t edge_difference(const LabeledGraph& a, const LabeledGraph& b) {
    std::size_t diff = 0;
    for (auto [u, v] : a.edges())
        if (!b.has_edge(u, v)) ++diff;
    for (auto [u, v] : b.edges())
        if (!a.has_edge(u, v)) ++diff;
    return diff;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw internal_error("Rng::below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

ChainState::ChainState(LabeledGraph g, const JdmInstance& inst, std::uint64_t seed)
    : g_(std::move(g)), inst_(inst), rng_(seed), seed_(seed) {
    if (!validate_realization(g_, inst_))
        throw validation_error("chain start graph does not realize the instance");
    switches_ = enumerate_legal_switches(g_);
}

void ChainState::step() {
    stats_.steps += 1;
    const std::uint64_t ell_now = ell();
    if (stats_.steps == 1 || ell_now < stats_.ell_min) stats_.ell_min = ell_now;
    if (ell_now > stats_.ell_max) stats_.ell_max = ell_now;
    ell_sum_ += static_cast<double>(ell_now);
    stats_.ell_mean = ell_sum_ / static_cast<double>(stats_.steps);

    if (rng_.half()) {
        stats_.lazy_holds += 1;
        return;
    }
    if (ell_now == 0) return;
    stats_.proposals += 1;
    const SwitchMove m = switches_[rng_.below(ell_now)];
    LabeledGraph next = g_;
    apply_switch(next, m);
    auto next_switches = enumerate_legal_switches(next);
    const std::uint64_t ell_next = next_switches.size();
    // accept with probability ell / (ell + ell'), drawn exactly
    if (rng_.below(ell_now + ell_next) < ell_now) {
        stats_.accepted += 1;
        g_ = std::move(next);
        switches_ = std::move(next_switches);
    }
}

ChainRun run_chain(const LabeledGraph& g0, const JdmInstance& inst, std::uint64_t steps,
                   std::uint64_t seed, bool histogram) {
    ChainState state(g0, inst, seed);
    ChainRun run;
    run.seed = seed;
    for (std::uint64_t t = 0; t < steps; ++t) {
        state.step();
        if (histogram) run.histogram[state.graph().edges()] += 1;
    }
    run.stats = state.stats();
    run.final_graph = state.graph();
    return run;
}

}  // namespace jdm
