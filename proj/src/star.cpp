#include "jdm/star.hpp"

#include <numeric>
#include <string>

#include "jdm/matching.hpp"
#include "jdm/realize.hpp"

namespace jdm {

GadgetGraph build_matching_gadget(const ForbiddenDegreeProblem& p) {
    const int n = p.vertex_count();
    for (int i = 0; i < n; ++i) {
        if (p.residual[i] < 0) throw validation_error("negative residual degree");
        if (p.residual[i] >= n)
            throw feasibility_error("residual degree " + std::to_string(p.residual[i]) +
                                    " at vertex " + std::to_string(i) +
                                    " cannot fit a simple graph on " + std::to_string(n) +
                                    " vertices");
    }
    GadgetGraph g;
    g.slot.assign(n, std::vector<int>(n, -1));
    int id = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) g.slot[i][j] = id++;
    std::vector<std::pair<int, int>> enforcer_range(n);
    for (int i = 0; i < n; ++i) {
        enforcer_range[i] = {id, id + (n - p.residual[i] - 1)};
        id = enforcer_range[i].second;
    }
    g.vertices = id;
    g.adj.assign(id, {});
    auto link = [&](int a, int b) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!p.forbidden[i][j]) link(g.slot[i][j], g.slot[j][i]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int e = enforcer_range[i].first; e < enforcer_range[i].second; ++e)
                link(g.slot[i][j], e);
        }
    return g;
}

std::optional<std::vector<std::pair<int, int>>> solve_forbidden_degree(
    const ForbiddenDegreeProblem& p) {
    const int n = p.vertex_count();
    long long residual_sum = std::accumulate(p.residual.begin(), p.residual.end(), 0LL);
    if (residual_sum % 2 != 0) return std::nullopt;
    const GadgetGraph g = build_matching_gadget(p);
    const auto match = perfect_matching(g.vertices, g.adj);
    if (!match) return std::nullopt;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!p.forbidden[i][j] && (*match)[g.slot_of(i, j)] == g.slot_of(j, i))
                edges.emplace_back(i, j);
    return edges;
}

std::optional<std::string> star_infeasibility(const StarInstance& star) {
    star.validate();
    const int k = star.class_count();
    const int n = star.total_vertices();

    for (int i = 0; i < k; ++i)
        if (star.class_degrees[i] > n - 1)
            return "class " + std::to_string(i) + " asks for degree " +
                   std::to_string(star.class_degrees[i]) + " on " + std::to_string(n) + " vertices";

    // feasibility restricted to the exact entries
    for (int i = 0; i < k; ++i) {
        const long long ni = star.class_sizes[i];
        if (star.entries[i][i] != kWildcard && star.entries[i][i] > ni * (ni - 1) / 2)
            return "cell (" + std::to_string(i) + "," + std::to_string(i) + ") exceeds " +
                   std::to_string(ni * (ni - 1) / 2);
        for (int j = i + 1; j < k; ++j)
            if (star.entries[i][j] != kWildcard && star.entries[i][j] > ni * star.class_sizes[j])
                return "cell (" + std::to_string(i) + "," + std::to_string(j) + ") exceeds " +
                       std::to_string(ni * star.class_sizes[j]);
    }
    long long residual_total = 0;
    for (int i = 0; i < k; ++i) {
        long long fixed = 0;
        bool row_has_wildcard = false;
        for (int j = 0; j < k; ++j) {
            const long long e = star.entries[i][j];
            if (e == kWildcard)
                row_has_wildcard = true;
            else
                fixed += (j == i) ? 2 * e : e;
        }
        const long long budget = static_cast<long long>(star.class_sizes[i]) * star.class_degrees[i];
        if (fixed > budget || (!row_has_wildcard && fixed != budget))
            return "exact entries of row " + std::to_string(i) + " sum to " + std::to_string(fixed) +
                   " against a degree budget of " + std::to_string(budget);
        residual_total += budget - fixed;
    }
    if (residual_total % 2 != 0) return "leftover degree sum is odd";
    return std::nullopt;
}

StarRealizeResult realize_star(const StarInstance& star) {
    star.validate();
    StarRealizeResult out;
    const int k = star.class_count();
    const int n = star.total_vertices();

    if (auto reason = star_infeasibility(star)) {
        out.status = StarRealizeResult::Status::infeasible;
        out.reason = *reason;
        return out;
    }
    const JdmInstance d0 = star.zero_filled();

    // exact-entry subgraph, built balanced so the leftover degrees are as
    // even as possible inside each class
    LabeledGraph h = BalancedBuilder(d0).run();

    ForbiddenDegreeProblem p;
    p.residual.resize(n);
    for (int v = 0; v < n; ++v) {
        p.residual[v] = star.class_degrees[h.class_of(v)] - h.degree(v);
        if (p.residual[v] < 0)
            throw internal_error("balanced subgraph overshot a vertex degree");
    }
    p.forbidden.assign(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && star.entries[h.class_of(u)][h.class_of(v)] != kWildcard)
                p.forbidden[u][v] = 1;

    const auto extra = solve_forbidden_degree(p);
    if (!extra) {
        out.status = StarRealizeResult::Status::no_matching;
        out.reason = "the matching gadget has no perfect matching; "
                     "no realization found by this method";
        return out;
    }
    for (auto [u, v] : *extra) h.add_edge(u, v);

    for (int v = 0; v < n; ++v)
        if (h.degree(v) != star.class_degrees[h.class_of(v)])
            throw internal_error("star realization missed a vertex degree");
    const JdmSummary s = extract_jdm(h);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (star.entries[i][j] != kWildcard && s.realized[i][j] != star.entries[i][j])
                throw internal_error("star realization missed an exact entry");

    out.status = StarRealizeResult::Status::realized;
    out.graph = std::move(h);
    return out;
}

}  // namespace jdm
