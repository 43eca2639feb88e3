#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jdm/graph.hpp"
#include "jdm/instance.hpp"

namespace jdm {

// Residual construction task after the exact entries have been realized:
// reach the given extra degree per vertex without using any forbidden pair.
struct ForbiddenDegreeProblem {
    std::vector<int> residual;                 // one entry per vertex
    std::vector<std::vector<char>> forbidden;  // symmetric n x n, diagonal ignored

    int vertex_count() const { return static_cast<int>(residual.size()); }
};

// The matching gadget: one slot vertex v_ij per ordered pair (i, j != i),
// plus n - d_i - 1 degree enforcers per vertex i, with {v_ij, v_ji} edges for
// allowed pairs and full stars between each vertex's slots and enforcers.
// The residual problem is realizable iff this graph has a perfect matching.
struct GadgetGraph {
    int vertices = 0;
    std::vector<std::vector<int>> adj;
    // slot id of v_ij, or -1 on the diagonal
    std::vector<std::vector<int>> slot;

    int slot_of(int i, int j) const { return slot[i][j]; }
};

// Throws feasibility_error when some residual is >= n (impossible in a
// simple graph).
GadgetGraph build_matching_gadget(const ForbiddenDegreeProblem& p);

// Realize the residual problem, or nothing when the gadget has no perfect
// matching. Returned edge list uses the problem's vertex indices.
std::optional<std::vector<std::pair<int, int>>> solve_forbidden_degree(
    const ForbiddenDegreeProblem& p);

struct StarRealizeResult {
    enum class Status {
        realized,      // graph holds the realization
        infeasible,    // provably empty (parity, caps, exact-entry feasibility)
        no_matching,   // this method found no realization; emptiness not implied
    };
    Status status = Status::infeasible;
    std::optional<LabeledGraph> graph;
    std::string reason;
};

// Structural reasons the instance is provably empty (degree caps, exact-entry
// caps and budgets, leftover parity), or nothing when those all hold.
std::optional<std::string> star_infeasibility(const StarInstance& inst);

// Realize an instance whose matrix may contain wildcard entries: build the
// exact-entry subgraph with the balanced construction, then finish the
// leftover degrees with the matching gadget, avoiding all exact pairs.
StarRealizeResult realize_star(const StarInstance& inst);

}  // namespace jdm
