#pragma once

#include <utility>
#include <vector>

#include "jdm/graph.hpp"
#include "jdm/instance.hpp"

namespace jdm {

// Grows a realization one edge at a time while keeping, inside every class,
// max degree - min degree <= 1 and never overshooting any pair quota. Every
// add_edge call realizes exactly one more edge of the requested pair and
// never increases the number of connected components. Exposed as a class so
// tests can step the construction and check the invariants after each edge.
//
// Only matrix feasibility is required here: run() fills the quotas either
// way, and with degree feasibility the result is a realization. The realize
// entry points below enforce both.
class BalancedBuilder {
  public:
    explicit BalancedBuilder(const JdmInstance& inst);
    // Start from a partial graph. The seed must respect all quotas as upper
    // bounds and already satisfy the balance invariant, otherwise a
    // validation_error is thrown.
    BalancedBuilder(const JdmInstance& inst, LabeledGraph seed);

    bool finished() const;
    // Lexicographically smallest (i, j), i <= j, with unmet quota.
    std::pair<int, int> next_unsatisfied() const;
    long long realized(int ci, int cj) const { return realized_[ci][cj]; }
    long long residual(int ci, int cj) const;

    // One iteration of the balanced construction for the pair (ci, cj).
    void add_edge(int ci, int cj);

    const LabeledGraph& graph() const { return g_; }
    const JdmInstance& instance() const { return inst_; }

    // Run remaining iterations in lexicographic pair order.
    LabeledGraph run();

  private:
    // case handlers; each realizes one (ci, cj) edge or returns false
    bool case_a1(int ci, int cj);
    bool case_a2(int ci, int cj);        // u in N_i, v in M_j
    bool case_a2_prime(int ci, int cj);  // u in M_i, v in N_j
    bool case_a3(int ci, int cj);
    bool case_b1(int ci);
    bool case_b2(int ci);
    bool case_b3(int ci);

    bool in_min(int v) const { return g_.degree(v) == min_deg_[g_.class_of(v)]; }
    bool in_max(int v) const { return g_.degree(v) == max_deg_[g_.class_of(v)]; }
    int min_count(int c) const { return hist_[c][min_deg_[c]]; }
    int first_min(int c, int exclude = -1) const;

    void do_add(int u, int v);
    void do_remove(int u, int v);
    void bump(int v, int delta);

    JdmInstance inst_;
    LabeledGraph g_;
    std::vector<std::vector<long long>> realized_;
    std::vector<std::vector<int>> hist_;  // hist_[c][d]: vertices of class c with degree d
    std::vector<int> min_deg_, max_deg_;
};

// The straightforward construction: place the prescribed number of edges per
// pair arbitrarily (in lexicographic order here), then repair degrees inside
// each class by moving neighbors from over-degree to under-degree vertices.
LabeledGraph simple_realize(const JdmInstance& inst);

// The balanced construction, from scratch or extending a seed graph. When
// the seed is connected the output is connected as well.
LabeledGraph balanced_realize(const JdmInstance& inst);
LabeledGraph balanced_realize(const JdmInstance& inst, LabeledGraph seed);

}  // namespace jdm
