#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jdm/instance.hpp"

namespace jdm {

// A simple undirected graph over class-tagged vertices. Vertices are flat
// ids 0..n-1 laid out class-major, neighbor lists are kept sorted, and two
// graphs compare equal iff their class layout and edge sets coincide.
class LabeledGraph {
  public:
    LabeledGraph() = default;
    explicit LabeledGraph(std::vector<int> class_sizes);
    static LabeledGraph empty_like(const JdmInstance& inst) { return LabeledGraph(inst.class_sizes); }

    int vertex_count() const { return static_cast<int>(class_of_.size()); }
    int class_count() const { return static_cast<int>(class_sizes_.size()); }
    const std::vector<int>& class_sizes() const { return class_sizes_; }
    int class_of(int v) const { return class_of_[v]; }
    int class_begin(int c) const { return class_start_[c]; }
    int class_end(int c) const { return class_start_[c] + class_sizes_[c]; }

    VertexId id_of(int v) const { return VertexId{class_of_[v], v - class_start_[class_of_[v]]}; }
    int flat(VertexId id) const { return class_start_[id.cls] + id.off; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);     // throws internal_error on loops or duplicates
    void remove_edge(int u, int v);  // throws internal_error if absent

    std::size_t edge_count() const { return edge_count_; }
    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const LabeledGraph& o) const {
        return class_sizes_ == o.class_sizes_ && adj_ == o.adj_;
    }

  private:
    std::vector<int> class_sizes_;
    std::vector<int> class_start_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

// Realized per-class degree multisets and per-pair edge counts of a graph.
struct JdmSummary {
    std::vector<std::vector<int>> class_degrees;  // sorted per class
    std::vector<std::vector<long long>> realized; // k x k, symmetric

    // True iff all vertices of each class share one degree.
    bool class_regular() const;
    // Round-trip into an instance; requires class_regular().
    JdmInstance to_instance(const std::vector<int>& class_sizes) const;
};

JdmSummary extract_jdm(const LabeledGraph& g);

// True iff every vertex of class i has degree d(V_i) and realized pair
// counts match the matrix exactly. Throws validation_error when the vertex
// sets differ.
bool validate_realization(const LabeledGraph& g, const JdmInstance& inst);

// Connectivity helpers. component_ids yields a dense id per vertex, in
// order of first appearance by smallest vertex.
std::vector<int> component_ids(const LabeledGraph& g);
int component_count(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);

// True iff the graph is acyclic and connected.
bool is_tree(const LabeledGraph& g);

// Edges lying on some cycle (the non-bridges), as (u, v) with u < v, sorted.
std::vector<std::pair<int, int>> cycle_edges(const LabeledGraph& g);

}  // namespace jdm
