#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "jdm/error.hpp"

namespace jdm {

// Identifies a vertex as (class index, offset within class). Flat vertex ids
// used throughout the library are assigned class-major, so the ordering of
// flat ids coincides with the lexicographic (cls, off) ordering. All "pick
// any" steps in the construction algorithms break ties by smallest id.
struct VertexId {
    int cls = 0;
    int off = 0;
    auto operator<=>(const VertexId&) const = default;
};

// An instance of the joint-degree problem: a partition of the vertex set
// into degree classes V_1..V_k, the prescribed degree of each class, and the
// symmetric k x k matrix of exact edge counts between (and within) classes.
struct JdmInstance {
    std::vector<int> class_sizes;                 // |V_i| >= 1
    std::vector<int> class_degrees;               // d(V_i) >= 0
    std::vector<std::vector<long long>> matrix;   // d_ij, symmetric

    int class_count() const { return static_cast<int>(class_sizes.size()); }
    int total_vertices() const;

    // Throws validation_error if the shape is off, the matrix is asymmetric
    // or has negative entries, or any class is empty.
    void validate() const;
};

constexpr long long kWildcard = -1;

// Instance with a D* matrix: entries are exact counts or kWildcard, meaning
// the number of edges between the two classes is unconstrained.
struct StarInstance {
    std::vector<int> class_sizes;
    std::vector<int> class_degrees;
    std::vector<std::vector<long long>> entries;  // d_ij or kWildcard

    int class_count() const { return static_cast<int>(class_sizes.size()); }
    int total_vertices() const;
    bool has_wildcards() const;

    void validate() const;

    // D_0: wildcards replaced by zero.
    JdmInstance zero_filled() const;
    // Requires has_wildcards() == false.
    JdmInstance as_exact() const;
};

// Condition (i): 2*d_ii + sum_{j != i} d_ij == |V_i| * d(V_i) for every i.
bool check_degree_feasibility(const JdmInstance& inst);

// Condition (ii): d_ij <= |V_i|*|V_j| for i < j and d_ii <= |V_i|(|V_i|-1)/2.
bool check_matrix_feasibility(const JdmInstance& inst);

// Throws feasibility_error naming the first violated condition.
void require_feasible(const JdmInstance& inst);

}  // namespace jdm
