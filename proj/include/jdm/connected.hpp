#pragma once

#include <string>
#include <variant>
#include <vector>

#include "jdm/graph.hpp"
#include "jdm/instance.hpp"

namespace jdm {

// The reduced instance used by connected realization: each class shrinks to
// the minimum possible number of components of its induced subgraph, the
// diagonal zeroes out, and cross counts are capped by the shrunken sizes.
struct ContractedInstance {
    std::vector<int> sizes;                       // max{1, n_i - d_ii}
    std::vector<std::vector<long long>> matrix;   // tilde-d

    int class_count() const { return static_cast<int>(sizes.size()); }
    int total() const;
};

ContractedInstance contract(const JdmInstance& inst);

// A witness that no connected realization exists: a set F of contracted
// classes together with a partition of F into groups. Class indices refer to
// the instance's classes.
struct Certificate {
    std::vector<int> f_classes;             // sorted
    std::vector<std::vector<int>> groups;   // partition of f_classes, each sorted
};

// The weighted graph built from a certificate plus both sides of the tree
// capacity inequality. The certificate refutes connectivity iff the graph is
// disconnected or weight_sum < requirement.
struct CertificateCheck {
    struct WeightedEdge {
        std::string a, b;
        long long w = 0;
    };
    std::vector<std::string> vertices;      // "a<i>" per group, "u<j>" per outside class
    std::vector<WeightedEdge> edges;
    bool graph_connected = false;
    long long weight_sum = 0;
    long long requirement = 0;              // |A| + sum of outside sizes - 1
    bool refutes = false;
};

CertificateCheck verify_certificate_detail(const JdmInstance& inst, const Certificate& cert);
bool verify_certificate(const JdmInstance& inst, const Certificate& cert);

// Either a spanning tree over the contracted vertex set respecting the
// contracted matrix as upper bounds, or a certificate that none exists.
std::variant<LabeledGraph, Certificate> valid_tree_construction(const ContractedInstance& c);

// Grow a valid tree on the contracted vertices into a spanning tree on the
// full vertex set by hanging a path of the missing vertices off the first
// vertex of each class.
LabeledGraph expand_tree(const LabeledGraph& tree, const JdmInstance& inst);

// Rebalance tree degrees inside each class to within one of each other by
// moving neighbors between same-class vertices; pair counts are unchanged
// and the result is still a tree.
LabeledGraph balance_tree(LabeledGraph tree, const JdmInstance& inst);

// Full pipeline: contract, build a valid tree (or certificate), expand,
// balance, then extend with the balanced construction, which keeps the seed
// connected.
std::variant<LabeledGraph, Certificate> realize_connected(const JdmInstance& inst);

}  // namespace jdm
