#pragma once

#include <vector>

#include "jdm/graph.hpp"
#include "jdm/instance.hpp"

namespace jdm {

// Brute-force enumeration of every simple graph realizing the instance, in a
// deterministic order. Intended as the desk-scale oracle; refuses instances
// with more than `cap` vertices. Works on infeasible instances too (returns
// an empty set).
std::vector<LabeledGraph> enumerate_omega(const JdmInstance& inst, int cap = 10);

}  // namespace jdm
