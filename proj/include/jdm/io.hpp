#pragma once

#include <string>
#include <vector>

#include "jdm/connected.hpp"
#include "jdm/graph.hpp"
#include "jdm/instance.hpp"
#include "jdm/sampler.hpp"

namespace jdm {

// Instance document: JSON with named classes and a matrix whose entries are
// counts or the literal "*".
struct ParsedInstance {
    StarInstance star;
    std::vector<std::string> names;

    bool exact() const { return !star.has_wildcards(); }
};

ParsedInstance parse_instance(const std::string& text);
std::string emit_instance(const StarInstance& star, const std::vector<std::string>& names);

// Graph document: a header, one "class <name> <size>" line per class, then a
// canonically sorted edge list of "<Name>_<offset> <Name>_<offset>" lines.
// Lines starting with '#' are comments and may carry machine-readable
// metadata; they are ignored by the parser.
struct GraphDocument {
    LabeledGraph graph;
    std::vector<std::string> names;
};

GraphDocument parse_graph(const std::string& text);

// format: "jdm" (canonical, round-trips) or "dot" (export only).
std::string emit_graph(const LabeledGraph& g, const std::vector<std::string>& names,
                       const std::string& format = "jdm",
                       const std::vector<std::string>& comment_lines = {});

std::vector<std::string> default_names(int k);
std::string vertex_label(const LabeledGraph& g, const std::vector<std::string>& names, int v);

// Single-line canonical edge list, e.g. "A_0-A_1,A_0-B_2", "-" when empty.
std::string edge_list_line(const LabeledGraph& g, const std::vector<std::string>& names);

// Human-auditable certificate document: F, the grouping, the weighted graph
// and both sides of the failed inequality.
std::string certificate_json(const JdmInstance& inst, const Certificate& cert,
                             const std::vector<std::string>& names);

// Metadata record of a chain run (seed, steps, acceptance, ell statistics).
std::string chain_meta_json(const ChainRun& run);

}  // namespace jdm
