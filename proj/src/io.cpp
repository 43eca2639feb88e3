#include "jdm/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace jdm {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw validation_error(what); }

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("instance document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("classes") || !doc.contains("matrix"))
        fail("instance document needs \"classes\" and \"matrix\"");
    const json& classes = doc["classes"];
    if (!classes.is_array() || classes.empty()) fail("\"classes\" must be a non-empty array");

    ParsedInstance out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const json& c = classes[i];
        if (!c.is_object() || !c.contains("name") || !c.contains("size") || !c.contains("degree"))
            fail("class " + std::to_string(i) + " needs name, size and degree");
        const std::string name = c["name"].get<std::string>();
        if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
            fail("class " + std::to_string(i) + " has an empty or whitespace name");
        if (!seen.insert(name).second) fail("duplicate class name \"" + name + "\"");
        if (!c["size"].is_number_integer() || c["size"].get<long long>() < 1)
            fail("class \"" + name + "\" needs a positive integer size");
        if (!c["degree"].is_number_integer() || c["degree"].get<long long>() < 0)
            fail("class \"" + name + "\" needs a non-negative integer degree");
        out.names.push_back(name);
        out.star.class_sizes.push_back(c["size"].get<int>());
        out.star.class_degrees.push_back(c["degree"].get<int>());
    }

    const json& m = doc["matrix"];
    const std::size_t k = out.names.size();
    if (!m.is_array() || m.size() != k) fail("matrix must have one row per class");
    out.star.entries.assign(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        if (!m[i].is_array() || m[i].size() != k)
            fail("matrix row " + std::to_string(i) + " must have " + std::to_string(k) + " entries");
        for (std::size_t j = 0; j < k; ++j) {
            const json& e = m[i][j];
            if (e.is_string()) {
                if (e.get<std::string>() != "*")
                    fail("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") must be a count or \"*\"");
                out.star.entries[i][j] = kWildcard;
            } else if (e.is_number_integer() && e.get<long long>() >= 0) {
                out.star.entries[i][j] = e.get<long long>();
            } else {
                fail("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") must be a non-negative integer or \"*\"");
            }
        }
    }
    out.star.validate();
    return out;
}

std::string emit_instance(const StarInstance& star, const std::vector<std::string>& names) {
    star.validate();
    if (names.size() != star.class_sizes.size())
        fail("emit_instance: one name per class required");
    json doc;
    doc["classes"] = json::array();
    for (std::size_t i = 0; i < names.size(); ++i)
        doc["classes"].push_back(
            {{"name", names[i]}, {"size", star.class_sizes[i]}, {"degree", star.class_degrees[i]}});
    json m = json::array();
    for (const auto& row : star.entries) {
        json r = json::array();
        for (long long e : row) {
            if (e == kWildcard)
                r.push_back("*");
            else
                r.push_back(e);
        }
        m.push_back(r);
    }
    doc["matrix"] = m;
    return doc.dump(2) + "\n";
}

std::vector<std::string> default_names(int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) {
        if (i < 26)
            names.push_back(std::string(1, static_cast<char>('A' + i)));
        else
            names.push_back("C" + std::to_string(i));
    }
    return names;
}

std::string vertex_label(const LabeledGraph& g, const std::vector<std::string>& names, int v) {
    const VertexId id = g.id_of(v);
    return names[id.cls] + "_" + std::to_string(id.off);
}

namespace {

int parse_label(const LabeledGraph& g, const std::map<std::string, int>& name_index,
                const std::string& label, int line_no) {
    const auto us = label.rfind('_');
    if (us == std::string::npos || us == 0 || us + 1 == label.size())
        fail("line " + std::to_string(line_no) + ": bad vertex label \"" + label + "\"");
    const std::string name = label.substr(0, us);
    const auto it = name_index.find(name);
    if (it == name_index.end())
        fail("line " + std::to_string(line_no) + ": unknown class \"" + name + "\"");
    int off = -1;
    try {
        std::size_t used = 0;
        off = std::stoi(label.substr(us + 1), &used);
        if (used != label.size() - us - 1) off = -1;
    } catch (...) {
        off = -1;
    }
    if (off < 0 || off >= g.class_sizes()[it->second])
        fail("line " + std::to_string(line_no) + ": offset out of range in \"" + label + "\"");
    return g.class_begin(it->second) + off;
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        if (required) fail("graph document ended early at line " + std::to_string(line_no));
        return false;
    };
    next_line(true);
    if (line != "jdm-graph v1") fail("line " + std::to_string(line_no) + ": expected \"jdm-graph v1\"");

    std::vector<std::string> names;
    std::vector<int> sizes;
    long long edge_total = -1;
    for (;;) {
        next_line(true);
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "class") {
            std::string name;
            long long size = -1;
            if (!(ls >> name >> size) || size < 1)
                fail("line " + std::to_string(line_no) + ": expected \"class <name> <size>\"");
            if (std::find(names.begin(), names.end(), name) != names.end())
                fail("line " + std::to_string(line_no) + ": duplicate class \"" + name + "\"");
            names.push_back(name);
            sizes.push_back(static_cast<int>(size));
        } else if (word == "edges") {
            if (!(ls >> edge_total) || edge_total < 0)
                fail("line " + std::to_string(line_no) + ": expected \"edges <count>\"");
            break;
        } else {
            fail("line " + std::to_string(line_no) + ": expected a class line or the edge count");
        }
    }
    if (names.empty()) fail("graph document declares no classes");

    GraphDocument out{LabeledGraph(sizes), names};
    std::map<std::string, int> name_index;
    for (std::size_t i = 0; i < names.size(); ++i) name_index[names[i]] = static_cast<int>(i);
    for (long long e = 0; e < edge_total; ++e) {
        next_line(true);
        std::istringstream ls(line);
        std::string la, lb, extra;
        if (!(ls >> la >> lb) || (ls >> extra))
            fail("line " + std::to_string(line_no) + ": expected two vertex labels");
        const int a = parse_label(out.graph, name_index, la, line_no);
        const int b = parse_label(out.graph, name_index, lb, line_no);
        if (a == b) fail("line " + std::to_string(line_no) + ": self-loop");
        if (out.graph.has_edge(a, b))
            fail("line " + std::to_string(line_no) + ": duplicate edge");
        out.graph.add_edge(a, b);
    }
    if (next_line(false)) fail("line " + std::to_string(line_no) + ": trailing content");
    return out;
}

std::string emit_graph(const LabeledGraph& g, const std::vector<std::string>& names,
                       const std::string& format, const std::vector<std::string>& comment_lines) {
    if (names.size() != static_cast<std::size_t>(g.class_count()))
        fail("emit_graph: one name per class required");
    std::ostringstream out;
    if (format == "jdm") {
        out << "jdm-graph v1\n";
        for (const auto& c : comment_lines) out << "# " << c << "\n";
        for (int c = 0; c < g.class_count(); ++c)
            out << "class " << names[c] << " " << g.class_sizes()[c] << "\n";
        out << "edges " << g.edge_count() << "\n";
        for (auto [u, v] : g.edges())
            out << vertex_label(g, names, u) << " " << vertex_label(g, names, v) << "\n";
    } else if (format == "dot") {
        out << "graph jdm {\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "  \"" << vertex_label(g, names, v) << "\";\n";
        for (auto [u, v] : g.edges())
            out << "  \"" << vertex_label(g, names, u) << "\" -- \"" << vertex_label(g, names, v)
                << "\";\n";
        out << "}\n";
    } else {
        fail("unknown graph format \"" + format + "\"");
    }
    return out.str();
}

std::string edge_list_line(const LabeledGraph& g, const std::vector<std::string>& names) {
    const auto edges = g.edges();
    if (edges.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += vertex_label(g, names, edges[i].first) + "-" +
               vertex_label(g, names, edges[i].second);
    }
    return out;
}

std::string certificate_json(const JdmInstance& inst, const Certificate& cert,
                             const std::vector<std::string>& names) {
    if (names.size() != inst.class_sizes.size()) fail("certificate_json: one name per class required");
    const CertificateCheck check = verify_certificate_detail(inst, cert);
    json doc;
    doc["type"] = "certificate";
    doc["f"] = json::array();
    for (int cl : cert.f_classes) doc["f"].push_back(names[cl]);
    doc["groups"] = json::array();
    for (const auto& grp : cert.groups) {
        json g = json::array();
        for (int cl : grp) g.push_back(names[cl]);
        doc["groups"].push_back(g);
    }
    json wg;
    wg["vertices"] = check.vertices;
    wg["edges"] = json::array();
    for (const auto& e : check.edges)
        wg["edges"].push_back({{"a", e.a}, {"b", e.b}, {"w", e.w}});
    doc["weighted_graph"] = wg;
    doc["graph_connected"] = check.graph_connected;
    doc["weight_sum"] = check.weight_sum;
    doc["requirement"] = check.requirement;
    doc["refutes"] = check.refutes;
    return doc.dump(2) + "\n";
}

std::string chain_meta_json(const ChainRun& run) {
    json doc;
    doc["seed"] = run.seed;
    doc["steps"] = run.stats.steps;
    doc["lazy_holds"] = run.stats.lazy_holds;
    doc["proposals"] = run.stats.proposals;
    doc["accepted"] = run.stats.accepted;
    doc["acceptance_rate"] = run.stats.acceptance_rate();
    doc["ell_min"] = run.stats.ell_min;
    doc["ell_max"] = run.stats.ell_max;
    doc["ell_mean"] = run.stats.ell_mean;
    return doc.dump();
}

}  // namespace jdm
