#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "jdm/connected.hpp"
#include "jdm/io.hpp"
#include "jdm/omega.hpp"
#include "jdm/realize.hpp"
#include "jdm/sampler.hpp"
#include "jdm/star.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;  // also usage and input errors
constexpr int kExitCertificate = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw jdm::error("cannot open \"" + path + "\"");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw jdm::error("cannot open \"" + path + "\" for writing");
    out << text;
}

std::string move_line(const jdm::LabeledGraph& g, const std::vector<std::string>& names,
                      const jdm::SwitchMove& m) {
    auto lab = [&](int v) { return jdm::vertex_label(g, names, v); };
    return lab(m.u) + "-" + lab(m.v) + " " + lab(m.u2) + "-" + lab(m.v2) + " -> " + lab(m.u) + "-" +
           lab(m.v2) + " " + lab(m.u2) + "-" + lab(m.v);
}

// Vertices regrouped into classes by degree, ascending. The result is
// class-regular by construction.
jdm::GraphDocument regroup_by_degree(const jdm::LabeledGraph& g) {
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < g.vertex_count(); ++v) by_degree[g.degree(v)].push_back(v);
    std::vector<int> sizes;
    std::vector<int> new_id(g.vertex_count());
    int at = 0;
    for (auto& [deg, verts] : by_degree) {
        sizes.push_back(static_cast<int>(verts.size()));
        for (int v : verts) new_id[v] = at++;
    }
    jdm::GraphDocument out{jdm::LabeledGraph(sizes), jdm::default_names(static_cast<int>(sizes.size()))};
    for (auto [u, v] : g.edges()) out.graph.add_edge(new_id[u], new_id[v]);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"joint-degree matrix realization toolkit"};
    app.fallthrough();

    std::string output = "-";
    std::string format;
    std::uint64_t seed = 0;
    app.add_option("--output", output, "output file, - for stdout");
    app.add_option("--format", format, "graph output format: jdm or dot (env JDM_FORMAT)");
    app.add_option("--seed", seed, "random seed");

    std::string instance_path = "-", graph_path = "-", from_path, to_path;
    std::string method = "balanced", classes_mode;
    std::uint64_t steps = 0, chains = 1;
    int cap = 10;
    bool histogram = false;

    auto* c_check = app.add_subcommand("check", "report feasibility of an instance");
    c_check->add_option("--instance", instance_path, "instance document, - for stdin");

    auto* c_realize = app.add_subcommand("realize", "construct a realization");
    c_realize->add_option("--instance", instance_path, "instance document");
    c_realize->add_option("--method", method, "simple or balanced")
        ->check(CLI::IsMember({"simple", "balanced"}));

    auto* c_conn = app.add_subcommand("realize-connected",
                                      "construct a connected realization or a certificate");
    c_conn->add_option("--instance", instance_path, "instance document");

    auto* c_star = app.add_subcommand("realize-star", "realize an instance with wildcard entries");
    c_star->add_option("--instance", instance_path, "instance document");

    auto* c_enum = app.add_subcommand("enumerate", "list every realization of a small instance");
    c_enum->add_option("--instance", instance_path, "instance document");
    c_enum->add_option("--cap", cap, "refuse instances with more vertices than this");

    auto* c_sample = app.add_subcommand("sample", "run the edge-switch chain from a graph");
    c_sample->add_option("--graph", graph_path, "start graph document");
    c_sample->add_option("--steps", steps, "number of chain steps")->required();
    c_sample->add_option("--chains", chains, "independent chains (seeds seed..seed+n-1)");
    c_sample->add_flag("--histogram", histogram, "emit per-state visit counts");

    auto* c_path = app.add_subcommand("switch-path", "legal switches turning one graph into another");
    c_path->add_option("--from", from_path, "start graph document")->required();
    c_path->add_option("--to", to_path, "target graph document")->required();

    auto* c_verify = app.add_subcommand("verify", "check a graph against an instance");
    c_verify->add_option("--graph", graph_path, "graph document");
    c_verify->add_option("--instance", instance_path, "instance document");

    auto* c_extract = app.add_subcommand("extract", "read the joint-degree data off a graph");
    c_extract->add_option("--graph", graph_path, "graph document");
    c_extract->add_option("--classes", classes_mode, "\"by-degree\" to regroup vertices by degree");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInfeasible;
    }

    if (format.empty()) {
        const char* env = std::getenv("JDM_FORMAT");
        format = env ? env : "jdm";
    }

    try {
        if (c_check->parsed()) {
            const jdm::ParsedInstance doc = jdm::parse_instance(read_input(instance_path));
            std::ostringstream out;
            bool ok = true;
            if (doc.exact()) {
                const jdm::JdmInstance inst = doc.star.as_exact();
                const bool df = jdm::check_degree_feasibility(inst);
                const bool mf = jdm::check_matrix_feasibility(inst);
                out << "degree feasibility: " << (df ? "ok" : "violated") << "\n";
                out << "matrix feasibility: " << (mf ? "ok" : "violated") << "\n";
                ok = df && mf;
                if (!ok) {
                    try {
                        jdm::require_feasible(inst);
                    } catch (const jdm::feasibility_error& e) {
                        out << "detail: " << e.what() << "\n";
                    }
                }
            } else {
                out << "matrix has wildcard entries; checking exact entries\n";
                if (auto reason = jdm::star_infeasibility(doc.star)) {
                    out << "exact entries: violated\ndetail: " << *reason << "\n";
                    ok = false;
                } else {
                    out << "exact entries: ok\n";
                }
            }
            write_output(output, out.str());
            return ok ? kExitOk : kExitInfeasible;
        }

        if (c_realize->parsed()) {
            const jdm::ParsedInstance doc = jdm::parse_instance(read_input(instance_path));
            const jdm::JdmInstance inst = doc.star.as_exact();
            const jdm::LabeledGraph g =
                method == "simple" ? jdm::simple_realize(inst) : jdm::balanced_realize(inst);
            write_output(output, jdm::emit_graph(g, doc.names, format));
            return kExitOk;
        }

        if (c_conn->parsed()) {
            const jdm::ParsedInstance doc = jdm::parse_instance(read_input(instance_path));
            const jdm::JdmInstance inst = doc.star.as_exact();
            const auto result = jdm::realize_connected(inst);
            if (std::holds_alternative<jdm::Certificate>(result)) {
                write_output(output,
                             jdm::certificate_json(inst, std::get<jdm::Certificate>(result), doc.names));
                return kExitCertificate;
            }
            write_output(output, jdm::emit_graph(std::get<jdm::LabeledGraph>(result), doc.names, format));
            return kExitOk;
        }

        if (c_star->parsed()) {
            const jdm::ParsedInstance doc = jdm::parse_instance(read_input(instance_path));
            const jdm::StarRealizeResult r = jdm::realize_star(doc.star);
            if (r.status != jdm::StarRealizeResult::Status::realized) {
                std::cerr << (r.status == jdm::StarRealizeResult::Status::infeasible
                                  ? "infeasible: "
                                  : "not realized: ")
                          << r.reason << "\n";
                return kExitInfeasible;
            }
            write_output(output, jdm::emit_graph(*r.graph, doc.names, format));
            return kExitOk;
        }

        if (c_enum->parsed()) {
            const jdm::ParsedInstance doc = jdm::parse_instance(read_input(instance_path));
            const jdm::JdmInstance inst = doc.star.as_exact();
            const auto omega = jdm::enumerate_omega(inst, cap);
            std::ostringstream out;
            out << "count " << omega.size() << "\n";
            for (const auto& g : omega) out << jdm::edge_list_line(g, doc.names) << "\n";
            write_output(output, out.str());
            return kExitOk;
        }

        if (c_sample->parsed()) {
            const jdm::GraphDocument doc = jdm::parse_graph(read_input(graph_path));
            const jdm::JdmSummary summary = jdm::extract_jdm(doc.graph);
            if (!summary.class_regular())
                throw jdm::validation_error("start graph is not class-regular");
            const jdm::JdmInstance inst = summary.to_instance(doc.graph.class_sizes());
            if (chains < 1) throw jdm::validation_error("--chains must be at least 1");
            std::vector<std::string> meta;
            jdm::VisitHistogram merged;
            jdm::ChainRun last;
            for (std::uint64_t c = 0; c < chains; ++c) {
                jdm::ChainRun run = jdm::run_chain(doc.graph, inst, steps, seed + c, histogram);
                meta.push_back("meta " + jdm::chain_meta_json(run));
                for (const auto& [key, count] : run.histogram) merged[key] += count;
                if (c == 0) last = std::move(run);
            }
            if (histogram)
                for (const auto& [key, count] : merged) {
                    std::string line = "visit " + std::to_string(count) + " ";
                    if (key.empty()) line += "-";
                    for (std::size_t i = 0; i < key.size(); ++i) {
                        if (i) line += ",";
                        line += jdm::vertex_label(doc.graph, doc.names, key[i].first) + "-" +
                                jdm::vertex_label(doc.graph, doc.names, key[i].second);
                    }
                    meta.push_back(line);
                }
            write_output(output, jdm::emit_graph(last.final_graph, doc.names, format, meta));
            return kExitOk;
        }

        if (c_path->parsed()) {
            const jdm::GraphDocument from = jdm::parse_graph(read_input(from_path));
            const jdm::GraphDocument to = jdm::parse_graph(read_input(to_path));
            const auto moves = jdm::switch_path(from.graph, to.graph);
            std::ostringstream out;
            out << "moves " << moves.size() << "\n";
            for (const auto& m : moves) out << move_line(from.graph, from.names, m) << "\n";
            write_output(output, out.str());
            return kExitOk;
        }

        if (c_verify->parsed()) {
            const jdm::GraphDocument doc = jdm::parse_graph(read_input(graph_path));
            const jdm::ParsedInstance idoc = jdm::parse_instance(read_input(instance_path));
            const bool ok = jdm::validate_realization(doc.graph, idoc.star.as_exact());
            write_output(output, ok ? "valid realization\n" : "not a realization of the instance\n");
            return ok ? kExitOk : kExitInfeasible;
        }

        if (c_extract->parsed()) {
            jdm::GraphDocument doc = jdm::parse_graph(read_input(graph_path));
            if (classes_mode == "by-degree")
                doc = regroup_by_degree(doc.graph);
            else if (!classes_mode.empty())
                throw jdm::validation_error("unknown --classes mode \"" + classes_mode + "\"");
            const jdm::JdmSummary summary = jdm::extract_jdm(doc.graph);
            if (!summary.class_regular())
                throw jdm::validation_error(
                    "graph is not class-regular; rerun with --classes by-degree");
            const jdm::JdmInstance inst = summary.to_instance(doc.graph.class_sizes());
            jdm::StarInstance star{inst.class_sizes, inst.class_degrees, inst.matrix};
            write_output(output, jdm::emit_instance(star, doc.names));
            return kExitOk;
        }
    } catch (const jdm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    }
    return kExitInfeasible;
}
