#include "jdm/graph.hpp"

#include <algorithm>
#include <string>

namespace jdm {

LabeledGraph::LabeledGraph(std::vector<int> class_sizes) : class_sizes_(std::move(class_sizes)) {
    if (class_sizes_.empty()) throw validation_error("graph needs at least one class");
    class_start_.resize(class_sizes_.size());
    int at = 0;
    for (std::size_t c = 0; c < class_sizes_.size(); ++c) {
        if (class_sizes_[c] < 1)
            throw validation_error("class " + std::to_string(c) + " has non-positive size");
        class_start_[c] = at;
        at += class_sizes_[c];
        class_of_.insert(class_of_.end(), class_sizes_[c], static_cast<int>(c));
    }
    adj_.resize(at);
}

bool LabeledGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void LabeledGraph::add_edge(int u, int v) {
    if (u == v) throw internal_error("add_edge: self-loop at vertex " + std::to_string(u));
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v)
        throw internal_error("add_edge: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++edge_count_;
}

void LabeledGraph::remove_edge(int u, int v) {
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v)
        throw internal_error("remove_edge: missing edge " + std::to_string(u) + "-" + std::to_string(v));
    a.erase(it);
    auto& b = adj_[v];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
    --edge_count_;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool JdmSummary::class_regular() const {
    for (const auto& ds : class_degrees)
        if (!ds.empty() && ds.front() != ds.back()) return false;
    return true;
}

JdmInstance JdmSummary::to_instance(const std::vector<int>& class_sizes) const {
    if (!class_regular()) throw validation_error("graph is not class-regular");
    JdmInstance inst;
    inst.class_sizes = class_sizes;
    for (const auto& ds : class_degrees) inst.class_degrees.push_back(ds.empty() ? 0 : ds.front());
    inst.matrix = realized;
    inst.validate();
    return inst;
}

JdmSummary extract_jdm(const LabeledGraph& g) {
    const int k = g.class_count();
    JdmSummary s;
    s.class_degrees.resize(k);
    s.realized.assign(k, std::vector<long long>(k, 0));
    for (int v = 0; v < g.vertex_count(); ++v)
        s.class_degrees[g.class_of(v)].push_back(g.degree(v));
    for (auto& ds : s.class_degrees) std::sort(ds.begin(), ds.end());
    for (auto [u, v] : g.edges()) {
        const int cu = g.class_of(u), cv = g.class_of(v);
        s.realized[cu][cv] += 1;
        if (cu != cv) s.realized[cv][cu] += 1;
    }
    return s;
}

bool validate_realization(const LabeledGraph& g, const JdmInstance& inst) {
    inst.validate();
    if (g.class_sizes() != inst.class_sizes)
        throw validation_error("graph vertex set does not match the instance");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != inst.class_degrees[g.class_of(v)]) return false;
    const JdmSummary s = extract_jdm(g);
    return s.realized == inst.matrix;
}

std::vector<int> component_ids(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<int> stack;
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

int component_count(const LabeledGraph& g) {
    const auto comp = component_ids(g);
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool is_connected(const LabeledGraph& g) { return component_count(g) <= 1; }

bool is_tree(const LabeledGraph& g) {
    return is_connected(g) && g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count());
}

std::vector<std::pair<int, int>> cycle_edges(const LabeledGraph& g) {
    // Iterative bridge finding; an edge is on a cycle iff it is not a bridge.
    const int n = g.vertex_count();
    std::vector<int> tin(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> out;
    int timer = 0;
    struct Item {
        int v;
        int parent;
        std::size_t next;
        bool skipped_parent_edge;
    };
    std::vector<Item> st;
    for (int s = 0; s < n; ++s) {
        if (tin[s] != -1) continue;
        st.push_back({s, -1, 0, false});
        tin[s] = low[s] = timer++;
        while (!st.empty()) {
            Item& it = st.back();
            const auto& nb = g.neighbors(it.v);
            if (it.next < nb.size()) {
                int w = nb[it.next++];
                if (w == it.parent && !it.skipped_parent_edge) {
                    // one parallel-free tree edge back to the parent
                    it.skipped_parent_edge = true;
                    continue;
                }
                if (tin[w] == -1) {
                    tin[w] = low[w] = timer++;
                    st.push_back({w, it.v, 0, false});
                } else {
                    low[it.v] = std::min(low[it.v], tin[w]);
                    // a back edge to an ancestor always lies on a cycle
                    if (tin[w] < tin[it.v])
                        out.emplace_back(std::min(it.v, w), std::max(it.v, w));
                }
            } else {
                int v = it.v, p = it.parent;
                st.pop_back();
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] <= tin[p]) out.emplace_back(std::min(p, v), std::max(p, v));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace jdm
