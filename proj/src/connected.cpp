#include "jdm/connected.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "jdm/realize.hpp"

namespace jdm {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

void validate_contracted(const ContractedInstance& c) {
    const int k = c.class_count();
    if (k == 0) throw validation_error("contracted instance needs at least one class");
    if (static_cast<int>(c.matrix.size()) != k)
        throw validation_error("contracted matrix is not k x k");
    for (int i = 0; i < k; ++i) {
        if (c.sizes[i] < 1) throw validation_error("contracted class size must be positive");
        if (static_cast<int>(c.matrix[i].size()) != k)
            throw validation_error("contracted matrix is not k x k");
        if (c.matrix[i][i] != 0) throw validation_error("contracted diagonal must be zero");
        for (int j = 0; j < k; ++j) {
            if (c.matrix[i][j] < 0) throw validation_error("contracted matrix entry is negative");
            if (c.matrix[i][j] != c.matrix[j][i])
                throw validation_error("contracted matrix is asymmetric");
            if (c.matrix[i][j] > static_cast<long long>(c.sizes[i]) * c.sizes[j])
                throw validation_error("contracted matrix entry exceeds the size cap");
        }
    }
}

// Working state of the tree construction. Descending a recursion level
// removes whole classes (and every edge touching them) from the graph; the
// removed pieces sit on a frame stack and are restored verbatim when the
// level is popped. All removed edges have a class pair involving a removed
// class, so quota bookkeeping on the working graph alone stays exact.
struct TreeSearch {
    const ContractedInstance& c;
    LabeledGraph g;
    std::vector<char> active;
    std::vector<std::vector<long long>> used;
    struct Frame {
        std::vector<int> classes;
        std::vector<std::pair<int, int>> edges;
    };
    std::vector<Frame> frames;
    int k, total;

    // recomputed each iteration
    std::vector<int> comp;
    std::vector<char> on_cycle;
    std::vector<std::pair<int, int>> cyc_edges;
    std::vector<char> class_in_p, class_in_c;
    bool p_nonempty = false, cp_overlap = false;

    explicit TreeSearch(const ContractedInstance& ci)
        : c(ci), g(ci.sizes), active(ci.class_count(), 1),
          used(ci.class_count(), std::vector<long long>(ci.class_count(), 0)),
          k(ci.class_count()), total(ci.total()) {}

    bool quota_open(int a, int b) const {
        const int ca = g.class_of(a), cb = g.class_of(b);
        return used[ca][cb] < c.matrix[ca][cb];
    }
    void count_edge(int a, int b, long long delta) {
        const int ca = g.class_of(a), cb = g.class_of(b);
        used[ca][cb] += delta;
        if (ca != cb) used[cb][ca] += delta;
    }
    void add(int a, int b) {
        g.add_edge(a, b);
        count_edge(a, b, +1);
    }
    void remove(int a, int b) {
        g.remove_edge(a, b);
        count_edge(a, b, -1);
    }

    void refresh() {
        comp.assign(g.vertex_count(), -1);
        int next = 0;
        std::vector<int> stack;
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (!active[g.class_of(s)] || comp[s] != -1) continue;
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
        cyc_edges = cycle_edges(g);  // inactive vertices are isolated, so this is the active subgraph
        on_cycle.assign(g.vertex_count(), 0);
        for (auto [a, b] : cyc_edges) on_cycle[a] = on_cycle[b] = 1;

        class_in_p.assign(k, 0);
        class_in_c.assign(k, 0);
        std::vector<int> seen_comp(k, -2);
        for (int v = 0; v < g.vertex_count(); ++v) {
            const int cl = g.class_of(v);
            if (!active[cl]) continue;
            if (on_cycle[v]) class_in_c[cl] = 1;
            if (seen_comp[cl] == -2)
                seen_comp[cl] = comp[v];
            else if (seen_comp[cl] != comp[v])
                class_in_p[cl] = 1;
        }
        p_nonempty = cp_overlap = false;
        for (int cl = 0; cl < k; ++cl) {
            if (class_in_p[cl]) p_nonempty = true;
            if (class_in_p[cl] && class_in_c[cl]) cp_overlap = true;
        }
    }

    void pop_frame() {
        if (frames.empty()) return;
        Frame f = std::move(frames.back());
        frames.pop_back();
        for (int cl : f.classes) active[cl] = 1;
        for (auto [a, b] : f.edges) add(a, b);
    }

    bool try_case1() {
        for (int a = 0; a < g.vertex_count(); ++a) {
            if (!active[g.class_of(a)]) continue;
            for (int b = a + 1; b < g.vertex_count(); ++b) {
                if (!active[g.class_of(b)]) continue;
                if (comp[a] == comp[b] || g.has_edge(a, b) || !quota_open(a, b)) continue;
                add(a, b);
                if (cyc_edges.empty())
                    throw internal_error("tree search: case 1 found no cycle edge to drop");
                remove(cyc_edges.front().first, cyc_edges.front().second);
                pop_frame();
                return true;
            }
        }
        return false;
    }

    bool try_case2() {
        if (!cp_overlap) return false;
        for (int cl = 0; cl < k; ++cl) {
            if (!class_in_p[cl] || !class_in_c[cl]) continue;
            int u = -1;
            for (int v = g.class_begin(cl); v < g.class_end(cl); ++v)
                if (on_cycle[v]) {
                    u = v;
                    break;
                }
            int v = -1;
            for (int w = g.class_begin(cl); w < g.class_end(cl); ++w)
                if (comp[w] != comp[u]) {
                    v = w;
                    break;
                }
            if (u < 0 || v < 0) throw internal_error("tree search: case 2 lost its witnesses");
            int x = -1;
            for (int w : g.neighbors(u)) {
                auto e = std::minmax(u, w);
                if (std::binary_search(cyc_edges.begin(), cyc_edges.end(),
                                       std::make_pair(e.first, e.second))) {
                    x = w;
                    break;
                }
            }
            if (x < 0) throw internal_error("tree search: case 2 vertex is not on a cycle");
            const int y = g.degree(v) > 0 ? g.neighbors(v).front() : -1;
            remove(u, x);
            if (y >= 0) remove(v, y);
            add(x, v);
            if (y >= 0) add(y, u);
            pop_frame();
            return true;
        }
        return false;
    }

    Certificate case3_certificate() const {
        // Classes grouped by the component that contains them, removed
        // classes left outside F. With P empty no class can straddle two
        // components; assert rather than assume.
        std::map<int, std::vector<int>> by_comp;
        Certificate cert;
        for (int cl = 0; cl < k; ++cl) {
            if (!active[cl]) continue;
            const int c0 = comp[g.class_begin(cl)];
            for (int v = g.class_begin(cl); v < g.class_end(cl); ++v)
                if (comp[v] != c0)
                    throw internal_error("tree search: class straddles components with P empty");
            by_comp[c0].push_back(cl);
            cert.f_classes.push_back(cl);
        }
        for (auto& [cid, cls] : by_comp) cert.groups.push_back(cls);
        return cert;
    }

    void do_case4() {
        Frame f;
        for (int cl = 0; cl < k; ++cl)
            if (class_in_p[cl]) f.classes.push_back(cl);
        for (auto [a, b] : g.edges())
            if (class_in_p[g.class_of(a)] || class_in_p[g.class_of(b)]) f.edges.push_back({a, b});
        for (auto [a, b] : f.edges) remove(a, b);
        for (int cl : f.classes) active[cl] = 0;
        frames.push_back(std::move(f));
    }

    std::size_t held_edges() const {
        std::size_t held = g.edge_count();
        for (const auto& f : frames) held += f.edges.size();
        return held;
    }
};

// All quotas filled to the brim, in lexicographic pair order. Used for the
// certificate when fewer than |V~|-1 valid edges exist at all.
LabeledGraph saturate(const ContractedInstance& c) {
    LabeledGraph g(c.sizes);
    std::vector<std::vector<long long>> used(c.class_count(),
                                             std::vector<long long>(c.class_count(), 0));
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b) {
            const int ca = g.class_of(a), cb = g.class_of(b);
            if (ca == cb || used[ca][cb] >= c.matrix[ca][cb]) continue;
            g.add_edge(a, b);
            used[ca][cb] += 1;
            used[cb][ca] += 1;
        }
    return g;
}

}  // namespace

int ContractedInstance::total() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

ContractedInstance contract(const JdmInstance& inst) {
    inst.validate();
    const int k = inst.class_count();
    ContractedInstance c;
    c.sizes.resize(k);
    for (int i = 0; i < k; ++i)
        c.sizes[i] = std::max<long long>(1, inst.class_sizes[i] - inst.matrix[i][i]);
    c.matrix.assign(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                c.matrix[i][j] =
                    std::min(static_cast<long long>(c.sizes[i]) * c.sizes[j], inst.matrix[i][j]);
    return c;
}

std::variant<LabeledGraph, Certificate> valid_tree_construction(const ContractedInstance& c) {
    validate_contracted(c);
    const int k = c.class_count();
    const int total = c.total();

    long long capacity = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) capacity += c.matrix[i][j];

    if (capacity < total - 1) {
        // Not even |V~|-1 valid edges exist. Group whole classes by the
        // components of the fully saturated graph when that is possible;
        // otherwise the empty grouping already certifies the deficit.
        const LabeledGraph sat = saturate(c);
        const auto comp = component_ids(sat);
        Certificate cert;
        std::map<int, std::vector<int>> by_comp;
        bool whole = true;
        for (int cl = 0; cl < k && whole; ++cl) {
            const int c0 = comp[sat.class_begin(cl)];
            for (int v = sat.class_begin(cl); v < sat.class_end(cl); ++v)
                if (comp[v] != c0) {
                    whole = false;
                    break;
                }
            if (whole) by_comp[c0].push_back(cl);
        }
        if (whole) {
            for (int cl = 0; cl < k; ++cl) cert.f_classes.push_back(cl);
            for (auto& [cid, cls] : by_comp) cert.groups.push_back(cls);
        }
        return cert;
    }

    TreeSearch s(c);
    if (total == 1) return s.g;

    {
        // initial graph: greedy spanning scan, then fill up to |V~|-1 edges
        UnionFind uf(total);
        std::size_t added = 0;
        for (int a = 0; a < total && added + 1 < static_cast<std::size_t>(total); ++a)
            for (int b = a + 1; b < total && added + 1 < static_cast<std::size_t>(total); ++b)
                if (s.quota_open(a, b) && uf.find(a) != uf.find(b)) {
                    s.add(a, b);
                    uf.unite(a, b);
                    ++added;
                }
        for (int a = 0; a < total && added + 1 < static_cast<std::size_t>(total); ++a)
            for (int b = a + 1; b < total && added + 1 < static_cast<std::size_t>(total); ++b)
                if (!s.g.has_edge(a, b) && s.quota_open(a, b)) {
                    s.add(a, b);
                    ++added;
                }
        if (added + 1 != static_cast<std::size_t>(total))
            throw internal_error("tree search: could not place the initial edges");
    }

    const long long iter_bound = 2LL * k * total;
    long long iters = 0;
    for (;;) {
        if (s.held_edges() + 1 != static_cast<std::size_t>(total))
            throw internal_error("tree search: edge count invariant broken");
        if (s.frames.empty() && is_connected(s.g)) break;
        if (++iters > iter_bound) throw internal_error("tree search: iteration bound exceeded");
        s.refresh();
        if (s.try_case1()) continue;
        if (s.try_case2()) continue;
        if (!s.p_nonempty) return s.case3_certificate();
        s.do_case4();
    }
    if (!is_tree(s.g)) throw internal_error("tree search: output is not a tree");
    return s.g;
}

LabeledGraph expand_tree(const LabeledGraph& tree, const JdmInstance& inst) {
    inst.validate();
    const ContractedInstance c = contract(inst);
    if (tree.class_sizes() != c.sizes)
        throw validation_error("tree does not live on the contracted vertex set");
    if (!is_tree(tree)) throw validation_error("expand_tree needs a tree");
    const int k = inst.class_count();
    {
        const JdmSummary s = extract_jdm(tree);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (s.realized[i][j] > c.matrix[i][j])
                    throw validation_error("tree violates the contracted upper bounds");
    }
    LabeledGraph out = LabeledGraph::empty_like(inst);
    for (auto [u, v] : tree.edges()) {
        const auto iu = tree.id_of(u), iv = tree.id_of(v);
        out.add_edge(out.class_begin(iu.cls) + iu.off, out.class_begin(iv.cls) + iv.off);
    }
    for (int i = 0; i < k; ++i) {
        int prev = out.class_begin(i);
        for (int q = c.sizes[i]; q < inst.class_sizes[i]; ++q) {
            out.add_edge(prev, out.class_begin(i) + q);
            prev = out.class_begin(i) + q;
        }
    }
    if (!is_tree(out)) throw internal_error("expand_tree produced a non-tree");
    return out;
}

namespace {

// Neighbor of u on the unique u-v tree path.
int path_neighbor(const LabeledGraph& t, int u, int v) {
    std::vector<int> parent(t.vertex_count(), -1);
    std::vector<int> queue{v};
    parent[v] = v;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int w = queue[h];
        if (w == u) break;
        for (int x : t.neighbors(w))
            if (parent[x] == -1) {
                parent[x] = w;
                queue.push_back(x);
            }
    }
    if (parent[u] == -1) throw internal_error("path_neighbor: vertices not connected");
    return parent[u];
}

}  // namespace

LabeledGraph balance_tree(LabeledGraph t, const JdmInstance& inst) {
    inst.validate();
    if (t.class_sizes() != inst.class_sizes)
        throw validation_error("tree does not live on the instance vertex set");
    if (!is_tree(t)) throw validation_error("balance_tree needs a spanning tree");
    {
        const JdmSummary s = extract_jdm(t);
        const int k = inst.class_count();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (s.realized[i][j] > inst.matrix[i][j])
                    throw validation_error("tree violates the instance upper bounds");
    }
    for (int cl = 0; cl < t.class_count(); ++cl) {
        const int begin = t.class_begin(cl), end = t.class_end(cl);
        const int n_i = end - begin;
        long long sum = 0;
        for (int v = begin; v < end; ++v) sum += t.degree(v);
        const long long lo = sum / n_i;
        const long long hi = (sum + n_i - 1) / n_i;
        int sessions = 0;
        for (;;) {
            int u = begin, v = begin;
            for (int w = begin; w < end; ++w) {
                if (t.degree(w) > t.degree(u)) u = w;
                if (t.degree(w) < t.degree(v)) v = w;
            }
            if (t.degree(u) - t.degree(v) <= 1) break;
            if (++sessions > 2 * n_i)
                throw internal_error("balance_tree: session bound exceeded");
            while ((t.degree(u) > hi || t.degree(v) < lo) && t.degree(u) - t.degree(v) >= 2) {
                const int keep = path_neighbor(t, u, v);
                int moved = -1;
                for (int w : t.neighbors(u))
                    if (w != keep) {
                        moved = w;
                        break;
                    }
                if (moved < 0) throw internal_error("balance_tree: no movable neighbor");
                t.remove_edge(u, moved);
                t.add_edge(v, moved);
            }
        }
    }
    if (!is_tree(t)) throw internal_error("balance_tree broke the tree");
    return t;
}

std::variant<LabeledGraph, Certificate> realize_connected(const JdmInstance& inst) {
    require_feasible(inst);
    const ContractedInstance c = contract(inst);
    auto t = valid_tree_construction(c);
    if (std::holds_alternative<Certificate>(t)) return std::get<Certificate>(t);
    LabeledGraph tree = expand_tree(std::get<LabeledGraph>(t), inst);
    tree = balance_tree(std::move(tree), inst);
    LabeledGraph g = balanced_realize(inst, std::move(tree));
    if (!is_connected(g)) throw internal_error("realize_connected lost connectivity");
    return g;
}

CertificateCheck verify_certificate_detail(const JdmInstance& inst, const Certificate& cert) {
    inst.validate();
    const ContractedInstance c = contract(inst);
    const int k = c.class_count();

    std::set<int> f(cert.f_classes.begin(), cert.f_classes.end());
    if (f.size() != cert.f_classes.size())
        throw validation_error("certificate: F has repeated classes");
    for (int cl : f)
        if (cl < 0 || cl >= k) throw validation_error("certificate: class index out of range");
    std::set<int> covered;
    for (const auto& grp : cert.groups) {
        if (grp.empty()) throw validation_error("certificate: empty group");
        for (int cl : grp) {
            if (!f.count(cl)) throw validation_error("certificate: group member outside F");
            if (!covered.insert(cl).second)
                throw validation_error("certificate: class in two groups");
        }
    }
    if (covered.size() != f.size())
        throw validation_error("certificate: groups do not cover F");

    CertificateCheck out;
    const int lambda = static_cast<int>(cert.groups.size());
    std::vector<int> outside;
    for (int cl = 0; cl < k; ++cl)
        if (!f.count(cl)) outside.push_back(cl);

    // vertex ids: 0..lambda-1 for the groups, then one per outside class
    const int nv = lambda + static_cast<int>(outside.size());
    for (int i = 0; i < lambda; ++i) out.vertices.push_back("a" + std::to_string(i));
    for (int cl : outside) out.vertices.push_back("u" + std::to_string(cl));
    UnionFind uf(nv);

    auto add_edge = [&](int a, int b, long long w) {
        out.edges.push_back({out.vertices[a], out.vertices[b], w});
        out.weight_sum += w;
        uf.unite(a, b);
    };

    for (int i = 0; i < lambda; ++i)
        for (int j = i + 1; j < lambda; ++j) {
            bool linked = false;
            for (int x : cert.groups[i])
                for (int y : cert.groups[j])
                    if (c.matrix[x][y] > 0) linked = true;
            if (linked) add_edge(i, j, 1);
        }
    for (int i = 0; i < lambda; ++i)
        for (std::size_t jo = 0; jo < outside.size(); ++jo) {
            const int j = outside[jo];
            long long total = 0;
            bool linked = false;
            for (int x : cert.groups[i]) {
                total += c.matrix[x][j];
                if (c.matrix[x][j] > 0) linked = true;
            }
            if (linked)
                add_edge(i, lambda + static_cast<int>(jo),
                         std::min(static_cast<long long>(c.sizes[j]), total));
        }
    for (std::size_t io = 0; io < outside.size(); ++io)
        for (std::size_t jo = io + 1; jo < outside.size(); ++jo)
            if (c.matrix[outside[io]][outside[jo]] > 0)
                add_edge(lambda + static_cast<int>(io), lambda + static_cast<int>(jo),
                         c.matrix[outside[io]][outside[jo]]);

    int roots = 0;
    for (int v = 0; v < nv; ++v)
        if (uf.find(v) == v) ++roots;
    out.graph_connected = roots <= 1;

    out.requirement = lambda - 1;
    for (int cl : outside) out.requirement += c.sizes[cl];
    out.refutes = !out.graph_connected || out.weight_sum < out.requirement;
    return out;
}

bool verify_certificate(const JdmInstance& inst, const Certificate& cert) {
    return verify_certificate_detail(inst, cert).refutes;
}

}  // namespace jdm
