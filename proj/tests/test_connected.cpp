#include <doctest.h>

#include <algorithm>

#include "jdm/connected.hpp"
#include "jdm/omega.hpp"
#include "jdm/realize.hpp"
#include "testutil.hpp"

using namespace jdm;
using testutil::make_instance;

namespace {

bool omega_has_connected(const JdmInstance& inst) {
    for (const auto& g : testutil::naive_omega(inst))
        if (is_connected(g)) return true;
    return false;
}

}  // namespace

TEST_SUITE_BEGIN("connected");

TEST_CASE("contraction formulas") {
    const ContractedInstance a = contract(make_instance({3}, {2}, {{3}}));
    CHECK(a.sizes == std::vector<int>{1});
    CHECK(a.matrix == std::vector<std::vector<long long>>{{0}});

    const ContractedInstance b = contract(make_instance({3, 3}, {2, 2}, {{3, 0}, {0, 3}}));
    CHECK(b.sizes == std::vector<int>{1, 1});
    CHECK(b.matrix == std::vector<std::vector<long long>>{{0, 0}, {0, 0}});

    const ContractedInstance c = contract(make_instance({2, 2}, {2, 1}, {{1, 2}, {2, 0}}));
    CHECK(c.sizes == std::vector<int>{1, 2});
    CHECK(c.matrix[0][1] == 2);
}

TEST_CASE("valid tree construction on a small cross instance") {
    const ContractedInstance c = contract(make_instance({2, 2}, {2, 1}, {{1, 2}, {2, 0}}));
    const auto result = valid_tree_construction(c);
    REQUIRE(std::holds_alternative<LabeledGraph>(result));
    const LabeledGraph& t = std::get<LabeledGraph>(result);
    CHECK(is_tree(t));
    CHECK(t.edge_count() == 2);
    const JdmSummary s = extract_jdm(t);
    CHECK(s.realized[0][1] <= c.matrix[0][1]);
    CHECK(s.realized[0][0] == 0);
    CHECK(s.realized[1][1] == 0);
}

TEST_CASE("valid tree construction emits the two-triangle certificate") {
    const ContractedInstance c = contract(make_instance({3, 3}, {2, 2}, {{3, 0}, {0, 3}}));
    const auto result = valid_tree_construction(c);
    REQUIRE(std::holds_alternative<Certificate>(result));
    const Certificate& cert = std::get<Certificate>(result);
    CHECK(cert.f_classes == std::vector<int>{0, 1});
    CHECK(cert.groups == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("valid tree construction on a single contracted vertex") {
    const ContractedInstance c = contract(make_instance({3}, {2}, {{3}}));
    const auto result = valid_tree_construction(c);
    REQUIRE(std::holds_alternative<LabeledGraph>(result));
    CHECK(std::get<LabeledGraph>(result).vertex_count() == 1);
    CHECK(std::get<LabeledGraph>(result).edge_count() == 0);
}

TEST_CASE("expand_tree grows a path inside one class") {
    const JdmInstance inst = make_instance({3}, {2}, {{3}});
    const LabeledGraph single(contract(inst).sizes);
    const LabeledGraph t = expand_tree(single, inst);
    CHECK(t.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("expand_tree keeps pair counts under the matrix") {
    // A holds 4 vertices with 2 internal edges allowed, B is a hub class
    const JdmInstance inst = make_instance({4, 1}, {2, 4}, {{2, 4}, {4, 0}});
    REQUIRE(check_degree_feasibility(inst));
    const ContractedInstance c = contract(inst);
    REQUIRE(c.sizes == std::vector<int>{2, 1});
    LabeledGraph tilde(c.sizes);
    tilde.add_edge(0, 2);
    tilde.add_edge(1, 2);
    const LabeledGraph t = expand_tree(tilde, inst);
    CHECK(is_tree(t));
    LabeledGraph want({4, 1});
    want.add_edge(0, 4);
    want.add_edge(1, 4);
    want.add_edge(0, 2);
    want.add_edge(2, 3);
    CHECK(t == want);
    const JdmSummary s = extract_jdm(t);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(s.realized[i][j] <= inst.matrix[i][j]);
}

TEST_CASE("expand_tree over random extracted instances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const LabeledGraph base = testutil::random_degree_classed_graph(10, 0.45, 400 + seed);
        const JdmInstance inst = extract_jdm(base).to_instance(base.class_sizes());
        const auto result = valid_tree_construction(contract(inst));
        if (!std::holds_alternative<LabeledGraph>(result)) continue;
        const LabeledGraph t = expand_tree(std::get<LabeledGraph>(result), inst);
        CHECK(is_tree(t));
        const JdmSummary s = extract_jdm(t);
        for (int i = 0; i < inst.class_count(); ++i)
            for (int j = 0; j < inst.class_count(); ++j)
                CHECK(s.realized[i][j] <= inst.matrix[i][j]);
    }
}

TEST_CASE("balance_tree turns a star into a path") {
    const JdmInstance inst = make_instance({4}, {2}, {{4}});
    LabeledGraph star({4});
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    const LabeledGraph t = balance_tree(star, inst);
    CHECK(is_tree(t));
    std::vector<int> degrees;
    for (int v = 0; v < 4; ++v) degrees.push_back(t.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("balance_tree leaves a balanced path alone") {
    const JdmInstance inst = make_instance({4}, {2}, {{4}});
    LabeledGraph path({4});
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(balance_tree(path, inst) == path);
}

TEST_CASE("balance_tree preserves cross-pair counts") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const LabeledGraph base = testutil::random_degree_classed_graph(11, 0.4, 700 + seed);
        const JdmInstance inst = extract_jdm(base).to_instance(base.class_sizes());
        const auto result = valid_tree_construction(contract(inst));
        if (!std::holds_alternative<LabeledGraph>(result)) continue;
        const LabeledGraph t = expand_tree(std::get<LabeledGraph>(result), inst);
        const auto before = extract_jdm(t).realized;
        const LabeledGraph b = balance_tree(t, inst);
        CHECK(extract_jdm(b).realized == before);
        CHECK(is_tree(b));
        const JdmSummary s = extract_jdm(b);
        for (const auto& ds : s.class_degrees) CHECK(ds.back() - ds.front() <= 1);
    }
}

TEST_CASE("realize_connected on the triangle") {
    const auto result = realize_connected(make_instance({3}, {2}, {{3}}));
    REQUIRE(std::holds_alternative<LabeledGraph>(result));
    const LabeledGraph& g = std::get<LabeledGraph>(result);
    CHECK(is_connected(g));
    CHECK(g.edge_count() == 3);
}

TEST_CASE("realize_connected emits a verifiable certificate for two triangles") {
    const JdmInstance inst = make_instance({3, 3}, {2, 2}, {{3, 0}, {0, 3}});
    // graphically realizable, but never connected
    const auto omega = testutil::naive_omega(inst);
    REQUIRE(omega.size() == 1);
    CHECK_FALSE(is_connected(omega.front()));
    const auto result = realize_connected(inst);
    REQUIRE(std::holds_alternative<Certificate>(result));
    CHECK(verify_certificate(inst, std::get<Certificate>(result)));
}

TEST_CASE("realize_connected on a feasible cross instance") {
    const JdmInstance inst = make_instance({2, 2}, {2, 1}, {{1, 2}, {2, 0}});
    REQUIRE(omega_has_connected(inst));
    const auto result = realize_connected(inst);
    REQUIRE(std::holds_alternative<LabeledGraph>(result));
    CHECK(is_connected(std::get<LabeledGraph>(result)));
    CHECK(validate_realization(std::get<LabeledGraph>(result), inst));
}

TEST_CASE("realize_connected rejects infeasible instances") {
    CHECK_THROWS_AS(realize_connected(make_instance({3}, {1}, {{2}})), feasibility_error);
}

TEST_CASE("certificate evaluation matches the worked examples") {
    const JdmInstance two_triangles = make_instance({3, 3}, {2, 2}, {{3, 0}, {0, 3}});
    const Certificate split{{0, 1}, {{0}, {1}}};
    const CertificateCheck check = verify_certificate_detail(two_triangles, split);
    CHECK(check.weight_sum == 0);
    CHECK(check.requirement == 1);
    CHECK_FALSE(check.graph_connected);
    CHECK(check.refutes);

    const JdmInstance triangle = make_instance({3}, {2}, {{3}});
    const Certificate whole{{0}, {{0}}};
    const CertificateCheck tri = verify_certificate_detail(triangle, whole);
    CHECK(tri.weight_sum == 0);
    CHECK(tri.requirement == 0);
    CHECK(tri.graph_connected);
    CHECK_FALSE(tri.refutes);

    const JdmInstance cross = make_instance({2, 2}, {2, 1}, {{1, 2}, {2, 0}});
    const Certificate merged{{0, 1}, {{0, 1}}};
    CHECK_FALSE(verify_certificate(cross, merged));
}

TEST_CASE("malformed certificates are rejected") {
    const JdmInstance inst = make_instance({2, 2}, {2, 1}, {{1, 2}, {2, 0}});
    CHECK_THROWS_AS(verify_certificate(inst, Certificate{{0, 0}, {{0}}}), validation_error);
    CHECK_THROWS_AS(verify_certificate(inst, Certificate{{5}, {{5}}}), validation_error);
    CHECK_THROWS_AS(verify_certificate(inst, Certificate{{0, 1}, {{0}}}), validation_error);
    CHECK_THROWS_AS(verify_certificate(inst, Certificate{{0}, {{0}, {}}}), validation_error);
    CHECK_THROWS_AS(verify_certificate(inst, Certificate{{0}, {{0}, {1}}}), validation_error);
}

TEST_CASE("small exhaustive soundness sweep") {
    // every one-class and a few two-class instances: the pipeline answer
    // must match brute force over omega
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d < n && d <= 3; ++d) {
            if ((n * d) % 2 != 0) continue;
            const JdmInstance inst = make_instance({n}, {d}, {{n * d / 2}});
            if (!check_matrix_feasibility(inst)) continue;
            const bool want = omega_has_connected(inst);
            const auto result = realize_connected(inst);
            if (want) {
                REQUIRE(std::holds_alternative<LabeledGraph>(result));
                CHECK(is_connected(std::get<LabeledGraph>(result)));
                CHECK(validate_realization(std::get<LabeledGraph>(result), inst));
            } else {
                REQUIRE(std::holds_alternative<Certificate>(result));
                CHECK(verify_certificate(inst, std::get<Certificate>(result)));
            }
        }
}

TEST_SUITE_END();
