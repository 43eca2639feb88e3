#include <doctest.h>

#include "jdm/graph.hpp"
#include "jdm/instance.hpp"
#include "testutil.hpp"

using namespace jdm;
using testutil::make_instance;

TEST_SUITE_BEGIN("core");

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(make_instance({}, {}, {}).validate(), validation_error);
    CHECK_THROWS_AS(make_instance({0}, {1}, {{0}}).validate(), validation_error);
    CHECK_THROWS_AS(make_instance({2}, {-1}, {{0}}).validate(), validation_error);
    CHECK_THROWS_AS(make_instance({2, 2}, {1, 1}, {{0, 1}, {2, 0}}).validate(), validation_error);
    CHECK_THROWS_AS(make_instance({2}, {1}, {{-1}}).validate(), validation_error);
    CHECK_THROWS_AS(make_instance({2, 2}, {1, 1}, {{0, 1}}).validate(), validation_error);
    CHECK_NOTHROW(make_instance({2, 2}, {2, 1}, {{1, 2}, {2, 0}}).validate());
}

TEST_CASE("degree feasibility") {
    CHECK(check_degree_feasibility(make_instance({3}, {2}, {{3}})));
    CHECK_FALSE(check_degree_feasibility(make_instance({3}, {1}, {{2}})));
    CHECK(check_degree_feasibility(make_instance({2, 2}, {2, 1}, {{1, 2}, {2, 0}})));
}

TEST_CASE("matrix feasibility") {
    CHECK(check_matrix_feasibility(make_instance({3}, {2}, {{3}})));
    CHECK_FALSE(check_matrix_feasibility(make_instance({3}, {2}, {{4}})));
    CHECK_FALSE(check_matrix_feasibility(make_instance({2, 2}, {2, 1}, {{0, 5}, {5, 0}})));
}

TEST_CASE("require_feasible names the condition") {
    CHECK_THROWS_WITH_AS(require_feasible(make_instance({3}, {1}, {{2}})),
                         doctest::Contains("degree feasibility"), feasibility_error);
    CHECK_THROWS_WITH_AS(require_feasible(make_instance({3}, {4}, {{6}})),
                         doctest::Contains("matrix feasibility"), feasibility_error);
}

TEST_CASE("graph basics") {
    LabeledGraph g({2, 2});
    CHECK(g.vertex_count() == 4);
    CHECK(g.class_of(0) == 0);
    CHECK(g.class_of(2) == 1);
    g.add_edge(2, 0);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.edge_count() == 1);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK_THROWS_AS(g.add_edge(0, 2), internal_error);
    CHECK_THROWS_AS(g.add_edge(1, 1), internal_error);
    CHECK_THROWS_AS(g.remove_edge(0, 1), internal_error);
    g.remove_edge(0, 2);
    CHECK(g.edge_count() == 0);

    CHECK(g.flat(VertexId{1, 0}) == 2);
    CHECK(g.id_of(3) == VertexId{1, 1});
    CHECK(VertexId{0, 1} < VertexId{1, 0});
}

TEST_CASE("connectivity helpers") {
    LabeledGraph g({5});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(component_count(g) == 3);
    CHECK_FALSE(is_connected(g));
    g.add_edge(3, 4);
    g.add_edge(2, 3);
    CHECK(is_connected(g));
    CHECK(is_tree(g));
    g.add_edge(0, 2);
    CHECK_FALSE(is_tree(g));
    CHECK(cycle_edges(g) == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("extract_jdm on a triangle") {
    LabeledGraph g({3});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    const JdmSummary s = extract_jdm(g);
    CHECK(s.realized == std::vector<std::vector<long long>>{{3}});
    CHECK(s.class_degrees == std::vector<std::vector<int>>{{2, 2, 2}});
    CHECK(s.class_regular());
    const JdmInstance inst = s.to_instance(g.class_sizes());
    CHECK(validate_realization(g, inst));
}

TEST_CASE("extract_jdm on K22 across two classes") {
    LabeledGraph g({2, 2});
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 4; ++b) g.add_edge(a, b);
    const JdmSummary s = extract_jdm(g);
    CHECK(s.realized == std::vector<std::vector<long long>>{{0, 4}, {4, 0}});
}

TEST_CASE("extract_jdm entries sum to the edge count") {
    const LabeledGraph g = testutil::random_graph({7, 6, 7}, 0.3, 17);
    const JdmSummary s = extract_jdm(g);
    long long sum = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) sum += s.realized[i][j];
    CHECK(sum == static_cast<long long>(g.edge_count()));
}

TEST_CASE("validate_realization") {
    const JdmInstance inst = make_instance({3}, {2}, {{3}});
    LabeledGraph triangle({3});
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);
    CHECK(validate_realization(triangle, inst));

    LabeledGraph path({3});
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(validate_realization(path, inst));

    CHECK_THROWS_AS(validate_realization(LabeledGraph({4}), inst), validation_error);
}

TEST_CASE("degree-classed random graphs extract to feasible instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const LabeledGraph g = testutil::random_degree_classed_graph(12, 0.3, seed);
        const JdmSummary s = extract_jdm(g);
        REQUIRE(s.class_regular());
        const JdmInstance inst = s.to_instance(g.class_sizes());
        CHECK(check_degree_feasibility(inst));
        CHECK(check_matrix_feasibility(inst));
        CHECK(validate_realization(g, inst));
    }
}

TEST_SUITE_END();
