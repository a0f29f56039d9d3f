#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "core/coexpr.hpp"
#include "core/gen.hpp"

using namespace copath;

TEST_CASE("random co-expressions are reproducible and well formed") {
    auto [e1, t1] = random_cograph(4, 8, 0.5, 7);
    auto [e2, t2] = random_cograph(4, 8, 0.5, 7);
    CHECK(to_string(e1) == to_string(e2));
    CHECK(t1.verts == t2.verts);
    CHECK(e1.vertex_count() == 8);
    CHECK(t1.size() == 4);
    CHECK(e1.bound);
    for (int i = 0; i < 8; ++i)
        CHECK(e1.leaf_names[i] == "v" + std::to_string(i));

    auto [e3, t3] = random_cograph(4, 8, 0.5, 8);
    (void)t3;
    CHECK(to_string(e1) != to_string(e3));  // different seed, different tree
}

TEST_CASE("a pinned draw stays frozen") {
    auto [e, t] = random_cograph(4, 8, 0.5, 7);
    CHECK(to_string(e) == "(v0*v1*((v2+v3)*v4)+v5)*(v6+v7)");
    std::vector<std::string> names;
    for (int v : t.verts)
        names.push_back(e.leaf_names[v]);
    CHECK(names == std::vector<std::string>{"v2", "v4", "v5", "v7"});
}

TEST_CASE("terminal counts and probabilities are validated") {
    CHECK_THROWS_AS((void)random_cograph(5, 4, 0.5, 1), input_error);
    CHECK_THROWS_AS((void)random_cograph(-1, 4, 0.5, 1), input_error);
    CHECK_THROWS_AS((void)random_cograph(0, 0, 0.5, 1), input_error);
    CHECK_THROWS_AS((void)random_cograph(1, 2, 1.5, 1), input_error);
    CHECK_THROWS_AS((void)random_cograph(1, 2, 0.5, 1, CographOpts{-0.1, false}), input_error);
    (void)random_cograph(0, 1, 0.0, 1);  // smallest instance is fine
}

TEST_CASE("order splits appear only when asked for") {
    bool saw_order = false;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto [e, t] = random_cograph(2, 10, 0.5, seed);
        (void)t;
        for (const CoNode& n : e.nodes)
            saw_order |= n.kind == OpKind::Order;
    }
    CHECK(!saw_order);
    for (std::uint64_t seed = 1; seed <= 10 && !saw_order; ++seed) {
        auto [e, t] = random_cograph(2, 10, 0.3, seed, CographOpts{0.5, false});
        (void)t;
        for (const CoNode& n : e.nodes)
            saw_order |= n.kind == OpKind::Order;
    }
    CHECK(saw_order);
}

TEST_CASE("balanced splits keep the tree shallow") {
    auto [e, t] = random_cograph(0, 64, 0.5, 3, CographOpts{0.0, true});
    (void)t;
    std::vector<int> depth(e.nodes.size(), 0);
    int maxd = 0;
    for (int i = static_cast<int>(e.nodes.size()) - 1; i >= 0; --i) {
        const CoNode& n = e.nodes[i];
        if (n.kind == OpKind::Leaf)
            maxd = std::max(maxd, depth[i]);
        else {
            depth[n.left] = depth[i] + 1;
            depth[n.right] = depth[i] + 1;
        }
    }
    CHECK(maxd <= 7);  // 64 leaves split at midpoints
}

TEST_CASE("complete bipartite expressions expand to all cross edges") {
    CoExpr e = complete_bipartite(1, 1);
    CHECK(to_string(e) == "a0*b0");
    CHECK(coexpr_edge_count(e) == 2);

    e = complete_bipartite(2, 3);
    DiGraph g = to_digraph(e);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 12);
    CHECK(g.has_edge(g.vertex_id("a1"), g.vertex_id("b2")));
    CHECK(g.has_edge(g.vertex_id("b2"), g.vertex_id("a1")));
    CHECK(!g.has_edge(g.vertex_id("a0"), g.vertex_id("a1")));
    CHECK_THROWS_AS((void)complete_bipartite(0, 2), input_error);
}

TEST_CASE("tournaments orient every pair exactly once") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        int n = 2 + static_cast<int>(seed);
        DiGraph g = random_tournament(n, seed);
        CHECK(g.edge_count() == n * (n - 1) / 2);
        CHECK(!g.weighted());
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                CHECK((g.has_edge(u, v) ^ g.has_edge(v, u)));
    }
    DiGraph a = random_tournament(6, 9), b = random_tournament(6, 9);
    CHECK(a.edges() == b.edges());
}

TEST_CASE("weighted tournaments draw costs between one and one hundred") {
    DiGraph g = random_tournament(7, 4, true);
    CHECK(g.weighted());
    for (auto [u, v] : g.edges()) {
        double w = g.weight(u, v);
        CHECK(w >= 1.0);
        CHECK(w <= 100.0);
        CHECK(w == static_cast<double>(static_cast<long long>(w)));
    }
}

TEST_CASE("board rows are screened before building the instance") {
    CHECK_THROWS_AS(validate_boards(BoardSpec{0, {"1"}, 1}), input_error);
    CHECK_THROWS_AS(validate_boards(BoardSpec{2, {"10"}, 0}), input_error);
    CHECK_THROWS_AS(validate_boards(BoardSpec{2, {"101"}, 2}), input_error);  // length
    CHECK_THROWS_AS(validate_boards(BoardSpec{2, {"00"}, 2}), input_error);   // no parts
    CHECK_THROWS_AS(validate_boards(BoardSpec{2, {"11"}, 1}), input_error);   // over capacity
    validate_boards(BoardSpec{3, {"101", "010"}, 2});
}

TEST_CASE("the change-over instance is complete, bidirected and hamming-weighted") {
    BoardSpec spec{4, {"1000", "0101", "1010", "1110"}, 3};
    DiGraph g = hamming_instance(spec);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 20);
    CHECK(g.name(0) == "b0");  // implicit all-zero start board
    CHECK(g.name(4) == "b4");
    CHECK(g.weight(g.vertex_id("b0"), g.vertex_id("b4")) == 3.0);
    CHECK(g.weight(g.vertex_id("b2"), g.vertex_id("b3")) == 4.0);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) {
            if (u == v)
                continue;
            CHECK(g.weight(u, v) == g.weight(v, u));
            for (int w = 0; w < 5; ++w)
                if (w != u && w != v)
                    CHECK(g.weight(u, v) <= g.weight(u, w) + g.weight(w, v));
        }
}

TEST_CASE("zero distances are allowed between equal boards") {
    DiGraph g = hamming_instance(BoardSpec{2, {"10", "10"}, 2});
    CHECK(g.weight(1, 2) == 0.0);
    CHECK(g.weight(0, 1) == 1.0);
}
