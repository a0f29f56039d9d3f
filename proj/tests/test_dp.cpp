#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/coexpr.hpp"
#include "core/dp.hpp"
#include "core/gen.hpp"
#include "core/oracle.hpp"

using namespace copath;

namespace {

DpValue values_of(const std::string& text, const std::vector<std::string>& terminals) {
    CoExpr e = parse_coexpr(text);
    bind_terminals(e, terminals);
    return cover_values(e);
}

DpValue values_all(const std::string& text) {
    CoExpr e = parse_coexpr(text);
    bind_all_terminals(e);
    return cover_values(e);
}

} // namespace

TEST_CASE("hand-checked optima") {
    auto v = values_all("a");
    CHECK(v.p == 1);
    CHECK(v.s == 0);

    v = values_of("a", {});
    CHECK(v.p == 0);
    CHECK(v.s == 0);

    v = values_all("(a+b)*(c+d)");  // zig-zag through both sides
    CHECK(v.p == 1);
    CHECK(v.s == 0);

    v = values_all("(a+b)>c");  // a and b cannot share a path
    CHECK(v.p == 2);
    CHECK(v.s == 0);

    v = values_of("(a+b+e)*(c+d)", {"a", "b", "c", "d"});  // e not needed
    CHECK(v.p == 1);
    CHECK(v.s == 0);

    v = values_of("x*(c+d)", {"c", "d"});  // c -> x -> d
    CHECK(v.p == 1);
    CHECK(v.s == 1);

    v = values_of("a+b*(c>d)", {"a", "d"});
    CHECK(v.p == 2);
    CHECK(v.s == 0);

    v = values_of("(a+b)>(c+d)", {"a", "b", "c", "d"});
    CHECK(v.p == 2);
    CHECK(v.s == 0);
}

TEST_CASE("terminal-free subtrees cost nothing") {
    auto v = values_of("(a+b)*(c+d)", {});
    CHECK(v.p == 0);
    CHECK(v.s == 0);
    v = values_of("x*y*z+(q>r)", {});
    CHECK(v.p == 0);
    CHECK(v.s == 0);
}

TEST_CASE("series absorbs the light side into the heavy cover") {
    // K_{2,6}: six isolated right terminals, the two left vertices stitch
    // them into max(1, 6 - 2) = 4 paths without connectors.
    CoExpr e = complete_bipartite(2, 6);
    bind_all_terminals(e);
    auto v = cover_values(e);
    CHECK(v.p == 4);
    CHECK(v.s == 0);

    // Only the right side terminal: the two left vertices now serve as
    // connectors, still 4 paths but none left to save connectors for.
    std::vector<std::string> right{"b0", "b1", "b2", "b3", "b4", "b5"};
    bind_terminals(e, right);
    v = cover_values(e);
    CHECK(v.p == 4);
    CHECK(v.s == 2);
}

TEST_CASE("order composition balances path counts by splitting at connectors") {
    // Left: single path c x d using connector x.  Right: two terminal
    // singletons.  The order edges let the left split part feed the right.
    auto v = values_of("(x*(c+d))>(a+b)", {"c", "d", "a", "b"});
    CHECK(v.p == 2);
    CHECK(v.s == 0);
}

TEST_CASE("per-node values agree with fresh evaluations of the subtrees") {
    auto [e, t] = random_cograph(6, 14, 0.45, 11, CographOpts{0.25, false});
    (void)t;
    auto vals = compute_values(e);
    REQUIRE(vals.size() == e.nodes.size());
    CHECK(vals[e.root].p == cover_values(e).p);
    CHECK(vals[e.root].s == cover_values(e).s);
    for (const CoNode& n : e.nodes)
        if (n.kind == OpKind::Leaf) {
            int leaf = n.leaf_lo;
            CHECK(vals[&n - e.nodes.data()].p == (e.terminal[leaf] ? 1 : 0));
        }
}

TEST_CASE("values match the exhaustive search on a small random corpus") {
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 60; ++seed) {
        int n = 2 + static_cast<int>(seed % 7);
        int t = static_cast<int>(seed % (n + 1));
        auto [e, ts] = random_cograph(t, n, 0.5, seed, CographOpts{0.2, false});
        auto v = cover_values(e);
        auto o = brute_force_cover(to_digraph(e), ts);
        CHECK(v.p == o.p);
        CHECK(v.s == o.s);
        ++checked;
    }
}

TEST_CASE("a single path exists exactly when the whole graph fits on one") {
    CHECK(hamiltonian_path_exists(parse_coexpr("a")));
    CHECK(hamiltonian_path_exists(parse_coexpr("a*b*c")));
    CHECK(hamiltonian_path_exists(parse_coexpr("a>b>c")));
    CHECK(!hamiltonian_path_exists(parse_coexpr("a+b")));
    CHECK(hamiltonian_path_exists(complete_bipartite(3, 4)));
    CHECK(!hamiltonian_path_exists(complete_bipartite(3, 5)));
}

TEST_CASE("steiner path existence mirrors a p value of at most one") {
    CoExpr e = parse_coexpr("x*(c+d)");
    bind_terminals(e, {"c", "d"});
    CHECK(steiner_path_exists(e));
    bind_terminals(e, {});
    CHECK(steiner_path_exists(e));  // empty path suffices
    e = parse_coexpr("a+b");
    bind_all_terminals(e);
    CHECK(!steiner_path_exists(e));
}
