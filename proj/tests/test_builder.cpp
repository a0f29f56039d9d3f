#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "core/builder.hpp"
#include "core/dp.hpp"
#include "core/gen.hpp"

using namespace copath;

namespace {

// Builds, validates against the expanded digraph, and checks the stats
// against the computed optimum.
void check_built(const CoExpr& e) {
    BuildResult r = build_cover(e);
    DpValue v = cover_values(e);
    CHECK(r.p == v.p);
    CHECK(r.s == v.s);
    DiGraph g = to_digraph(e);
    auto chk = validate_cover(g, bound_terminals(e), r.cover);
    REQUIRE_MESSAGE(chk.ok, chk.detail);
    CHECK(chk.stats.size == v.p);
    CHECK(chk.stats.steiner == v.s);
    CHECK(chk.stats.cost == r.cost);
}

CoExpr bound(const std::string& text, const std::vector<std::string>& terminals) {
    CoExpr e = parse_coexpr(text);
    bind_terminals(e, terminals);
    return e;
}

} // namespace

TEST_CASE("hand-checked covers come out valid and optimal") {
    CoExpr e = parse_coexpr("(a+b)*(c+d)");
    bind_all_terminals(e);
    check_built(e);

    check_built(bound("x*(c+d)", {"c", "d"}));
    check_built(bound("(a+b)>c", {"a", "b", "c"}));
    check_built(bound("(a+b+e)*(c+d)", {"a", "b", "c", "d"}));
    check_built(bound("a+b*(c>d)", {"a", "d"}));
    check_built(bound("(x*(c+d))>(a+b)", {"c", "d", "a", "b"}));
    check_built(bound("(a+b)*(c+d)", {}));

    e = complete_bipartite(2, 6);
    bind_all_terminals(e);
    check_built(e);
    bind_terminals(e, {"b0", "b1", "b2", "b3", "b4", "b5"});
    check_built(e);
}

TEST_CASE("built covers stay valid and optimal across a random corpus") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        int n = 2 + static_cast<int>(seed % 11);
        int t = static_cast<int>((seed * 7) % (n + 1));
        double prob = 0.3 + 0.1 * (seed % 5);
        auto [e, ts] = random_cograph(t, n, prob, seed, CographOpts{0.25, false});
        (void)ts;
        check_built(e);
    }
}

TEST_CASE("building twice gives byte-identical covers") {
    auto [e, ts] = random_cograph(5, 12, 0.5, 42);
    (void)ts;
    BuildResult a = build_cover(e);
    BuildResult b = build_cover(e);
    REQUIRE(a.cover.paths.size() == b.cover.paths.size());
    for (size_t i = 0; i < a.cover.paths.size(); ++i)
        CHECK(a.cover.paths[i].verts == b.cover.paths[i].verts);
}

TEST_CASE("unit-weight cost equals covered vertices minus path count") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto [e, ts] = random_cograph(4, 9, 0.5, seed);
        (void)ts;
        BuildResult r = build_cover(e);
        long long verts = 0;
        for (const auto& p : r.cover.paths)
            verts += static_cast<long long>(p.verts.size());
        CHECK(r.cost == static_cast<double>(verts - r.p));
    }
}

TEST_CASE("single-path extraction answers the three shapes") {
    CoExpr e = bound("x*(c+d)", {"c", "d"});
    auto sp = extract_steiner_path(e);
    REQUIRE(sp.has_value());
    CHECK(sp->verts.size() == 3);  // c x d (or d x c)

    e = bound("a+b", {});
    sp = extract_steiner_path(e);
    REQUIRE(sp.has_value());
    CHECK(sp->verts.empty());

    e = bound("a+b", {"a", "b"});
    CHECK(!extract_steiner_path(e).has_value());
}

TEST_CASE("whole-graph path extraction matches the existence test") {
    const char* yes[] = {"a", "a*b*c", "a>b>c", "(a+b)*(c+d)"};
    for (const char* s : yes) {
        CoExpr e = parse_coexpr(s);
        auto hp = extract_hamiltonian_path(e);
        REQUIRE_MESSAGE(hp.has_value(), s);
        CHECK(static_cast<int>(hp->verts.size()) == e.vertex_count());
        DiGraph g = to_digraph(e);
        for (size_t i = 1; i < hp->verts.size(); ++i)
            CHECK(g.has_edge(hp->verts[i - 1], hp->verts[i]));
    }
    CHECK(!extract_hamiltonian_path(parse_coexpr("a+b")).has_value());
    CHECK(!extract_hamiltonian_path(complete_bipartite(2, 4)).has_value());
}
