#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <copath.h>

namespace {

// takes ownership of a returned string
std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    copath_free_string(s);
    return out;
}

struct ExprGuard {
    copath_expr* e = nullptr;
    ~ExprGuard() { copath_expr_free(e); }
};
struct GraphGuard {
    copath_graph* g = nullptr;
    ~GraphGuard() { copath_graph_free(g); }
};
struct CoverGuard {
    copath_cover* c = nullptr;
    ~CoverGuard() { copath_cover_free(c); }
};
struct ModelGuard {
    copath_model* m = nullptr;
    ~ModelGuard() { copath_model_free(m); }
};

} // namespace

TEST_CASE("expressions parse, normalize and report counts") {
    ExprGuard e;
    REQUIRE(copath_expr_parse("((a+b))*(c+d) # note", &e.e) == COPATH_OK);
    char* s = nullptr;
    REQUIRE(copath_expr_to_string(e.e, &s) == COPATH_OK);
    CHECK(take(s) == "(a+b)*(c+d)");
}

TEST_CASE("parse failures set the error code and message") {
    copath_expr* e = nullptr;
    CHECK(copath_expr_parse("a+", &e) == COPATH_EPARSE);
    CHECK(e == nullptr);
    CHECK(std::strlen(copath_last_error()) > 0);
    CHECK(copath_expr_parse(nullptr, &e) == COPATH_EINVAL);
}

TEST_CASE("values and covers flow through the bound expression") {
    ExprGuard e;
    REQUIRE(copath_expr_parse("(a+b)*(c+d)", &e.e) == COPATH_OK);
    int64_t verts = 0, edges = 0;
    REQUIRE(copath_expr_counts(e.e, &verts, &edges) == COPATH_OK);
    CHECK(verts == 4);
    CHECK(edges == 8);

    CHECK(copath_expr_bind_all(e.e) == COPATH_OK);
    int64_t p = -1, s = -1;
    REQUIRE(copath_expr_values(e.e, &p, &s) == COPATH_OK);
    CHECK(p == 1);
    CHECK(s == 0);

    CoverGuard c;
    REQUIRE(copath_expr_cover(e.e, &c.c) == COPATH_OK);
    int64_t size = 0, steiner = 0;
    double cost = 0.0;
    REQUIRE(copath_cover_stats(c.c, &size, &steiner, &cost) == COPATH_OK);
    CHECK(size == 1);
    CHECK(steiner == 0);
    CHECK(cost == 3.0);
    char* js = nullptr;
    REQUIRE(copath_cover_to_json(c.c, &js) == COPATH_OK);
    CHECK(take(js).find("\"size\":1") != std::string::npos);
}

TEST_CASE("binding screens names and reports terminals back") {
    ExprGuard e;
    REQUIRE(copath_expr_parse("x*(c+d)", &e.e) == COPATH_OK);
    const char* good[] = {"c", "d"};
    REQUIRE(copath_expr_bind(e.e, good, 2) == COPATH_OK);
    char* names = nullptr;
    REQUIRE(copath_expr_terminal_names(e.e, &names) == COPATH_OK);
    CHECK(take(names) == "c d");

    const char* bad[] = {"zz"};
    CHECK(copath_expr_bind(e.e, bad, 1) == COPATH_EINVAL);

    int64_t p = 0, s = 0;
    REQUIRE(copath_expr_values(e.e, &p, &s) == COPATH_OK);
    CHECK(p == 1);  // the failed bind left the previous one intact
    CHECK(s == 1);
}

TEST_CASE("single-path queries distinguish infeasible from error") {
    ExprGuard e;
    REQUIRE(copath_expr_parse("a+b", &e.e) == COPATH_OK);
    CoverGuard c;
    CHECK(copath_expr_ham_path(e.e, &c.c) == COPATH_EINFEASIBLE);
    REQUIRE(copath_expr_bind_all(e.e) == COPATH_OK);
    CHECK(copath_expr_steiner_path(e.e, &c.c) == COPATH_EINFEASIBLE);

    const char* none[] = {nullptr};
    REQUIRE(copath_expr_bind(e.e, none, 0) == COPATH_OK);
    REQUIRE(copath_expr_steiner_path(e.e, &c.c) == COPATH_OK);
    int64_t size = -1, steiner = -1;
    double cost = -1.0;
    REQUIRE(copath_cover_stats(c.c, &size, &steiner, &cost) == COPATH_OK);
    CHECK(size == 0);
}

TEST_CASE("graphs read, write and answer name lookups") {
    GraphGuard g;
    REQUIRE(copath_graph_read("a b 2\nc\n", &g.g) == COPATH_OK);
    int64_t verts = 0, edges = 0;
    REQUIRE(copath_graph_counts(g.g, &verts, &edges) == COPATH_OK);
    CHECK(verts == 3);
    CHECK(edges == 1);
    int id = -1;
    REQUIRE(copath_graph_vertex_id(g.g, "c", &id) == COPATH_OK);
    CHECK(id == 2);
    char* name = nullptr;
    REQUIRE(copath_graph_vertex_name(g.g, 2, &name) == COPATH_OK);
    CHECK(take(name) == "c");
    CHECK(copath_graph_vertex_id(g.g, "zz", &id) == COPATH_EINVAL);
    copath_graph* bad = nullptr;
    CHECK(copath_graph_read("a b c d\n", &bad) == COPATH_EPARSE);
}

TEST_CASE("covers round-trip as json and validate against terminals") {
    GraphGuard g;
    REQUIRE(copath_graph_read("u x\nx v\n", &g.g) == COPATH_OK);
    CoverGuard c;
    REQUIRE(copath_cover_read_json(g.g, R"({"paths":[["u","x","v"]]})", &c.c) == COPATH_OK);
    const char* t[] = {"u", "v"};
    char* verdict = nullptr;
    int ok = 0;
    REQUIRE(copath_cover_check(g.g, t, 2, c.c, &verdict, &ok) == COPATH_OK);
    CHECK(take(verdict) == "valid: size=1 steiner=1 cost=2");
    CHECK(ok == 1);

    CoverGuard broken;
    REQUIRE(copath_cover_read_json(g.g, R"({"paths":[["v","x"]]})", &broken.c) == COPATH_OK);
    REQUIRE(copath_cover_check(g.g, t, 2, broken.c, &verdict, &ok) == COPATH_OK);
    CHECK(ok == 0);
    CHECK(!take(verdict).empty());
}

TEST_CASE("oracles answer through the handle layer") {
    GraphGuard g;
    REQUIRE(copath_graph_read("a b 2\nb a 3\n", &g.g) == COPATH_OK);
    CoverGuard c;
    double cost = 0.0;
    REQUIRE(copath_oracle_ham(g.g, 0, -1, &c.c, &cost) == COPATH_OK);
    CHECK(cost == 2.0);
    REQUIRE(copath_oracle_ham(g.g, 0, 1, &c.c, &cost) == COPATH_OK);
    CHECK(cost == 3.0);

    const char* t[] = {"a"};
    CoverGuard oc;
    REQUIRE(copath_oracle_cover(g.g, t, 1, 0, &oc.c) == COPATH_OK);
    int64_t size = 0, steiner = 0;
    double cc = 0.0;
    REQUIRE(copath_cover_stats(oc.c, &size, &steiner, &cc) == COPATH_OK);
    CHECK(size == 1);
    CHECK(steiner == 0);
}

TEST_CASE("models emit deterministic lp text and solve with decoding") {
    GraphGuard g;
    REQUIRE(copath_graph_read("a b\nb c\n", &g.g) == COPATH_OK);
    ModelGuard m;
    REQUIRE(copath_model_hp(g.g, -1, &m.m) == COPATH_OK);
    char* lp1 = nullptr;
    char* lp2 = nullptr;
    REQUIRE(copath_model_lp(m.m, &lp1) == COPATH_OK);
    REQUIRE(copath_model_lp(m.m, &lp2) == COPATH_OK);
    CHECK(take(lp1) == take(lp2));

    double obj = 0.0;
    CoverGuard dec;
    REQUIRE(copath_model_solve(m.m, 0, &obj, &dec.c) == COPATH_OK);
    CHECK(obj == 2.0);
    char* text = nullptr;
    REQUIRE(copath_cover_to_text(dec.c, &text) == COPATH_OK);
    CHECK(take(text) == "a b c\n");

    ModelGuard pinned;
    REQUIRE(copath_model_hp(g.g, 2, &pinned.m) == COPATH_OK);
    CHECK(copath_model_solve(pinned.m, 0, &obj, nullptr) == COPATH_EINFEASIBLE);
}

TEST_CASE("the cover model rejects an empty terminal set") {
    GraphGuard g;
    REQUIRE(copath_graph_read("a b\n", &g.g) == COPATH_OK);
    copath_model* m = nullptr;
    CHECK(copath_model_spc(g.g, nullptr, 0, &m) == COPATH_EINVAL);
    CHECK(m == nullptr);
}

TEST_CASE("oversized oracle calls are refused with the size code") {
    ExprGuard e;
    REQUIRE(copath_expr_bipartite(6, 7, &e.e) == COPATH_OK);
    GraphGuard g;
    REQUIRE(copath_expr_graph(e.e, &g.g) == COPATH_OK);
    CoverGuard c;
    double cost = 0.0;
    CHECK(copath_oracle_ham(g.g, 0, -1, &c.c, &cost) == COPATH_ETOOLARGE);
}

TEST_CASE("generated expressions arrive bound and reproducible") {
    ExprGuard a, b;
    REQUIRE(copath_expr_random(4, 8, 0.5, 0.0, 0, 7, &a.e) == COPATH_OK);
    REQUIRE(copath_expr_random(4, 8, 0.5, 0.0, 0, 7, &b.e) == COPATH_OK);
    char* sa = nullptr;
    char* sb = nullptr;
    REQUIRE(copath_expr_to_string(a.e, &sa) == COPATH_OK);
    REQUIRE(copath_expr_to_string(b.e, &sb) == COPATH_OK);
    CHECK(take(sa) == take(sb));
    char* t = nullptr;
    REQUIRE(copath_expr_terminal_names(a.e, &t) == COPATH_OK);
    CHECK(take(t) == "v2 v4 v5 v7");
}

TEST_CASE("normal-form reports flag a staged violation") {
    ExprGuard e;
    REQUIRE(copath_expr_parse("x*(c+d)", &e.e) == COPATH_OK);
    const char* t[] = {"c", "d"};
    REQUIRE(copath_expr_bind(e.e, t, 2) == COPATH_OK);
    GraphGuard g;
    REQUIRE(copath_expr_graph(e.e, &g.g) == COPATH_OK);

    CoverGuard clean;
    REQUIRE(copath_expr_cover(e.e, &clean.c) == COPATH_OK);
    char* report = nullptr;
    int is_clean = 0;
    REQUIRE(copath_expr_check_normal_form(e.e, clean.c, &report, &is_clean) == COPATH_OK);
    CHECK(is_clean == 1);
    CHECK(take(report).empty());

    CoverGuard staged;
    REQUIRE(copath_cover_read_json(g.g, R"({"paths":[["x","c"],["d"]]})", &staged.c)
            == COPATH_OK);
    REQUIRE(copath_expr_check_normal_form(e.e, staged.c, &report, &is_clean) == COPATH_OK);
    CHECK(is_clean == 0);
    CHECK(take(report).find("structure") != std::string::npos);
}
