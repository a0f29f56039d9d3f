#include "copath.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/builder.hpp"
#include "core/coexpr.hpp"
#include "core/dp.hpp"
#include "core/gen.hpp"
#include "core/graph.hpp"
#include "core/io.hpp"
#include "core/ip.hpp"
#include "core/normal_form.hpp"
#include "core/oracle.hpp"

using namespace copath;

struct copath_expr {
    CoExpr e;
};

struct copath_graph {
    DiGraph g;
};

struct copath_cover {
    SteinerCover c;
    CoverStats st;
    std::vector<std::string> names;  // by vertex id
};

struct copath_model {
    IpModel m;
    DiGraph g;
    TerminalSet t;
    int kind = 0;  // 0 hp, 1 sp, 2 spc
};

namespace {

thread_local std::string g_err;

int set_err(int code, const std::string& msg) {
    g_err = msg;
    return code;
}

template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const parse_error& ex) {
        return set_err(COPATH_EPARSE, ex.what());
    } catch (const too_large_error& ex) {
        return set_err(COPATH_ETOOLARGE, ex.what());
    } catch (const input_error& ex) {
        return set_err(COPATH_EINVAL, ex.what());
    } catch (const std::bad_alloc&) {
        return set_err(COPATH_ENOMEM, "out of memory");
    } catch (const std::exception& ex) {
        return set_err(COPATH_EINTERNAL, ex.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int need(bool cond, const char* what) {
    if (!cond)
        throw input_error(what);
    return COPATH_OK;
}

std::vector<std::string> name_vec(const char* const* names, size_t n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (!names[i])
            throw input_error("null name in terminal list");
        v.emplace_back(names[i]);
    }
    return v;
}

TerminalSet terminals_of(const DiGraph& g, const char* const* names, size_t n) {
    std::vector<int> ids;
    ids.reserve(n);
    for (const std::string& s : name_vec(names, n))
        ids.push_back(g.vertex_id(s));
    return TerminalSet(std::move(ids));
}

std::vector<std::string> graph_names(const DiGraph& g) {
    std::vector<std::string> v;
    v.reserve(size_t(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i)
        v.push_back(g.name(i));
    return v;
}

copath_cover* make_cover(SteinerCover c, CoverStats st, std::vector<std::string> names) {
    auto* h = new copath_cover;
    h->c = std::move(c);
    h->st = st;
    h->names = std::move(names);
    return h;
}

CoverStats path_stats(const DirectedPath& p, const std::vector<char>& term, double cost) {
    CoverStats st;
    st.size = p.verts.empty() ? 0 : 1;
    for (int v : p.verts)
        st.steiner += !term[size_t(v)];
    st.cost = cost;
    return st;
}

std::string fmt_cost(double c) {
    double r = std::round(c);
    if (c == r && std::abs(c) < 1e15)
        return std::to_string(static_cast<long long>(r));
    return std::to_string(c);
}

} // namespace

extern "C" {

const char* copath_last_error(void) { return g_err.c_str(); }

void copath_free_string(char* s) { std::free(s); }

/* ---- co-expressions ---------------------------------------------------- */

int copath_expr_parse(const char* text, copath_expr** out) {
    return guarded([&] {
        need(text && out, "null argument");
        auto* h = new copath_expr{parse_coexpr(text)};
        *out = h;
        return COPATH_OK;
    });
}

void copath_expr_free(copath_expr* e) { delete e; }

int copath_expr_to_string(const copath_expr* e, char** out) {
    return guarded([&] {
        need(e && out, "null argument");
        *out = dup_string(to_string(e->e));
        return COPATH_OK;
    });
}

int copath_expr_counts(const copath_expr* e, int64_t* vertices, int64_t* edges) {
    return guarded([&] {
        need(e != nullptr, "null argument");
        if (vertices)
            *vertices = e->e.vertex_count();
        if (edges)
            *edges = coexpr_edge_count(e->e);
        return COPATH_OK;
    });
}

int copath_expr_bind(copath_expr* e, const char* const* names, size_t n_names) {
    return guarded([&] {
        need(e && (names || n_names == 0), "null argument");
        bind_terminals(e->e, name_vec(names, n_names));
        return COPATH_OK;
    });
}

int copath_expr_bind_all(copath_expr* e) {
    return guarded([&] {
        need(e != nullptr, "null argument");
        bind_all_terminals(e->e);
        return COPATH_OK;
    });
}

int copath_expr_terminal_names(const copath_expr* e, char** out) {
    return guarded([&] {
        need(e && out, "null argument");
        need(e->e.bound, "terminals not bound");
        std::string s;
        for (int leaf : e->e.terminal_leaves) {
            if (!s.empty())
                s += " ";
            s += e->e.leaf_names[size_t(leaf)];
        }
        *out = dup_string(s);
        return COPATH_OK;
    });
}

int copath_expr_values(const copath_expr* e, int64_t* p, int64_t* s) {
    return guarded([&] {
        need(e != nullptr, "null argument");
        need(e->e.bound, "terminals not bound");
        DpValue v = cover_values(e->e);
        if (p)
            *p = v.p;
        if (s)
            *s = v.s;
        return COPATH_OK;
    });
}

int copath_expr_cover(const copath_expr* e, copath_cover** out) {
    return guarded([&] {
        need(e && out, "null argument");
        need(e->e.bound, "terminals not bound");
        BuildResult r = build_cover(e->e);
        CoverStats st;
        st.size = r.p;
        st.steiner = r.s;
        st.cost = r.cost;
        *out = make_cover(std::move(r.cover), st, e->e.leaf_names);
        return COPATH_OK;
    });
}

int copath_expr_steiner_path(const copath_expr* e, copath_cover** out) {
    return guarded([&] {
        need(e && out, "null argument");
        need(e->e.bound, "terminals not bound");
        auto path = extract_steiner_path(e->e);
        if (!path)
            return set_err(COPATH_EINFEASIBLE, "no directed path through all terminals");
        CoverStats st = path_stats(*path, e->e.terminal,
                                   path->verts.empty() ? 0.0
                                                       : double(path->verts.size()) - 1.0);
        SteinerCover c;
        if (!path->verts.empty())
            c.paths.push_back(std::move(*path));
        *out = make_cover(std::move(c), st, e->e.leaf_names);
        return COPATH_OK;
    });
}

int copath_expr_ham_path(const copath_expr* e, copath_cover** out) {
    return guarded([&] {
        need(e && out, "null argument");
        auto path = extract_hamiltonian_path(e->e);
        if (!path)
            return set_err(COPATH_EINFEASIBLE, "no Hamiltonian path");
        CoverStats st;
        st.size = 1;
        st.steiner = 0;
        st.cost = double(path->verts.size()) - 1.0;
        SteinerCover c;
        c.paths.push_back(std::move(*path));
        *out = make_cover(std::move(c), st, e->e.leaf_names);
        return COPATH_OK;
    });
}

int copath_expr_graph(const copath_expr* e, copath_graph** out) {
    return guarded([&] {
        need(e && out, "null argument");
        *out = new copath_graph{to_digraph(e->e)};
        return COPATH_OK;
    });
}

int copath_expr_check_normal_form(const copath_expr* e, const copath_cover* c,
                                  char** violations, int* clean) {
    return guarded([&] {
        need(e && c, "null argument");
        need(e->e.bound, "terminals not bound");
        std::string report;
        auto view = root_split(e->e);
        if (view) {
            for (const NfViolation& v : check_normal_form(e->e, *view, c->c)) {
                report += "structure " + std::to_string(v.structure) + ": " + v.detail + "\n";
            }
            std::string why;
            OpKind kind = e->e.nodes[view->node].kind;
            if (kind == OpKind::Series && !check_series_consequence(e->e, *view, c->c, &why))
                report += "side-order: " + why + "\n";
            if (kind == OpKind::Order && !check_order_progression(e->e, *view, c->c, &why))
                report += "progression: " + why + "\n";
        }
        if (clean)
            *clean = report.empty() ? 1 : 0;
        if (violations)
            *violations = dup_string(report);
        return COPATH_OK;
    });
}

int copath_expr_random(int t, int n, double union_prob, double order_prob,
                       int balanced, uint64_t seed, copath_expr** out) {
    return guarded([&] {
        need(out != nullptr, "null argument");
        CographOpts opts;
        opts.order_prob = order_prob;
        opts.balanced = balanced != 0;
        auto [e, ts] = random_cograph(t, n, union_prob, seed, opts);
        (void)ts;  // already bound inside e
        *out = new copath_expr{std::move(e)};
        return COPATH_OK;
    });
}

int copath_expr_bipartite(int n, int m, copath_expr** out) {
    return guarded([&] {
        need(out != nullptr, "null argument");
        *out = new copath_expr{complete_bipartite(n, m)};
        return COPATH_OK;
    });
}

/* ---- digraphs ---------------------------------------------------------- */

int copath_graph_read(const char* text, copath_graph** out) {
    return guarded([&] {
        need(text && out, "null argument");
        *out = new copath_graph{read_edge_list_text(text)};
        return COPATH_OK;
    });
}

void copath_graph_free(copath_graph* g) { delete g; }

int copath_graph_write(const copath_graph* g, char** out) {
    return guarded([&] {
        need(g && out, "null argument");
        *out = dup_string(write_edge_list(g->g));
        return COPATH_OK;
    });
}

int copath_graph_counts(const copath_graph* g, int64_t* vertices, int64_t* edges) {
    return guarded([&] {
        need(g != nullptr, "null argument");
        if (vertices)
            *vertices = g->g.vertex_count();
        if (edges)
            *edges = g->g.edge_count();
        return COPATH_OK;
    });
}

int copath_graph_tournament(int n, uint64_t seed, int weighted, copath_graph** out) {
    return guarded([&] {
        need(out != nullptr, "null argument");
        *out = new copath_graph{random_tournament(n, seed, weighted != 0)};
        return COPATH_OK;
    });
}

int copath_graph_boards(const char* csv_text, int capacity, copath_graph** out) {
    return guarded([&] {
        need(csv_text && out, "null argument");
        BoardSpec spec;
        spec.boards = read_boards_csv_text(csv_text);
        if (spec.boards.empty())
            throw input_error("boards: no rows");
        spec.m = static_cast<int>(spec.boards.front().size());
        spec.k = capacity > 0 ? capacity : spec.m;
        *out = new copath_graph{hamming_instance(spec)};
        return COPATH_OK;
    });
}

int copath_graph_vertex_id(const copath_graph* g, const char* name, int* id) {
    return guarded([&] {
        need(g && name && id, "null argument");
        *id = g->g.vertex_id(name);
        return COPATH_OK;
    });
}

int copath_graph_vertex_name(const copath_graph* g, int id, char** name) {
    return guarded([&] {
        need(g && name, "null argument");
        need(id >= 0 && id < g->g.vertex_count(), "vertex id out of range");
        *name = dup_string(g->g.name(id));
        return COPATH_OK;
    });
}

/* ---- covers ------------------------------------------------------------ */

void copath_cover_free(copath_cover* c) { delete c; }

int copath_cover_stats(const copath_cover* c, int64_t* size, int64_t* steiner, double* cost) {
    return guarded([&] {
        need(c != nullptr, "null argument");
        if (size)
            *size = c->st.size;
        if (steiner)
            *steiner = c->st.steiner;
        if (cost)
            *cost = c->st.cost;
        return COPATH_OK;
    });
}

int copath_cover_to_json(const copath_cover* c, char** out) {
    return guarded([&] {
        need(c && out, "null argument");
        DiGraph names_only;
        for (const std::string& n : c->names)
            names_only.add_vertex(n);
        *out = dup_string(cover_to_json(names_only, c->c, c->st));
        return COPATH_OK;
    });
}

int copath_cover_to_text(const copath_cover* c, char** out) {
    return guarded([&] {
        need(c && out, "null argument");
        std::string s;
        for (const DirectedPath& p : c->c.paths) {
            for (size_t i = 0; i < p.verts.size(); ++i) {
                if (i)
                    s += " ";
                s += c->names.at(size_t(p.verts[i]));
            }
            s += "\n";
        }
        *out = dup_string(s);
        return COPATH_OK;
    });
}

int copath_cover_read_json(const copath_graph* g, const char* text, copath_cover** out) {
    return guarded([&] {
        need(g && text && out, "null argument");
        SteinerCover c = cover_from_json(g->g, text);
        *out = make_cover(std::move(c), CoverStats{}, graph_names(g->g));
        return COPATH_OK;
    });
}

int copath_cover_check(const copath_graph* g, const char* const* terminals,
                       size_t n_terminals, const copath_cover* c, char** verdict, int* ok) {
    return guarded([&] {
        need(g && c && (terminals || n_terminals == 0), "null argument");
        TerminalSet t = terminals_of(g->g, terminals, n_terminals);
        CoverCheck chk = validate_cover(g->g, t, c->c);
        std::string line;
        if (chk.ok)
            line = "valid: size=" + std::to_string(chk.stats.size)
                   + " steiner=" + std::to_string(chk.stats.steiner)
                   + " cost=" + fmt_cost(chk.stats.cost);
        else
            line = "invalid: " + chk.detail;
        if (ok)
            *ok = chk.ok ? 1 : 0;
        if (verdict)
            *verdict = dup_string(line);
        return COPATH_OK;
    });
}

/* ---- exhaustive oracles ------------------------------------------------ */

int copath_oracle_cover(const copath_graph* g, const char* const* terminals,
                        size_t n_terminals, int limit, copath_cover** out) {
    return guarded([&] {
        need(g && out && (terminals || n_terminals == 0), "null argument");
        TerminalSet t = terminals_of(g->g, terminals, n_terminals);
        OracleCover r = brute_force_cover(g->g, t, limit > 0 ? limit : 12);
        CoverStats st;
        st.size = r.p;
        st.steiner = r.s;
        st.cost = cover_cost(g->g, r.witness);
        *out = make_cover(std::move(r.witness), st, graph_names(g->g));
        return COPATH_OK;
    });
}

int copath_oracle_ham(const copath_graph* g, int limit, int start,
                      copath_cover** out, double* cost) {
    return guarded([&] {
        need(g != nullptr, "null argument");
        auto r = brute_force_hamiltonian(g->g, limit > 0 ? limit : 10, start);
        if (!r)
            return set_err(COPATH_EINFEASIBLE, "no Hamiltonian path");
        if (cost)
            *cost = r->cost;
        if (out) {
            CoverStats st;
            st.size = r->path.verts.empty() ? 0 : 1;
            st.steiner = 0;
            st.cost = r->cost;
            SteinerCover c;
            if (!r->path.verts.empty())
                c.paths.push_back(std::move(r->path));
            *out = make_cover(std::move(c), st, graph_names(g->g));
        }
        return COPATH_OK;
    });
}

int copath_oracle_path(const copath_graph* g, const char* const* terminals,
                       size_t n_terminals, int limit, copath_cover** out, double* cost) {
    return guarded([&] {
        need(g && (terminals || n_terminals == 0), "null argument");
        TerminalSet t = terminals_of(g->g, terminals, n_terminals);
        auto r = brute_force_steiner_path(g->g, t, limit > 0 ? limit : 12);
        if (!r)
            return set_err(COPATH_EINFEASIBLE, "no directed path through all terminals");
        if (cost)
            *cost = r->cost;
        if (out) {
            std::vector<char> term = t.mask(g->g.vertex_count());
            CoverStats st = path_stats(r->path, term, r->cost);
            SteinerCover c;
            if (!r->path.verts.empty())
                c.paths.push_back(std::move(r->path));
            *out = make_cover(std::move(c), st, graph_names(g->g));
        }
        return COPATH_OK;
    });
}

/* ---- integer programs -------------------------------------------------- */

int copath_model_hp(const copath_graph* g, int start, copath_model** out) {
    return guarded([&] {
        need(g && out, "null argument");
        auto* h = new copath_model;
        h->g = g->g;
        h->kind = 0;
        std::vector<int> all(size_t(g->g.vertex_count()));
        for (int i = 0; i < g->g.vertex_count(); ++i)
            all[size_t(i)] = i;
        h->t = TerminalSet(std::move(all));
        try {
            h->m = build_hp_model(g->g, start);
        } catch (...) {
            delete h;
            throw;
        }
        *out = h;
        return COPATH_OK;
    });
}

int copath_model_sp(const copath_graph* g, const char* const* terminals,
                    size_t n_terminals, copath_model** out) {
    return guarded([&] {
        need(g && out && (terminals || n_terminals == 0), "null argument");
        auto* h = new copath_model;
        h->g = g->g;
        h->kind = 1;
        try {
            h->t = terminals_of(g->g, terminals, n_terminals);
            h->m = build_sp_model(g->g, h->t);
        } catch (...) {
            delete h;
            throw;
        }
        *out = h;
        return COPATH_OK;
    });
}

int copath_model_spc(const copath_graph* g, const char* const* terminals,
                     size_t n_terminals, copath_model** out) {
    return guarded([&] {
        need(g && out && (terminals || n_terminals == 0), "null argument");
        auto* h = new copath_model;
        h->g = g->g;
        h->kind = 2;
        try {
            h->t = terminals_of(g->g, terminals, n_terminals);
            h->m = build_spc_model(g->g, h->t);
        } catch (...) {
            delete h;
            throw;
        }
        *out = h;
        return COPATH_OK;
    });
}

void copath_model_free(copath_model* m) { delete m; }

int copath_model_lp(const copath_model* m, char** out) {
    return guarded([&] {
        need(m && out, "null argument");
        *out = dup_string(emit_lp(m->m));
        return COPATH_OK;
    });
}

int copath_model_solve(const copath_model* m, int max_binaries, double* objective,
                       copath_cover** decoded) {
    return guarded([&] {
        need(m != nullptr, "null argument");
        auto sol = solve_small(m->m, max_binaries > 0 ? max_binaries : 30);
        if (!sol)
            return set_err(COPATH_EINFEASIBLE, "model infeasible");
        if (objective)
            *objective = sol->objective;
        if (decoded) {
            std::vector<char> term = m->t.mask(m->g.vertex_count());
            SteinerCover c;
            CoverStats st;
            if (m->kind == 0) {
                DirectedPath p = decode_hp(m->m, *sol, m->g);
                st.size = 1;
                st.cost = sol->objective;
                c.paths.push_back(std::move(p));
            } else if (m->kind == 1) {
                DirectedPath p = decode_sp(m->m, *sol, m->g);
                st = path_stats(p, term, sol->objective);
                c.paths.push_back(std::move(p));
            } else {
                c = decode_spc(m->m, *sol, m->g);
                st.size = static_cast<long long>(c.paths.size());
                for (const DirectedPath& p : c.paths)
                    for (int v : p.verts)
                        st.steiner += !term[size_t(v)];
                st.cost = cover_cost(m->g, c);
            }
            *decoded = make_cover(std::move(c), st, graph_names(m->g));
        }
        return COPATH_OK;
    });
}

} // extern "C"
