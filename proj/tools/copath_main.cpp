// copath: directed Steiner path covers on co-graphs, oracles and IP export.
// Exit codes: 0 success, 1 no-path/infeasible (reported, not an error),
// 2 usage or input problems.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "copath.h"

namespace {

struct StrFree {
    void operator()(char* s) const { copath_free_string(s); }
};
using CStr = std::unique_ptr<char, StrFree>;

struct ExprFree {
    void operator()(copath_expr* e) const { copath_expr_free(e); }
};
using Expr = std::unique_ptr<copath_expr, ExprFree>;

struct GraphFree {
    void operator()(copath_graph* g) const { copath_graph_free(g); }
};
using Graph = std::unique_ptr<copath_graph, GraphFree>;

struct CoverFree {
    void operator()(copath_cover* c) const { copath_cover_free(c); }
};
using Cover = std::unique_ptr<copath_cover, CoverFree>;

struct ModelFree {
    void operator()(copath_model* m) const { copath_model_free(m); }
};
using Model = std::unique_ptr<copath_model, ModelFree>;

// nonzero C API status -> process exit code, with the message printed
int report(int rc) {
    if (rc == COPATH_EINFEASIBLE) {
        std::cout << copath_last_error() << "\n";
        return 1;
    }
    std::cerr << "error: " << copath_last_error() << "\n";
    return 2;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CLI::ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

std::vector<const char*> c_view(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    out.reserve(v.size());
    for (const auto& s : v)
        out.push_back(s.c_str());
    return out;
}

// ---- shared option groups ----------------------------------------------

struct ExprInput {
    std::string inline_text, file;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("-e,--expr", inline_text, "co-expression text");
        auto* b = cmd->add_option("-f,--expr-file", file, "co-expression file");
        a->excludes(b);
    }

    Expr load() const {
        if (inline_text.empty() && file.empty())
            throw CLI::ValidationError("need a co-expression (-e or -f)");
        std::string text = file.empty() ? inline_text : read_file(file);
        copath_expr* e = nullptr;
        int rc = copath_expr_parse(text.c_str(), &e);
        if (rc != COPATH_OK)
            throw rc;
        return Expr(e);
    }

    bool given() const { return !inline_text.empty() || !file.empty(); }
};

struct TerminalInput {
    std::string list, file;
    bool all = false, none = false;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("-t,--terminals", list, "terminal names, comma separated");
        auto* b = cmd->add_option("--terminals-file", file,
                                  "file with whitespace-separated terminal names");
        auto* c = cmd->add_flag("--all-terminals", all, "every vertex is a terminal (default)");
        auto* d = cmd->add_flag("--no-terminals", none, "empty terminal set");
        a->excludes(b)->excludes(c)->excludes(d);
        b->excludes(c)->excludes(d);
        c->excludes(d);
    }

    std::vector<std::string> names() const {
        if (!list.empty())
            return split_commas(list);
        if (!file.empty()) {
            std::vector<std::string> out;
            std::istringstream in(read_file(file));
            std::string line;
            while (std::getline(in, line)) {
                std::istringstream ls(line.substr(0, line.find('#')));
                std::string tok;
                while (ls >> tok)
                    out.push_back(tok);
            }
            return out;
        }
        return {};
    }

    // binds terminals on e: --all (or nothing) -> all vertices
    void bind(copath_expr* e) const {
        int rc;
        if (none) {
            rc = copath_expr_bind(e, nullptr, 0);
        } else if (list.empty() && file.empty()) {
            rc = copath_expr_bind_all(e);
        } else {
            auto ns = names();
            auto view = c_view(ns);
            rc = copath_expr_bind(e, view.data(), view.size());
        }
        if (rc != COPATH_OK)
            throw rc;
    }

    // terminal names against a graph: default means every vertex
    std::vector<std::string> resolve(const copath_graph* g) const {
        if (none)
            return {};
        if (!list.empty() || !file.empty())
            return names();
        int64_t n = 0;
        int rc = copath_graph_counts(g, &n, nullptr);
        if (rc != COPATH_OK)
            throw rc;
        std::vector<std::string> out;
        out.reserve(size_t(n));
        for (int i = 0; i < int(n); ++i) {
            char* raw = nullptr;
            rc = copath_graph_vertex_name(g, i, &raw);
            if (rc != COPATH_OK)
                throw rc;
            CStr s(raw);
            out.emplace_back(s.get());
        }
        return out;
    }
};

struct GraphInput {
    ExprInput expr;
    std::string graph_file, boards_file;
    int capacity = 0;

    void attach(CLI::App* cmd) {
        expr.attach(cmd);
        cmd->add_option("-g,--graph-file", graph_file, "edge-list file (u v [weight] per line)");
        cmd->add_option("--boards", boards_file, "board CSV file (change-over instance)");
        cmd->add_option("--capacity", capacity, "tray capacity for --boards (default: bit count)");
    }

    bool is_boards() const { return !boards_file.empty(); }

    Graph load() const {
        int sources = int(expr.given()) + int(!graph_file.empty()) + int(!boards_file.empty());
        if (sources != 1)
            throw CLI::ValidationError("need exactly one input: -e/-f, -g, or --boards");
        copath_graph* g = nullptr;
        int rc;
        if (expr.given()) {
            Expr e = expr.load();
            rc = copath_expr_graph(e.get(), &g);
        } else if (!graph_file.empty()) {
            rc = copath_graph_read(read_file(graph_file).c_str(), &g);
        } else {
            rc = copath_graph_boards(read_file(boards_file).c_str(), capacity, &g);
        }
        if (rc != COPATH_OK)
            throw rc;
        return Graph(g);
    }
};

int print_cover(const copath_cover* c, const std::string& format) {
    CStr out;
    char* raw = nullptr;
    int rc = format == "text" ? copath_cover_to_text(c, &raw) : copath_cover_to_json(c, &raw);
    out.reset(raw);
    if (rc != COPATH_OK)
        return report(rc);
    std::cout << out.get();
    if (format != "text")
        std::cout << "\n";
    return 0;
}

int resolve_start(const copath_graph* g, const std::string& name) {
    int id = -1;
    int rc = copath_graph_vertex_id(g, name.c_str(), &id);
    if (rc != COPATH_OK)
        throw rc;
    return id;
}

// ---- subcommand bodies --------------------------------------------------

int run_parse(const ExprInput& in) {
    Expr e = in.load();
    CStr text;
    char* raw = nullptr;
    int rc = copath_expr_to_string(e.get(), &raw);
    text.reset(raw);
    if (rc != COPATH_OK)
        return report(rc);
    int64_t verts = 0, edges = 0;
    rc = copath_expr_counts(e.get(), &verts, &edges);
    if (rc != COPATH_OK)
        return report(rc);
    std::cout << text.get() << "\n";
    std::cout << "vertices=" << verts << " edges=" << edges << "\n";
    return 0;
}

int run_values(const ExprInput& in, const TerminalInput& terms) {
    Expr e = in.load();
    terms.bind(e.get());
    int64_t p = 0, s = 0;
    int rc = copath_expr_values(e.get(), &p, &s);
    if (rc != COPATH_OK)
        return report(rc);
    std::cout << "p=" << p << " s=" << s << "\n";
    return 0;
}

int run_cover(const ExprInput& in, const TerminalInput& terms, const std::string& format) {
    Expr e = in.load();
    terms.bind(e.get());
    copath_cover* c = nullptr;
    int rc = copath_expr_cover(e.get(), &c);
    Cover cover(c);
    if (rc != COPATH_OK)
        return report(rc);
    return print_cover(cover.get(), format);
}

int run_ham_path(const ExprInput& in, const std::string& format) {
    Expr e = in.load();
    copath_cover* c = nullptr;
    int rc = copath_expr_ham_path(e.get(), &c);
    Cover cover(c);
    if (rc != COPATH_OK)
        return report(rc);
    return print_cover(cover.get(), format);
}

int run_steiner_path(const ExprInput& in, const TerminalInput& terms,
                     const std::string& format) {
    Expr e = in.load();
    terms.bind(e.get());
    copath_cover* c = nullptr;
    int rc = copath_expr_steiner_path(e.get(), &c);
    Cover cover(c);
    if (rc != COPATH_OK)
        return report(rc);
    int64_t size = 0;
    copath_cover_stats(cover.get(), &size, nullptr, nullptr);
    if (size == 0) {
        std::cout << "no terminals: the empty path suffices\n";
        return 0;
    }
    return print_cover(cover.get(), format);
}

int run_check_cover(const ExprInput& in, const TerminalInput& terms,
                    const std::string& cover_file, bool normal_form) {
    Expr e = in.load();
    terms.bind(e.get());
    copath_graph* graw = nullptr;
    int rc = copath_expr_graph(e.get(), &graw);
    Graph g(graw);
    if (rc != COPATH_OK)
        return report(rc);
    copath_cover* craw = nullptr;
    rc = copath_cover_read_json(g.get(), read_file(cover_file).c_str(), &craw);
    Cover cover(craw);
    if (rc != COPATH_OK)
        return report(rc);
    // the terminal set is whatever was bound on the expression
    std::vector<std::string> ns;
    {
        CStr tn;
        char* raw = nullptr;
        rc = copath_expr_terminal_names(e.get(), &raw);
        tn.reset(raw);
        if (rc != COPATH_OK)
            return report(rc);
        std::istringstream is(tn.get());
        std::string tok;
        while (is >> tok)
            ns.push_back(tok);
    }
    auto view = c_view(ns);
    CStr verdict;
    char* vraw = nullptr;
    int ok = 0;
    rc = copath_cover_check(g.get(), view.data(), view.size(), cover.get(), &vraw, &ok);
    verdict.reset(vraw);
    if (rc != COPATH_OK)
        return report(rc);
    std::cout << verdict.get() << "\n";
    if (!ok)
        return 1;
    if (normal_form) {
        CStr rep;
        char* rraw = nullptr;
        int clean = 0;
        rc = copath_expr_check_normal_form(e.get(), cover.get(), &rraw, &clean);
        rep.reset(rraw);
        if (rc != COPATH_OK)
            return report(rc);
        if (clean)
            std::cout << "normal form: clean\n";
        else
            std::cout << "normal form violations:\n" << rep.get();
    }
    return 0;
}

int run_oracle(const std::string& kind, const GraphInput& gin, const TerminalInput& terms,
               int limit, const std::string& start, bool no_start,
               const std::string& format) {
    Graph g = gin.load();
    if (kind == "ham") {
        int sid = -1;
        if (!start.empty())
            sid = resolve_start(g.get(), start);
        else if (gin.is_boards() && !no_start)
            sid = resolve_start(g.get(), "b0");
        copath_cover* craw = nullptr;
        double cost = 0.0;
        int rc = copath_oracle_ham(g.get(), limit, sid, &craw, &cost);
        Cover cover(craw);
        if (rc != COPATH_OK)
            return report(rc);
        std::cout << "cost=" << cost << "\n";
        return print_cover(cover.get(), format.empty() ? "text" : format);
    }
    auto ns = terms.resolve(g.get());
    auto view = c_view(ns);
    if (kind == "cover") {
        copath_cover* craw = nullptr;
        int rc = copath_oracle_cover(g.get(), view.data(), view.size(), limit, &craw);
        Cover cover(craw);
        if (rc != COPATH_OK)
            return report(rc);
        return print_cover(cover.get(), format.empty() ? "json" : format);
    }
    // kind == "path"
    copath_cover* craw = nullptr;
    double cost = 0.0;
    int rc = copath_oracle_path(g.get(), view.data(), view.size(), limit, &craw, &cost);
    Cover cover(craw);
    if (rc != COPATH_OK)
        return report(rc);
    std::cout << "cost=" << cost << "\n";
    return print_cover(cover.get(), format.empty() ? "text" : format);
}

int build_model(const std::string& kind, const GraphInput& gin, const TerminalInput& terms,
                const std::string& start, bool no_start, Graph& g_out, Model& m_out) {
    Graph g = gin.load();
    copath_model* mraw = nullptr;
    int rc;
    if (kind == "hp") {
        int sid = -1;
        if (!no_start) {
            if (!start.empty())
                sid = resolve_start(g.get(), start);
            else if (gin.is_boards())
                sid = resolve_start(g.get(), "b0");  // pin the all-zero board first
        }
        rc = copath_model_hp(g.get(), sid, &mraw);
    } else {
        auto ns = terms.resolve(g.get());
        auto view = c_view(ns);
        rc = kind == "sp" ? copath_model_sp(g.get(), view.data(), view.size(), &mraw)
                          : copath_model_spc(g.get(), view.data(), view.size(), &mraw);
    }
    Model m(mraw);
    if (rc != COPATH_OK)
        return report(rc);
    g_out = std::move(g);
    m_out = std::move(m);
    return -1;  // means: proceed
}

int run_emit_ip(const std::string& kind, const GraphInput& gin, const TerminalInput& terms,
                const std::string& start, bool no_start, const std::string& out_path) {
    Graph g;
    Model m;
    int rc = build_model(kind, gin, terms, start, no_start, g, m);
    if (rc >= 0)
        return rc;
    CStr lp;
    char* raw = nullptr;
    int rc2 = copath_model_lp(m.get(), &raw);
    lp.reset(raw);
    if (rc2 != COPATH_OK)
        return report(rc2);
    if (out_path.empty()) {
        std::cout << lp.get();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw CLI::ValidationError("cannot write " + out_path);
        out << lp.get();
    }
    return 0;
}

int run_solve_ip(const std::string& kind, const GraphInput& gin, const TerminalInput& terms,
                 const std::string& start, bool no_start, int limit,
                 const std::string& format) {
    Graph g;
    Model m;
    int rc = build_model(kind, gin, terms, start, no_start, g, m);
    if (rc >= 0)
        return rc;
    double obj = 0.0;
    copath_cover* craw = nullptr;
    int rc2 = copath_model_solve(m.get(), limit, &obj, &craw);
    Cover cover(craw);
    if (rc2 != COPATH_OK)
        return report(rc2);
    std::cout << "objective=" << obj << "\n";
    return print_cover(cover.get(), format.empty() ? "text" : format);
}

int run_gen(const std::string& kind, int n, int m, int t, double prob, double order_prob,
            bool balanced, std::uint64_t seed, int count, int capacity, bool weighted) {
    if (kind == "cograph") {
        copath_expr* eraw = nullptr;
        int rc = copath_expr_random(t, n, prob, order_prob, balanced ? 1 : 0, seed, &eraw);
        Expr e(eraw);
        if (rc != COPATH_OK)
            return report(rc);
        CStr text, tn;
        char* raw = nullptr;
        rc = copath_expr_to_string(e.get(), &raw);
        text.reset(raw);
        if (rc != COPATH_OK)
            return report(rc);
        raw = nullptr;
        rc = copath_expr_terminal_names(e.get(), &raw);
        tn.reset(raw);
        if (rc != COPATH_OK)
            return report(rc);
        std::cout << text.get() << "\n";
        std::cout << "# terminals: " << tn.get() << "\n";
        return 0;
    }
    if (kind == "bipartite") {
        copath_expr* eraw = nullptr;
        int rc = copath_expr_bipartite(n, m, &eraw);
        Expr e(eraw);
        if (rc != COPATH_OK)
            return report(rc);
        CStr text;
        char* raw = nullptr;
        rc = copath_expr_to_string(e.get(), &raw);
        text.reset(raw);
        if (rc != COPATH_OK)
            return report(rc);
        std::cout << text.get() << "\n";
        return 0;
    }
    if (kind == "tournament") {
        copath_graph* graw = nullptr;
        int rc = copath_graph_tournament(n, seed, weighted ? 1 : 0, &graw);
        Graph g(graw);
        if (rc != COPATH_OK)
            return report(rc);
        CStr text;
        char* raw = nullptr;
        rc = copath_graph_write(g.get(), &raw);
        text.reset(raw);
        if (rc != COPATH_OK)
            return report(rc);
        std::cout << text.get();
        return 0;
    }
    // boards: `count` random rows of m bits with 1..capacity ones each
    if (m < 1 || count < 1)
        throw CLI::ValidationError("gen boards needs -m >= 1 and --count >= 1");
    int cap = capacity > 0 ? capacity : m;
    if (cap > m)
        cap = m;
    // simple deterministic generator, same engine as the library
    std::mt19937_64 rng(seed);
    for (int b = 0; b < count; ++b) {
        int ones = 1 + int(rng() % std::uint64_t(cap));
        std::vector<int> pos(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            pos[size_t(i)] = i;
        for (int i = 0; i < ones; ++i)
            std::swap(pos[size_t(i)], pos[size_t(i) + rng() % std::uint64_t(m - i)]);
        std::string row(size_t(m), '0');
        for (int i = 0; i < ones; ++i)
            row[size_t(pos[size_t(i)])] = '1';
        for (int i = 0; i < m; ++i) {
            if (i)
                std::cout << ",";
            std::cout << row[size_t(i)];
        }
        std::cout << "\n";
    }
    return 0;
}

int run_bench(const std::string& sizes_csv, std::uint64_t seed, double prob) {
    std::vector<int> sizes;
    for (const auto& s : split_commas(sizes_csv))
        sizes.push_back(std::stoi(s));
    std::cout << "leaves,millis\n";
    for (int n : sizes) {
        copath_expr* eraw = nullptr;
        int rc = copath_expr_random(std::max(1, n / 2), n, prob, 0.0, 1, seed, &eraw);
        Expr e(eraw);
        if (rc != COPATH_OK)
            return report(rc);
        auto t0 = std::chrono::steady_clock::now();
        int64_t p = 0, s = 0;
        rc = copath_expr_values(e.get(), &p, &s);
        if (rc != COPATH_OK)
            return report(rc);
        copath_cover* craw = nullptr;
        rc = copath_expr_cover(e.get(), &craw);
        Cover cover(craw);
        if (rc != COPATH_OK)
            return report(rc);
        auto t1 = std::chrono::steady_clock::now();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        std::cout << n << "," << ms << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed Steiner path covers on co-graphs"};
    app.require_subcommand(1);

    // parse
    auto* p_parse = app.add_subcommand("parse", "normalize a co-expression, count vertices/edges");
    ExprInput parse_in;
    parse_in.attach(p_parse);

    // values
    auto* p_values = app.add_subcommand("values", "optimal cover values p and s");
    ExprInput values_in;
    TerminalInput values_t;
    values_in.attach(p_values);
    values_t.attach(p_values);

    // cover
    auto* p_cover = app.add_subcommand("cover", "build an optimal cover");
    ExprInput cover_in;
    TerminalInput cover_t;
    std::string cover_fmt = "json";
    cover_in.attach(p_cover);
    cover_t.attach(p_cover);
    p_cover->add_option("--format", cover_fmt, "json|text")->check(CLI::IsMember({"json", "text"}));

    // ham-path
    auto* p_ham = app.add_subcommand("ham-path", "directed Hamiltonian path, if one exists");
    ExprInput ham_in;
    std::string ham_fmt = "text";
    ham_in.attach(p_ham);
    p_ham->add_option("--format", ham_fmt, "json|text")->check(CLI::IsMember({"json", "text"}));

    // steiner-path
    auto* p_sp = app.add_subcommand("steiner-path", "single path through all terminals");
    ExprInput sp_in;
    TerminalInput sp_t;
    std::string sp_fmt = "text";
    sp_in.attach(p_sp);
    sp_t.attach(p_sp);
    p_sp->add_option("--format", sp_fmt, "json|text")->check(CLI::IsMember({"json", "text"}));

    // check-cover
    auto* p_check = app.add_subcommand("check-cover", "validate a cover (JSON) against an expression");
    ExprInput check_in;
    TerminalInput check_t;
    std::string check_cover_file;
    bool check_nf = false;
    check_in.attach(p_check);
    check_t.attach(p_check);
    p_check->add_option("cover", check_cover_file, "cover JSON file")->required();
    p_check->add_flag("--normal-form", check_nf, "also report forbidden-structure findings");

    // oracle
    auto* p_oracle = app.add_subcommand("oracle", "exhaustive reference searches");
    p_oracle->require_subcommand(1);
    struct OracleOpts {
        GraphInput gin;
        TerminalInput terms;
        int limit = 0;
        std::string start, fmt;
        bool no_start = false;
    };
    auto oracle_opts = std::make_shared<OracleOpts>();
    std::string oracle_kind;
    for (const char* kind : {"cover", "ham", "path"}) {
        auto* sub = p_oracle->add_subcommand(kind);
        sub->parse_complete_callback([&oracle_kind, kind] { oracle_kind = kind; });
        oracle_opts->gin.attach(sub);
        oracle_opts->terms.attach(sub);
        sub->add_option("--limit", oracle_opts->limit, "vertex cap (0 = default)");
        sub->add_option("--start", oracle_opts->start, "forced first vertex (ham)");
        sub->add_flag("--no-start", oracle_opts->no_start, "never pin a start vertex (ham)");
        sub->add_option("--format", oracle_opts->fmt, "json|text");
    }

    // emit-ip / solve-ip
    struct IpOpts {
        GraphInput gin;
        TerminalInput terms;
        std::string start, out_path, fmt;
        bool no_start = false;
        int limit = 0;
    };
    auto* p_emit = app.add_subcommand("emit-ip", "write an integer program in LP format");
    p_emit->require_subcommand(1);
    auto emit_opts = std::make_shared<IpOpts>();
    std::string emit_kind;
    for (const char* kind : {"hp", "sp", "spc"}) {
        auto* sub = p_emit->add_subcommand(kind);
        sub->parse_complete_callback([&emit_kind, kind] { emit_kind = kind; });
        emit_opts->gin.attach(sub);
        emit_opts->terms.attach(sub);
        sub->add_option("--start", emit_opts->start, "pin this vertex first (hp)");
        sub->add_flag("--no-start", emit_opts->no_start, "never pin a start vertex (hp)");
        sub->add_option("-o,--output", emit_opts->out_path, "write to file instead of stdout");
    }
    auto* p_solve = app.add_subcommand("solve-ip", "solve a small model exactly");
    p_solve->require_subcommand(1);
    auto solve_opts = std::make_shared<IpOpts>();
    std::string solve_kind;
    for (const char* kind : {"hp", "sp", "spc"}) {
        auto* sub = p_solve->add_subcommand(kind);
        sub->parse_complete_callback([&solve_kind, kind] { solve_kind = kind; });
        solve_opts->gin.attach(sub);
        solve_opts->terms.attach(sub);
        sub->add_option("--start", solve_opts->start, "pin this vertex first (hp)");
        sub->add_flag("--no-start", solve_opts->no_start, "never pin a start vertex (hp)");
        sub->add_option("--limit", solve_opts->limit, "binary-variable cap (0 = default 30)");
        sub->add_option("--format", solve_opts->fmt, "json|text");
    }

    // gen
    auto* p_gen = app.add_subcommand("gen", "instance generators");
    p_gen->require_subcommand(1);
    struct GenOpts {
        int n = 8, m = 4, t = -1, count = 4, capacity = 0;
        double prob = 1.0 / 3.0, order_prob = 0.0;
        bool balanced = false, weighted = false;
        std::uint64_t seed = 1;
    };
    auto gen_opts = std::make_shared<GenOpts>();
    std::string gen_kind;
    for (const char* kind : {"cograph", "bipartite", "tournament", "boards"}) {
        auto* sub = p_gen->add_subcommand(kind);
        sub->parse_complete_callback([&gen_kind, kind] { gen_kind = kind; });
        sub->add_option("-n", gen_opts->n, "vertex count (left side for bipartite)");
        sub->add_option("-m", gen_opts->m, "right side size (bipartite) / bits per board");
        sub->add_option("-t", gen_opts->t, "terminal count (default: all)");
        sub->add_option("--prob", gen_opts->prob, "union probability (default 1/3)");
        sub->add_option("--order-prob", gen_opts->order_prob, "order probability (default 0)");
        sub->add_flag("--balanced", gen_opts->balanced, "midpoint splits");
        sub->add_option("--seed", gen_opts->seed, "64-bit seed");
        sub->add_option("--count", gen_opts->count, "number of boards");
        sub->add_option("--capacity", gen_opts->capacity, "max ones per board");
        sub->add_flag("--weighted", gen_opts->weighted, "random weights (tournament)");
    }

    // bench
    auto* p_bench = app.add_subcommand("bench", "linearity sweep, CSV of leaves vs wall time");
    std::string bench_sizes = "10000,100000,1000000";
    std::uint64_t bench_seed = 1;
    double bench_prob = 1.0 / 3.0;
    p_bench->add_option("--sizes", bench_sizes, "comma-separated leaf counts");
    p_bench->add_option("--seed", bench_seed, "64-bit seed");
    p_bench->add_option("--prob", bench_prob, "union probability");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*p_parse)
            return run_parse(parse_in);
        if (*p_values)
            return run_values(values_in, values_t);
        if (*p_cover)
            return run_cover(cover_in, cover_t, cover_fmt);
        if (*p_ham)
            return run_ham_path(ham_in, ham_fmt);
        if (*p_sp)
            return run_steiner_path(sp_in, sp_t, sp_fmt);
        if (*p_check)
            return run_check_cover(check_in, check_t, check_cover_file, check_nf);
        if (*p_oracle)
            return run_oracle(oracle_kind, oracle_opts->gin, oracle_opts->terms,
                              oracle_opts->limit, oracle_opts->start, oracle_opts->no_start, oracle_opts->fmt);
        if (*p_emit)
            return run_emit_ip(emit_kind, emit_opts->gin, emit_opts->terms, emit_opts->start,
                               emit_opts->no_start, emit_opts->out_path);
        if (*p_solve)
            return run_solve_ip(solve_kind, solve_opts->gin, solve_opts->terms,
                                solve_opts->start, solve_opts->no_start, solve_opts->limit,
                                solve_opts->fmt);
        if (*p_gen) {
            int t = gen_opts->t < 0 ? gen_opts->n : gen_opts->t;
            return run_gen(gen_kind, gen_opts->n, gen_opts->m, t, gen_opts->prob,
                           gen_opts->order_prob, gen_opts->balanced, gen_opts->seed,
                           gen_opts->count, gen_opts->capacity, gen_opts->weighted);
        }
        if (*p_bench)
            return run_bench(bench_sizes, bench_seed, bench_prob);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (int rc) {
        return report(rc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
