#include "core/ip.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

namespace copath {

namespace {

// shared constraint plumbing: drops constraints whose terms all vanished and
// are trivially true, keeps impossible ones as a zero-coefficient marker
void add_con(IpModel& m, std::vector<IpTerm> terms, Rel rel, double rhs) {
    if (terms.empty()) {
        bool sat = rel == Rel::Le ? 0.0 <= rhs : rel == Rel::Ge ? 0.0 >= rhs : rhs == 0.0;
        if (sat)
            return;
        terms.push_back(IpTerm{0.0, 0});  // infeasibility marker
    }
    m.cons.push_back(IpConstraint{std::move(terms), rel, rhs});
}

int add_var(IpModel& m, std::string name, VarKind kind, long long lb, long long ub,
            VarRole role, int a, int b) {
    IpVar v;
    v.name = std::move(name);
    v.kind = kind;
    v.lb = lb;
    v.ub = ub;
    v.role = role;
    v.a = a;
    v.b = b;
    m.vars.push_back(std::move(v));
    return static_cast<int>(m.vars.size()) - 1;
}

std::string xname(int i, int j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

} // namespace

IpModel build_hp_model(const DiGraph& g, int start) {
    int n = g.vertex_count();
    if (n == 0)
        throw input_error("build_hp_model: empty graph");
    if (start >= n)
        throw input_error("build_hp_model: start vertex out of range");
    IpModel m;
    m.name = "hp";
    auto es = g.edges();
    std::map<std::pair<int, int>, int> x;
    for (auto [i, j] : es)
        x[{i, j}] = add_var(m, xname(i, j), VarKind::Binary, 0, 1, VarRole::EdgeX, i, j);
    std::vector<int> p(n);
    for (int v = 0; v < n; ++v) {
        // chosen edges force positions up by exactly one, so a full path sits
        // at q, q+1, ..., q+n-1.  Pinning a start vertex to position 1 only
        // makes it first when no vertex may take position 0, hence the raised
        // lower bound in that case.
        long long lb = start >= 0 ? 1 : 0;
        long long ub = v == start ? 1 : n;
        p[v] = add_var(m, "p_" + std::to_string(v), VarKind::Integer, lb, ub, VarRole::PosP, v, -1);
    }
    // the path leaves and enters every vertex at most once
    for (int i = 0; i < n; ++i) {
        std::vector<IpTerm> ts;
        for (int j : g.out(i))
            ts.push_back({1.0, x[{i, j}]});
        add_con(m, std::move(ts), Rel::Le, 1.0);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<IpTerm> ts;
        for (int i : g.in(j))
            ts.push_back({1.0, x[{i, j}]});
        add_con(m, std::move(ts), Rel::Le, 1.0);
    }
    // at most one of two anti-parallel edges
    for (auto [i, j] : es)
        if (g.has_edge(j, i))
            add_con(m, {{1.0, x[{i, j}]}, {1.0, x[{j, i}]}}, Rel::Le, 1.0);
    // a Hamiltonian path has n-1 edges
    {
        std::vector<IpTerm> ts;
        for (auto [i, j] : es)
            ts.push_back({1.0, x[{i, j}]});
        add_con(m, std::move(ts), Rel::Eq, n - 1.0);
    }
    // chosen edges force consecutive positions, which rules out cycles
    for (auto [i, j] : es)
        add_con(m, {{1.0, p[j]}, {-1.0, p[i]}, {-(n + 1.0), x[{i, j}]}}, Rel::Ge, -double(n));
    for (auto [i, j] : es)
        add_con(m, {{1.0, p[j]}, {-1.0, p[i]}, {n - 1.0, x[{i, j}]}}, Rel::Le, double(n));
    for (auto [i, j] : es)
        m.objective.push_back({g.weight(i, j), x[{i, j}]});
    return m;
}

IpModel build_sp_model(const DiGraph& g, const TerminalSet& t) {
    int n = g.vertex_count();
    if (n == 0)
        throw input_error("build_sp_model: empty graph");
    if (t.verts.empty())
        throw input_error("build_sp_model: empty terminal set");
    IpModel m;
    m.name = "sp";
    auto es = g.edges();
    std::vector<char> term = t.mask(n);
    std::map<std::pair<int, int>, int> x;
    for (auto [i, j] : es)
        x[{i, j}] = add_var(m, xname(i, j), VarKind::Binary, 0, 1, VarRole::EdgeX, i, j);
    std::vector<int> p(n), y(n);
    for (int v = 0; v < n; ++v)
        p[v] = add_var(m, "p_" + std::to_string(v), VarKind::Integer, 0, n, VarRole::PosP, v, -1);
    for (int v = 0; v < n; ++v)
        y[v] = add_var(m, "y_" + std::to_string(v), VarKind::Binary, 0, 1, VarRole::UseY, v, -1);
    // every terminal lies on the path
    for (int v : t.verts)
        add_con(m, {{1.0, p[v]}}, Rel::Ge, 1.0);
    // a chosen edge puts both endpoints on the path
    for (auto [i, j] : es)
        add_con(m, {{1.0, x[{i, j}]}, {-1.0, p[i]}}, Rel::Le, 0.0);
    for (auto [i, j] : es)
        add_con(m, {{1.0, x[{i, j}]}, {-1.0, p[j]}}, Rel::Le, 0.0);
    // at most one of two anti-parallel edges
    for (auto [i, j] : es)
        if (g.has_edge(j, i))
            add_con(m, {{1.0, x[{i, j}]}, {1.0, x[{j, i}]}}, Rel::Le, 1.0);
    // y marks the used vertices
    for (int v = 0; v < n; ++v)
        add_con(m, {{1.0, y[v]}, {-1.0, p[v]}}, Rel::Le, 0.0);
    for (int v = 0; v < n; ++v)
        add_con(m, {{1.0, p[v]}, {-double(n), y[v]}}, Rel::Le, 0.0);
    // one edge less than used vertices
    {
        std::vector<IpTerm> ts;
        for (auto [i, j] : es)
            ts.push_back({1.0, x[{i, j}]});
        for (int v = 0; v < n; ++v)
            ts.push_back({-1.0, y[v]});
        add_con(m, std::move(ts), Rel::Eq, -1.0);
    }
    // a used vertex needs an incident chosen edge (skipped when isolated)
    for (int v = 0; v < n; ++v) {
        if (g.out(v).empty() && g.in(v).empty())
            continue;
        std::vector<IpTerm> ts{{1.0, p[v]}};
        for (int j : g.out(v))
            ts.push_back({-double(n), x[{v, j}]});
        for (int i : g.in(v))
            ts.push_back({-double(n), x[{i, v}]});
        add_con(m, std::move(ts), Rel::Le, 0.0);
    }
    // used non-terminals are interior: degree exactly y on both sides
    for (int v = 0; v < n; ++v) {
        if (term[v])
            continue;
        std::vector<IpTerm> ts;
        for (int j : g.out(v))
            ts.push_back({1.0, x[{v, j}]});
        ts.push_back({-1.0, y[v]});
        add_con(m, std::move(ts), Rel::Eq, 0.0);
    }
    for (int v = 0; v < n; ++v) {
        if (term[v])
            continue;
        std::vector<IpTerm> ts;
        for (int i : g.in(v))
            ts.push_back({1.0, x[{i, v}]});
        ts.push_back({-1.0, y[v]});
        add_con(m, std::move(ts), Rel::Eq, 0.0);
    }
    // terminals have degree at most one on each side
    for (int v : t.verts) {
        std::vector<IpTerm> ts;
        for (int j : g.out(v))
            ts.push_back({1.0, x[{v, j}]});
        add_con(m, std::move(ts), Rel::Le, 1.0);
    }
    for (int v : t.verts) {
        std::vector<IpTerm> ts;
        for (int i : g.in(v))
            ts.push_back({1.0, x[{i, v}]});
        add_con(m, std::move(ts), Rel::Le, 1.0);
    }
    // a vertex with a chosen edge has position at least one
    for (int v = 0; v < n; ++v) {
        std::vector<IpTerm> ts;
        for (int j : g.out(v))
            ts.push_back({1.0, x[{v, j}]});
        ts.push_back({-1.0, p[v]});
        add_con(m, std::move(ts), Rel::Le, 0.0);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<IpTerm> ts;
        for (int i : g.in(v))
            ts.push_back({1.0, x[{i, v}]});
        ts.push_back({-1.0, p[v]});
        add_con(m, std::move(ts), Rel::Le, 0.0);
    }
    // chosen edges force consecutive positions
    for (auto [i, j] : es)
        add_con(m, {{1.0, p[j]}, {-1.0, p[i]}, {-(n + 1.0), x[{i, j}]}}, Rel::Ge, -double(n));
    for (auto [i, j] : es)
        add_con(m, {{1.0, p[j]}, {-1.0, p[i]}, {n - 1.0, x[{i, j}]}}, Rel::Le, double(n));
    for (auto [i, j] : es)
        m.objective.push_back({g.weight(i, j), x[{i, j}]});
    return m;
}

double spc_big_m(const DiGraph& g) {
    if (!g.weighted())
        return double(g.vertex_count()) * double(g.edge_count());
    double mx = 0.0;
    for (auto [i, j] : g.edges())
        mx = std::max(mx, g.weight(i, j));
    return double(g.vertex_count()) * mx;
}

IpModel build_spc_model(const DiGraph& g, const TerminalSet& t) {
    int n = g.vertex_count();
    if (n == 0)
        throw input_error("build_spc_model: empty graph");
    if (t.verts.empty())
        throw input_error("build_spc_model: empty terminal set");
    IpModel m;
    m.name = "spc";
    int src = n, snk = n + 1;
    double bigm = spc_big_m(g);
    auto es = g.edges();
    std::vector<char> term = t.mask(n);
    std::map<std::pair<int, int>, int> x;
    for (auto [i, j] : es)
        x[{i, j}] = add_var(m, xname(i, j), VarKind::Binary, 0, 1, VarRole::EdgeX, i, j);
    for (int v : t.verts)
        x[{src, v}] = add_var(m, xname(src, v), VarKind::Binary, 0, 1, VarRole::EdgeX, src, v);
    for (int v : t.verts)
        x[{v, snk}] = add_var(m, xname(v, snk), VarKind::Binary, 0, 1, VarRole::EdgeX, v, snk);
    std::vector<int> p(n);
    for (int v = 0; v < n; ++v)
        p[v] = add_var(m, "p_" + std::to_string(v), VarKind::Integer, 0, n, VarRole::PosP, v, -1);
    // at least one path leaves the source and one reaches the sink
    {
        std::vector<IpTerm> ts;
        for (int v : t.verts)
            ts.push_back({1.0, x[{src, v}]});
        add_con(m, std::move(ts), Rel::Ge, 1.0);
    }
    {
        std::vector<IpTerm> ts;
        for (int v : t.verts)
            ts.push_back({1.0, x[{v, snk}]});
        add_con(m, std::move(ts), Rel::Ge, 1.0);
    }
    // with the source and sink edges, terminals have degree exactly one
    for (int v : t.verts) {
        std::vector<IpTerm> ts;
        for (int j : g.out(v))
            ts.push_back({1.0, x[{v, j}]});
        ts.push_back({1.0, x[{v, snk}]});
        add_con(m, std::move(ts), Rel::Eq, 1.0);
    }
    for (int v : t.verts) {
        std::vector<IpTerm> ts;
        for (int i : g.in(v))
            ts.push_back({1.0, x[{i, v}]});
        ts.push_back({1.0, x[{src, v}]});
        add_con(m, std::move(ts), Rel::Eq, 1.0);
    }
    // non-terminals are used at most once
    for (int v = 0; v < n; ++v) {
        if (term[v])
            continue;
        std::vector<IpTerm> ts;
        for (int j : g.out(v))
            ts.push_back({1.0, x[{v, j}]});
        add_con(m, std::move(ts), Rel::Le, 1.0);
    }
    for (int v = 0; v < n; ++v) {
        if (term[v])
            continue;
        std::vector<IpTerm> ts;
        for (int i : g.in(v))
            ts.push_back({1.0, x[{i, v}]});
        add_con(m, std::move(ts), Rel::Le, 1.0);
    }
    // a used non-terminal is passed through
    for (int v = 0; v < n; ++v) {
        if (term[v])
            continue;
        std::vector<IpTerm> ts;
        for (int i : g.in(v))
            ts.push_back({1.0, x[{i, v}]});
        for (int j : g.out(v))
            ts.push_back({-1.0, x[{v, j}]});
        add_con(m, std::move(ts), Rel::Eq, 0.0);
    }
    // at most one of two anti-parallel edges
    for (auto [i, j] : es)
        if (g.has_edge(j, i))
            add_con(m, {{1.0, x[{i, j}]}, {1.0, x[{j, i}]}}, Rel::Le, 1.0);
    // every terminal lies on a path
    for (int v : t.verts)
        add_con(m, {{1.0, p[v]}}, Rel::Ge, 1.0);
    // a chosen edge puts its real endpoints on a path
    for (auto [i, j] : es)
        add_con(m, {{1.0, x[{i, j}]}, {-1.0, p[i]}}, Rel::Le, 0.0);
    for (int v : t.verts)
        add_con(m, {{1.0, x[{v, snk}]}, {-1.0, p[v]}}, Rel::Le, 0.0);
    for (auto [i, j] : es)
        add_con(m, {{1.0, x[{i, j}]}, {-1.0, p[j]}}, Rel::Le, 0.0);
    for (int v : t.verts)
        add_con(m, {{1.0, x[{src, v}]}, {-1.0, p[v]}}, Rel::Le, 0.0);
    // a used vertex needs an incident chosen edge (skipped when isolated)
    for (int v = 0; v < n; ++v) {
        bool incident = !g.out(v).empty() || !g.in(v).empty() || term[v];
        if (!incident)
            continue;
        std::vector<IpTerm> ts{{1.0, p[v]}};
        for (int j : g.out(v))
            ts.push_back({-double(n), x[{v, j}]});
        if (term[v])
            ts.push_back({-double(n), x[{v, snk}]});
        for (int i : g.in(v))
            ts.push_back({-double(n), x[{i, v}]});
        if (term[v])
            ts.push_back({-double(n), x[{src, v}]});
        add_con(m, std::move(ts), Rel::Le, 0.0);
    }
    // chosen real edges force consecutive positions
    for (auto [i, j] : es)
        add_con(m, {{1.0, p[j]}, {-1.0, p[i]}, {-(n + 1.0), x[{i, j}]}}, Rel::Ge, -double(n));
    for (auto [i, j] : es)
        add_con(m, {{1.0, p[j]}, {-1.0, p[i]}, {n - 1.0, x[{i, j}]}}, Rel::Le, double(n));
    for (auto [i, j] : es)
        m.objective.push_back({g.weighted() ? g.weight(i, j) : 1.0, x[{i, j}]});
    for (int v : t.verts)
        m.objective.push_back({bigm, x[{src, v}]});
    for (int v : t.verts)
        m.objective.push_back({bigm, x[{v, snk}]});
    return m;
}

namespace {

std::string fmt_num(double v) {
    double r = std::round(v);
    if (v == r && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(r));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_terms(std::string& out, const IpModel& m, const std::vector<IpTerm>& terms) {
    bool first = true;
    for (const IpTerm& t : terms) {
        double c = t.coef;
        if (first) {
            if (c < 0) {
                out += "- ";
                c = -c;
            }
            if (c != 1.0)
                out += fmt_num(c) + " ";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
            if (c != 1.0)
                out += fmt_num(c) + " ";
        }
        out += m.vars[t.var].name;
    }
}

} // namespace

std::string emit_lp(const IpModel& m) {
    std::string out = "\\ Problem: " + m.name + "\n";
    out += "Minimize\n obj: ";
    if (m.objective.empty()) {
        out += "0 " + m.vars.at(0).name;
    } else {
        append_terms(out, m, m.objective);
    }
    out += "\nSubject To\n";
    int idx = 0;
    for (const IpConstraint& c : m.cons) {
        out += " c" + std::to_string(++idx) + ": ";
        append_terms(out, m, c.terms);
        out += c.rel == Rel::Le ? " <= " : c.rel == Rel::Ge ? " >= " : " = ";
        out += fmt_num(c.rhs);
        out += "\n";
    }
    std::string bounds, generals, binaries;
    for (const IpVar& v : m.vars) {
        if (v.kind == VarKind::Integer) {
            if (v.lb == v.ub)
                bounds += " " + v.name + " = " + std::to_string(v.lb) + "\n";
            else
                bounds += " " + std::to_string(v.lb) + " <= " + v.name + " <= "
                          + std::to_string(v.ub) + "\n";
            generals += " " + v.name + "\n";
        } else {
            binaries += " " + v.name + "\n";
        }
    }
    if (!bounds.empty())
        out += "Bounds\n" + bounds;
    if (!generals.empty())
        out += "Generals\n" + generals;
    if (!binaries.empty())
        out += "Binaries\n" + binaries;
    out += "End\n";
    return out;
}

namespace {

long long as_int(double v, const char* what) {
    double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
        throw input_error(std::string("solve_small: non-integer ") + what);
    return static_cast<long long>(r);
}

// difference-constraint system p_b - p_a <= w solved by Bellman-Ford from a
// virtual root that carries the variable bounds
struct DiffSystem {
    int nvars;
    std::vector<std::array<long long, 3>> edges;  // from, to, weight

    explicit DiffSystem(int nv) : nvars(nv) {}

    void add(int from, int to, long long w) { edges.push_back({from, to, w}); }

    // returns least feasible values (as distances), or nothing
    std::optional<std::vector<long long>> solve() const {
        int nn = nvars + 1;  // node 0 is the root
        const long long inf = (1LL << 62);
        std::vector<long long> dist(nn, inf);
        dist[0] = 0;
        for (int pass = 0; pass < nn; ++pass) {
            bool changed = false;
            for (const auto& e : edges) {
                if (dist[e[0]] == inf)
                    continue;
                long long nd = dist[e[0]] + e[2];
                if (nd < dist[e[1]]) {
                    dist[e[1]] = nd;
                    changed = true;
                }
            }
            if (!changed)
                break;
            if (pass == nn - 1)
                return std::nullopt;  // negative cycle: infeasible
        }
        return std::vector<long long>(dist.begin() + 1, dist.end());
    }
};

} // namespace

std::optional<IpSolution> solve_small(const IpModel& m, int max_binaries) {
    std::vector<int> bins, ints;
    std::vector<int> slot(m.vars.size(), -1);
    for (std::size_t i = 0; i < m.vars.size(); ++i) {
        if (m.vars[i].kind == VarKind::Binary) {
            slot[i] = static_cast<int>(bins.size());
            bins.push_back(static_cast<int>(i));
        } else {
            slot[i] = static_cast<int>(ints.size());
            ints.push_back(static_cast<int>(i));
        }
    }
    if (static_cast<int>(bins.size()) > max_binaries)
        throw too_large_error("solve_small: " + std::to_string(bins.size())
                              + " binary variables, limit is " + std::to_string(max_binaries));

    // split constraints into a pure-binary part (interval-propagated during
    // the search) and the rest (finished per leaf via positions)
    struct BinCon {
        long long lo = 0, hi = 0, rhs = 0;
        Rel rel;
    };
    std::vector<BinCon> bc;
    struct MixCon {
        std::vector<std::pair<long long, int>> bterms;  // coef, bin slot
        std::vector<std::pair<long long, int>> iterms;  // coef, int slot
        long long rhs;
        Rel rel;
    };
    std::vector<MixCon> mc;
    // per bin slot: list of (pure-bin constraint, coef)
    std::vector<std::vector<std::pair<int, long long>>> touch(bins.size());

    for (const IpConstraint& c : m.cons) {
        bool mixed = false;
        for (const IpTerm& t : c.terms)
            if (m.vars[t.var].kind == VarKind::Integer)
                mixed = true;
        if (!mixed) {
            BinCon b;
            b.rel = c.rel;
            b.rhs = as_int(c.rhs, "right-hand side");
            int ci = static_cast<int>(bc.size());
            for (const IpTerm& t : c.terms) {
                long long k = as_int(t.coef, "constraint coefficient");
                if (k < 0)
                    b.lo += k;
                else
                    b.hi += k;
                if (k != 0)
                    touch[slot[t.var]].push_back({ci, k});
            }
            bc.push_back(b);
        } else {
            MixCon x;
            x.rel = c.rel;
            x.rhs = as_int(c.rhs, "right-hand side");
            for (const IpTerm& t : c.terms) {
                long long k = as_int(t.coef, "constraint coefficient");
                if (k == 0)
                    continue;  // markers of vanished constraints carry none
                if (m.vars[t.var].kind == VarKind::Binary)
                    x.bterms.push_back({k, slot[t.var]});
                else
                    x.iterms.push_back({k, slot[t.var]});
            }
            mc.push_back(std::move(x));
        }
    }

    // constraints no assignment can ever touch (markers, all-free intervals
    // already off the mark) decide feasibility up front
    for (const BinCon& b : bc) {
        bool can = b.rel == Rel::Le   ? b.lo <= b.rhs
                   : b.rel == Rel::Ge ? b.hi >= b.rhs
                                      : b.lo <= b.rhs && b.rhs <= b.hi;
        if (!can)
            return std::nullopt;
    }

    // objective restricted to binaries; positions never carry cost here
    std::vector<double> ocoef(bins.size(), 0.0);
    double obj_floor = 0.0;  // sum of negative coefficients (lower bound help)
    for (const IpTerm& t : m.objective) {
        if (m.vars[t.var].kind == VarKind::Integer)
            throw input_error("solve_small: integer variable in the objective");
        ocoef[slot[t.var]] += t.coef;
    }
    for (double c : ocoef)
        if (c < 0)
            obj_floor += c;

    for (const BinCon& b : bc) {
        bool ok = b.rel == Rel::Le ? b.lo <= b.rhs
                  : b.rel == Rel::Ge ? b.hi >= b.rhs
                                     : b.lo <= b.rhs && b.rhs <= b.hi;
        if (!ok)
            return std::nullopt;
    }

    std::vector<BinCon> cur = bc;
    std::vector<long long> assign(bins.size(), 0);
    bool have_best = false;
    IpSolution best;

    // leaf completion: fold the fixed binaries into the mixed constraints,
    // derive unary bounds and difference edges over the positions
    auto try_leaf = [&](double obj) {
        bool impossible = false;
        DiffSystem ds(static_cast<int>(ints.size()));
        for (std::size_t i = 0; i < ints.size(); ++i) {
            const IpVar& v = m.vars[ints[i]];
            ds.add(0, static_cast<int>(i) + 1, v.ub);   // p <= ub
            ds.add(static_cast<int>(i) + 1, 0, -v.lb);  // p >= lb
        }
        for (const MixCon& x : mc) {
            long long fixed = 0;
            for (auto [k, s] : x.bterms)
                fixed += k * assign[s];
            long long r = x.rhs - fixed;
            auto upper = [&](long long k1, int v1, long long k2, int v2, long long rr) {
                // k1 p1 + k2 p2 <= rr with the second term optional
                if (v2 < 0) {
                    if (k1 > 0)
                        ds.add(0, v1 + 1, rr >= 0 ? rr / k1 : -((-rr + k1 - 1) / k1));
                    else {
                        long long kk = -k1;  // p1 >= -rr/kk rounded up
                        long long bnd = rr >= 0 ? -(rr / kk) : (-rr + kk - 1) / kk;
                        ds.add(v1 + 1, 0, -bnd);
                    }
                    return;
                }
                if (k1 == 1 && k2 == -1)
                    ds.add(v2 + 1, v1 + 1, rr);
                else if (k1 == -1 && k2 == 1)
                    ds.add(v1 + 1, v2 + 1, rr);
                else
                    throw input_error("solve_small: unsupported constraint shape");
            };
            auto emit_le = [&](const std::vector<std::pair<long long, int>>& its, long long rr) {
                if (its.empty()) {
                    impossible |= rr < 0;  // constant constraint: 0 <= rr
                    return;
                }
                if (its.size() == 1)
                    upper(its[0].first, its[0].second, 0, -1, rr);
                else if (its.size() == 2)
                    upper(its[0].first, its[0].second, its[1].first, its[1].second, rr);
                else
                    throw input_error("solve_small: unsupported constraint shape");
            };
            if (x.rel != Rel::Ge)
                emit_le(x.iterms, r);
            if (x.rel != Rel::Le) {
                auto neg = x.iterms;
                for (auto& tt : neg)
                    tt.first = -tt.first;
                emit_le(neg, -r);
            }
        }
        if (impossible)
            return;
        auto sol = ds.solve();
        if (!sol)
            return;
        if (have_best && obj >= best.objective)
            return;
        have_best = true;
        best.objective = obj;
        best.value.assign(m.vars.size(), 0);
        for (std::size_t i = 0; i < bins.size(); ++i)
            best.value[bins[i]] = assign[i];
        for (std::size_t i = 0; i < ints.size(); ++i)
            best.value[ints[i]] = (*sol)[i];
    };

    // depth-first over the binaries, cheap interval propagation
    std::function<void(std::size_t, double)> dfs = [&](std::size_t d, double obj) {
        if (have_best && obj + obj_floor >= best.objective)
            return;
        if (d == bins.size()) {
            try_leaf(obj);
            return;
        }
        for (long long val : {0, 1}) {
            // an unfixed variable contributes [min(0,k), max(0,k)]; once
            // fixed it contributes val*k to both interval ends
            for (auto [ci, k] : touch[d]) {
                cur[ci].lo += val * k - std::min(0LL, k);
                cur[ci].hi += val * k - std::max(0LL, k);
            }
            bool ok = true;
            for (auto [ci, k] : touch[d]) {
                (void)k;
                const BinCon& b = cur[ci];
                bool cok = b.rel == Rel::Le ? b.lo <= b.rhs
                           : b.rel == Rel::Ge ? b.hi >= b.rhs
                                              : b.lo <= b.rhs && b.rhs <= b.hi;
                if (!cok) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                assign[d] = val;
                dfs(d + 1, obj + ocoef[d] * double(val));
            }
            for (auto [ci, k] : touch[d]) {
                cur[ci].lo -= val * k - std::min(0LL, k);
                cur[ci].hi -= val * k - std::max(0LL, k);
            }
        }
        assign[d] = 0;
    };
    dfs(0, 0.0);
    if (!have_best)
        return std::nullopt;
    return best;
}

namespace {

std::vector<std::pair<int, int>> chosen_edges(const IpModel& m, const IpSolution& s) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < m.vars.size(); ++i)
        if (m.vars[i].role == VarRole::EdgeX && s.value.at(i) == 1)
            es.push_back({m.vars[i].a, m.vars[i].b});
    return es;
}

} // namespace

DirectedPath decode_hp(const IpModel& m, const IpSolution& s, const DiGraph& g) {
    int n = g.vertex_count();
    auto es = chosen_edges(m, s);
    if (static_cast<int>(es.size()) != n - 1)
        throw input_error("decode_hp: wrong number of chosen edges");
    std::vector<int> next(n, -1), indeg(n, 0);
    for (auto [u, v] : es) {
        if (u < 0 || u >= n || v < 0 || v >= n || !g.has_edge(u, v))
            throw input_error("decode_hp: chosen edge not in graph");
        if (next[u] != -1)
            throw input_error("decode_hp: vertex left twice");
        next[u] = v;
        if (++indeg[v] > 1)
            throw input_error("decode_hp: vertex entered twice");
    }
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) {
            if (start != -1)
                throw input_error("decode_hp: several path starts");
            start = v;
        }
    if (start == -1)
        throw input_error("decode_hp: no path start");
    DirectedPath p;
    std::vector<char> seen(n, 0);
    for (int v = start; v != -1; v = next[v]) {
        if (seen[v])
            throw input_error("decode_hp: cycle in chosen edges");
        seen[v] = 1;
        p.verts.push_back(v);
    }
    if (static_cast<int>(p.verts.size()) != n)
        throw input_error("decode_hp: chosen edges do not span all vertices");
    return p;
}

DirectedPath decode_sp(const IpModel& m, const IpSolution& s, const DiGraph& g) {
    int n = g.vertex_count();
    std::vector<char> on(n, 0);
    long long used = 0;
    for (std::size_t i = 0; i < m.vars.size(); ++i)
        if (m.vars[i].role == VarRole::UseY && s.value.at(i) == 1) {
            on[m.vars[i].a] = 1;
            ++used;
        }
    auto es = chosen_edges(m, s);
    if (static_cast<long long>(es.size()) != used - 1)
        throw input_error("decode_sp: edge count does not match used vertices");
    std::vector<int> next(n, -1), indeg(n, 0);
    for (auto [u, v] : es) {
        if (!on[u] || !on[v] || !g.has_edge(u, v))
            throw input_error("decode_sp: chosen edge outside the used vertices");
        if (next[u] != -1)
            throw input_error("decode_sp: vertex left twice");
        next[u] = v;
        if (++indeg[v] > 1)
            throw input_error("decode_sp: vertex entered twice");
    }
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (on[v] && indeg[v] == 0) {
            if (start != -1)
                throw input_error("decode_sp: several path starts");
            start = v;
        }
    if (start == -1)
        throw input_error("decode_sp: no path start");
    DirectedPath p;
    std::vector<char> seen(n, 0);
    for (int v = start; v != -1; v = next[v]) {
        if (seen[v])
            throw input_error("decode_sp: cycle in chosen edges");
        seen[v] = 1;
        p.verts.push_back(v);
    }
    if (static_cast<long long>(p.verts.size()) != used)
        throw input_error("decode_sp: used vertices not on one path");
    return p;
}

SteinerCover decode_spc(const IpModel& m, const IpSolution& s, const DiGraph& g) {
    int n = g.vertex_count();
    int src = n, snk = n + 1;
    std::vector<int> next(n, -1), indeg(n, 0);
    std::vector<char> is_start(n, 0), is_end(n, 0);
    long long real_edges = 0;
    for (auto [u, v] : chosen_edges(m, s)) {
        if (u == src) {
            is_start.at(v) = 1;
            continue;
        }
        if (v == snk) {
            is_end.at(u) = 1;
            continue;
        }
        if (u < 0 || u >= n || v < 0 || v >= n || !g.has_edge(u, v))
            throw input_error("decode_spc: chosen edge not in graph");
        if (next[u] != -1)
            throw input_error("decode_spc: vertex left twice");
        next[u] = v;
        if (++indeg[v] > 1)
            throw input_error("decode_spc: vertex entered twice");
        ++real_edges;
    }
    SteinerCover cover;
    std::vector<char> seen(n, 0);
    long long walked = 0;
    for (int v0 = 0; v0 < n; ++v0) {
        if (!is_start[v0])
            continue;
        DirectedPath p;
        int v = v0;
        for (;;) {
            if (seen[v])
                throw input_error("decode_spc: paths overlap");
            seen[v] = 1;
            p.verts.push_back(v);
            if (next[v] == -1)
                break;
            int w = next[v];
            ++walked;
            v = w;
        }
        if (!is_end[v])
            throw input_error("decode_spc: path does not reach the sink");
        cover.paths.push_back(std::move(p));
    }
    if (walked != real_edges)
        throw input_error("decode_spc: chosen edges contain a cycle");
    return cover;
}

} // namespace copath
