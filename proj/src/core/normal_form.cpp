#include "core/normal_form.hpp"

namespace copath {

namespace {

struct Sides {
    int alo, ahi;  // side A = leaf range [alo, ahi); B is the complement
    OpKind op;

    bool in_a(int v) const { return v >= alo && v < ahi; }
};

Sides make_sides(const CoExpr& e, const SplitView& view) {
    const CoNode& nd = e.nodes.at(view.node);
    if (nd.kind != OpKind::Order && nd.kind != OpKind::Series)
        throw input_error("split view must name an order or series node");
    const CoNode& a = e.nodes[view.swapped ? nd.right : nd.left];
    return Sides{a.leaf_lo, a.leaf_hi, nd.kind};
}

std::string vname(const CoExpr& e, int v) { return e.leaf_names[v]; }

} // namespace

std::optional<SplitView> root_split(const CoExpr& e) {
    if (e.root < 0)
        return std::nullopt;
    const CoNode& nd = e.nodes[e.root];
    if (nd.kind == OpKind::Leaf || nd.kind == OpKind::Union)
        return std::nullopt;
    SplitView v;
    v.node = e.root;
    if (nd.kind == OpKind::Series)
        v.swapped = e.nodes[nd.left].tc > e.nodes[nd.right].tc;
    return v;
}

std::vector<NfViolation> check_normal_form(const CoExpr& e, const SplitView& view,
                                           const SteinerCover& c) {
    if (!e.bound)
        throw input_error("check_normal_form: expression has no terminals bound");
    Sides sd = make_sides(e, view);
    std::vector<NfViolation> out;
    auto add = [&](int structure, const std::string& detail) {
        for (const NfViolation& v : out)
            if (v.structure == structure)
                return;  // report each structure once
        out.push_back(NfViolation{structure, detail});
    };
    bool starts_a = false, starts_b = false;
    bool edge_in_a = false, edge_in_b = false;
    bool steiner_of_a_between_b = false;

    for (const DirectedPath& p : c.paths) {
        if (p.verts.empty())
            continue;
        int front = p.verts.front(), back = p.verts.back();
        if (!e.terminal[front])
            add(1, "path starts with non-terminal " + vname(e, front));
        if (!e.terminal[back])
            add(1, "path ends with non-terminal " + vname(e, back));
        (sd.in_a(front) ? starts_a : starts_b) = true;
        for (std::size_t i = 1; i < p.verts.size(); ++i) {
            int u = p.verts[i - 1], v = p.verts[i];
            if (!e.terminal[u] && !e.terminal[v])
                add(4, "adjacent non-terminals " + vname(e, u) + ", " + vname(e, v));
            bool ua = sd.in_a(u), va = sd.in_a(v);
            if (ua && va)
                edge_in_a = true;
            if (!ua && !va)
                edge_in_b = true;
            if (i + 1 < p.verts.size() && !e.terminal[v]) {
                int w = p.verts[i + 1];
                if (ua && !sd.in_a(w))
                    add(2, "non-terminal " + vname(e, v) + " between " + vname(e, u)
                               + " (A) and " + vname(e, w) + " (B)");
                if (va && !ua && !sd.in_a(w))
                    steiner_of_a_between_b = true;
            }
        }
    }
    // structure 3: a path ends in A while a *different* path starts in B
    {
        bool found = false;
        for (std::size_t i = 0; i < c.paths.size() && !found; ++i) {
            if (c.paths[i].verts.empty() || !sd.in_a(c.paths[i].verts.back()))
                continue;
            for (std::size_t j = 0; j < c.paths.size() && !found; ++j) {
                if (j == i || c.paths[j].verts.empty())
                    continue;
                if (!sd.in_a(c.paths[j].verts.front())) {
                    add(3, "a path ends in A (" + vname(e, c.paths[i].verts.back())
                               + ") while another starts in B ("
                               + vname(e, c.paths[j].verts.front()) + ")");
                    found = true;
                }
            }
        }
    }
    if (sd.op == OpKind::Series) {
        if (starts_a && starts_b)
            add(5, "paths start in both sides");
        if (edge_in_a && edge_in_b)
            add(6, "cover uses edges of both sides");
        if (starts_a && steiner_of_a_between_b)
            add(7, "a path starts in A while a non-terminal of A lies between B-vertices");
        if (starts_a && edge_in_b)
            add(8, "a path starts in A while the cover uses an edge inside B");
    }
    return out;
}

bool check_series_consequence(const CoExpr& e, const SplitView& view,
                              const SteinerCover& c, std::string* why) {
    Sides sd = make_sides(e, view);
    if (sd.op != OpKind::Series)
        throw input_error("check_series_consequence: not a series node");
    auto ta = terminal_range(e, sd.alo, sd.ahi);
    long long tca = ta.second - ta.first;
    long long tcb = e.nodes[view.node].tc - tca;
    if (tca >= tcb)
        return true;  // precondition |T_A| < |T_B| not met: nothing to check
    for (const DirectedPath& p : c.paths) {
        if (p.verts.empty())
            continue;
        if (sd.in_a(p.verts.front()) || sd.in_a(p.verts.back())) {
            if (why)
                *why = "path endpoint inside A: "
                       + vname(e, sd.in_a(p.verts.front()) ? p.verts.front() : p.verts.back());
            return false;
        }
        for (std::size_t i = 1; i < p.verts.size(); ++i)
            if (sd.in_a(p.verts[i - 1]) && sd.in_a(p.verts[i])) {
                if (why)
                    *why = "edge inside A: (" + vname(e, p.verts[i - 1]) + ", "
                           + vname(e, p.verts[i]) + ")";
                return false;
            }
    }
    return true;
}

bool check_order_progression(const CoExpr& e, const SplitView& view,
                             const SteinerCover& c, std::string* why) {
    Sides sd = make_sides(e, view);
    if (sd.op != OpKind::Order)
        throw input_error("check_order_progression: not an order node");
    for (const DirectedPath& p : c.paths) {
        bool seen_b = false;
        for (int v : p.verts) {
            if (!sd.in_a(v))
                seen_b = true;
            else if (seen_b) {
                if (why)
                    *why = "A-vertex " + vname(e, v) + " after a B-vertex";
                return false;
            }
        }
    }
    return true;
}

} // namespace copath
