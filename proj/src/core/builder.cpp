#include "core/builder.hpp"

#include <algorithm>
#include <cassert>

namespace copath {

CoverSet series_step(PathArena& a, const CoExpr& e, int light, int heavy,
                     CoverSet heavy_cover) {
    const CoNode& ln = e.nodes[light];
    const CoNode& hn = e.nodes[heavy];
    auto [ta, ta_end] = terminal_range(e, ln.leaf_lo, ln.leaf_hi);
    auto [tb, tb_end] = terminal_range(e, hn.leaf_lo, hn.leaf_hi);
    long long tcl = ta_end - ta;
    long long tch = tb_end - tb;
    assert(tcl <= tch && tch >= 1);
    assert(heavy_cover.terminal_total == tch);

    a.defer_mode = true;
    CoverSet out;
    PathList* p;
    if (tcl >= tch - 1) {
        // almost equal terminal counts: one path alternating heavy, light,
        // heavy, ... exists; the old cover is abandoned wholesale
        a.recycle_cover(heavy_cover);
        p = a.new_path();
        while (ta < ta_end) {
            append_vertex(a, p, e.terminal_leaves[tb++], true);
            append_vertex(a, p, e.terminal_leaves[ta++], true);
        }
        if (tb < tb_end)
            append_vertex(a, p, e.terminal_leaves[tb++], true);
        assert(tb == tb_end);
        out.push(p);
    } else {
        // tcl <= tch - 2, so the heavy cover is non-empty
        p = heavy_cover.pop_any();
        while (ta < ta_end && !heavy_cover.empty())
            combine(a, p, e.terminal_leaves[ta++], true, heavy_cover.pop_any());
        if (ta == ta_end) {
            // all light terminals used; keep connecting through light
            // non-terminals while paths remain
            auto [ua, ua_end] = nonterminal_range(e, ln.leaf_lo, ln.leaf_hi);
            while (!heavy_cover.empty() && ua < ua_end)
                combine(a, p, e.nonterminal_leaves[ua++], false, heavy_cover.pop_any());
            out = heavy_cover;
            out.push(p);
        } else {
            // paths ran out first: absorb the remaining light terminals by
            // replacing non-terminals, then by insertion between terminals
            while (ta < ta_end) {
                int leaf = e.terminal_leaves[ta++];
                if (p->first_st)
                    replace_first_steiner(a, p, leaf);
                else
                    insert_terminal(a, p, leaf);
            }
            out.push(p);
        }
    }
    a.splice_deferred(p);
    a.defer_mode = false;
    return out;
}

CoverSet order_step(PathArena& a, CoverSet left, CoverSet right) {
    // balance path counts by splitting off steiner-free prefixes
    if (left.path_count < right.path_count) {
        long long k = std::min(left.steiner_total, right.path_count - left.path_count);
        while (k-- > 0) {
            auto [l, r] = split_first_steiner(a, left.pop_with_steiner());
            left.push(l);
            left.push(r);
        }
    } else if (right.path_count < left.path_count) {
        long long k = std::min(right.steiner_total, left.path_count - right.path_count);
        while (k-- > 0) {
            auto [l, r] = split_first_steiner(a, right.pop_with_steiner());
            right.push(l);
            right.push(r);
        }
    }
    CoverSet out;
    while (!left.empty() && !right.empty()) {
        PathList* pa = left.pop_any();
        PathList* pb = right.pop_any();
        concat(a, pa, pb);
        out.push(pa);
    }
    out.merge(left);
    out.merge(right);
    return out;
}

static BuildResult materialize(const CoverSet& set) {
    BuildResult r;
    r.p = set.path_count;
    r.s = set.steiner_total;
    for (const PathSnapshot& ps : snapshot_cover(set)) {
        DirectedPath dp;
        dp.verts = ps.verts;
        r.cost += static_cast<double>(ps.verts.size()) - 1.0;
        r.cover.paths.push_back(std::move(dp));
    }
    return r;
}

BuildResult build_cover(const CoExpr& e) {
    if (!e.bound)
        throw input_error("build_cover: expression has no terminals bound");
    PathArena a(e.vertex_count());
    std::vector<CoverSet> val(e.nodes.size());
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        const CoNode& nd = e.nodes[i];
        switch (nd.kind) {
            case OpKind::Leaf:
                if (e.terminal[nd.leaf_lo]) {
                    PathList* p = a.new_path();
                    append_vertex(a, p, nd.leaf_lo, true);
                    val[i].push(p);
                }
                break;
            case OpKind::Union:
                val[i] = val[nd.left];
                val[i].merge(val[nd.right]);
                break;
            case OpKind::Series: {
                if (nd.tc == 0) {
                    assert(val[nd.left].empty() && val[nd.right].empty());
                    break;
                }
                bool left_light = e.nodes[nd.left].tc <= e.nodes[nd.right].tc;
                int light = left_light ? nd.left : nd.right;
                int heavy = left_light ? nd.right : nd.left;
                a.recycle_cover(val[light]);  // the light cover is not used
                val[i] = series_step(a, e, light, heavy, val[heavy]);
                val[heavy] = CoverSet{};
                break;
            }
            case OpKind::Order:
                val[i] = order_step(a, val[nd.left], val[nd.right]);
                val[nd.left] = val[nd.right] = CoverSet{};
                break;
        }
    }
    return materialize(val[e.root]);
}

std::optional<DirectedPath> extract_steiner_path(const CoExpr& e) {
    BuildResult r = build_cover(e);
    if (r.p == 0)
        return DirectedPath{};  // nothing to cover: the empty path
    if (r.p == 1)
        return std::move(r.cover.paths.front());
    return std::nullopt;
}

std::optional<DirectedPath> extract_hamiltonian_path(const CoExpr& e) {
    CoExpr all = e;
    bind_all_terminals(all);
    BuildResult r = build_cover(all);
    if (r.p != 1)
        return std::nullopt;
    return std::move(r.cover.paths.front());
}

} // namespace copath
