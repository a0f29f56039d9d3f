#include "core/dp.hpp"

#include <algorithm>

namespace copath {

std::vector<DpValue> compute_values(const CoExpr& e) {
    if (!e.bound)
        throw input_error("compute_values: expression has no terminals bound");
    std::vector<DpValue> val(e.nodes.size());
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        const CoNode& nd = e.nodes[i];
        DpValue& v = val[i];
        switch (nd.kind) {
            case OpKind::Leaf:
                v.p = nd.tc;  // the one-vertex path, or nothing to cover
                v.s = 0;
                break;
            case OpKind::Union:
                v.p = val[nd.left].p + val[nd.right].p;
                v.s = val[nd.left].s + val[nd.right].s;
                break;
            case OpKind::Series: {
                if (nd.tc == 0) {
                    v.p = 0;
                    v.s = 0;
                    break;
                }
                // light side: fewer terminals (ties keep the left child);
                // its vertices can absorb and connect the heavy side's paths
                const CoNode& l = e.nodes[nd.left];
                bool left_light = l.tc <= e.nodes[nd.right].tc;
                int light = left_light ? nd.left : nd.right;
                int heavy = left_light ? nd.right : nd.left;
                long long nl = e.nodes[light].leaf_hi - e.nodes[light].leaf_lo;
                long long tl = e.nodes[light].tc;
                v.p = std::max<long long>(1, val[heavy].p - nl);
                v.s = std::max<long long>(0, val[heavy].s + val[heavy].p - v.p - tl);
                break;
            }
            case OpKind::Order: {
                // paths of one side continue into the other, one pairing per
                // path; splitting at a non-terminal balances unequal counts
                DpValue a = val[nd.left], b = val[nd.right];
                if (a.p == b.p) {
                    v.p = a.p;
                    v.s = a.s + b.s;
                } else if (a.p < b.p) {
                    v.p = b.p;
                    v.s = a.s + b.s - std::min(a.s, b.p - a.p);
                } else {
                    v.p = a.p;
                    v.s = a.s + b.s - std::min(b.s, a.p - b.p);
                }
                break;
            }
        }
    }
    return val;
}

DpValue cover_values(const CoExpr& e) {
    if (e.root < 0)
        return {};
    return compute_values(e)[e.root];
}

bool hamiltonian_path_exists(const CoExpr& e) {
    CoExpr all = e;
    bind_all_terminals(all);
    return cover_values(all).p == 1;
}

bool steiner_path_exists(const CoExpr& e) {
    return cover_values(e).p <= 1;
}

} // namespace copath
