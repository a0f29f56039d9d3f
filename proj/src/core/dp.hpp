#ifndef COPATH_DP_HPP
#define COPATH_DP_HPP

#include <vector>

#include "core/coexpr.hpp"

namespace copath {

struct DpValue {
    long long p = 0;  // fewest paths covering the subtree's terminals
    long long s = 0;  // fewest non-terminals among covers of p paths
};

// Optimal values for every subtree of a bound expression, indexed like
// e.nodes.  Linear time and space in the number of nodes.
std::vector<DpValue> compute_values(const CoExpr& e);

// Values at the root only.
DpValue cover_values(const CoExpr& e);

// True iff a single directed path visits every vertex (terminals are
// irrelevant, so any binding on `e` is ignored).
bool hamiltonian_path_exists(const CoExpr& e);

// True iff the bound terminals fit on one directed path; an empty terminal
// set counts as coverable by the empty path.
bool steiner_path_exists(const CoExpr& e);

} // namespace copath

#endif
