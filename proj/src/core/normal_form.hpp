#ifndef COPATH_NORMAL_FORM_HPP
#define COPATH_NORMAL_FORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/coexpr.hpp"
#include "core/graph.hpp"

namespace copath {

// View of the root composition of an expression as G = A op B.  When
// `swapped` is set, side A is the right child; the canonical orientation
// (root_split) gives series nodes the terminal-lighter side as A, matching
// the construction, and never swaps order nodes.
struct SplitView {
    int node = -1;
    bool swapped = false;
};

// The canonical split at the root, or nothing when the root is a leaf or a
// disjoint union (no composition to inspect).
std::optional<SplitView> root_split(const CoExpr& e);

struct NfViolation {
    int structure = 0;  // 1..8
    std::string detail;
};

// Checks a valid cover against the forbidden structures of an optimal
// cover's normal form at the given split; structures 5-8 apply to series
// compositions only.  Returns one entry per violated structure.
//
//   1  a path starts or ends with a non-terminal
//   2  a non-terminal has its neighbors in different sides (A before B)
//   3  a path ends in A while a different path starts in B
//   4  two adjacent non-terminals
//   5  two paths start in different sides
//   6  the cover uses edges inside A and edges inside B
//   7  a path starts in A while a non-terminal of A sits between B-vertices
//   8  a path starts in A while the cover uses an edge inside B
std::vector<NfViolation> check_normal_form(const CoExpr& e, const SplitView& view,
                                           const SteinerCover& c);

// Series split with strictly fewer terminals on side A: the cover may use
// no edge inside A, and no path may start or end in A.
bool check_series_consequence(const CoExpr& e, const SplitView& view,
                              const SteinerCover& c, std::string* why = nullptr);

// Order split: on every path, all A-vertices precede all B-vertices (forced
// by the edge set; asserted as a sanity property).
bool check_order_progression(const CoExpr& e, const SplitView& view,
                             const SteinerCover& c, std::string* why = nullptr);

} // namespace copath

#endif
