#ifndef COPATH_BUILDER_HPP
#define COPATH_BUILDER_HPP

#include <optional>

#include "core/coexpr.hpp"
#include "core/graph.hpp"
#include "core/pathlist.hpp"

namespace copath {

struct BuildResult {
    SteinerCover cover;
    long long p = 0;     // number of paths
    long long s = 0;     // non-terminal vertices used
    double cost = 0.0;   // unit edge weights: vertices on paths minus p
};

// Builds an optimal cover (matching compute_values) bottom-up along the
// bound expression; linear time and memory overall.
BuildResult build_cover(const CoExpr& e);

// One series composition: connects the cover of the terminal-heavier side
// `heavy` through the vertices of the terminal-lighter side `light` (node
// ids of the two children).  Consumes heavy_cover.
CoverSet series_step(PathArena& a, const CoExpr& e, int light, int heavy,
                     CoverSet heavy_cover);

// One order composition: balances path counts by splitting at non-terminals,
// then joins left paths to right paths pairwise.
CoverSet order_step(PathArena& a, CoverSet left, CoverSet right);

// The optimal cover as a single path.  A bound expression with p == 1 yields
// its path; an empty terminal set yields the empty path; otherwise nothing.
std::optional<DirectedPath> extract_steiner_path(const CoExpr& e);

// Same with every vertex terminal: a path through the whole digraph.
std::optional<DirectedPath> extract_hamiltonian_path(const CoExpr& e);

} // namespace copath

#endif
