#ifndef COPATH_GEN_HPP
#define COPATH_GEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/coexpr.hpp"
#include "core/graph.hpp"

namespace copath {

// Instance generators.  Everything is deterministic for a fixed seed: the
// random source is a mt19937_64 and every draw (split points via modulo,
// coin flips via 53-bit doubles) is pinned, so outputs are byte-stable
// across platforms.

struct CographOpts {
    double order_prob = 0.0;  // chance of an order node; off by default
    bool balanced = false;    // split intervals at the midpoint (bench mode)
};

// Recursive random co-expression over n vertices v0..v{n-1} rooted at a
// series node; each half of a split becomes a union node with probability
// `prob`, otherwise a series node.  t terminals are drawn first, uniformly
// without replacement.  The result comes back bound (counts filled in).
std::pair<CoExpr, TerminalSet> random_cograph(int t, int n, double prob, std::uint64_t seed,
                                              const CographOpts& opts = {});

// (a0 + ... + a{n-1}) * (b0 + ... + b{m-1}), unions left-binarized.
CoExpr complete_bipartite(int n, int m);

// One uniformly oriented edge per vertex pair; weights uniform in [1, 100]
// when requested.
DiGraph random_tournament(int n, std::uint64_t seed, bool weighted = false);

struct BoardSpec {
    int m = 0;                        // bits per board
    std::vector<std::string> boards;  // rows of '0'/'1', each with 1..k ones
    int k = 0;                        // tray capacity
};

// Throws input_error when a board is malformed or violates the capacity.
void validate_boards(const BoardSpec& b);

// Complete bidirected graph over b0 (all zeros, vertex id 0) and the boards
// (ids 1..), edge weights = Hamming distance of the bit vectors.
DiGraph hamming_instance(const BoardSpec& b);

} // namespace copath

#endif
