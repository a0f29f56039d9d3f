#ifndef COPATH_ORACLE_HPP
#define COPATH_ORACLE_HPP

#include <functional>
#include <optional>

#include "core/graph.hpp"

namespace copath {

// Exhaustive-search reference implementations.  Exact but exponential; every
// entry point refuses instances above its size limit.

struct OracleCover {
    long long p = 0;        // fewest paths covering all terminals
    long long s = 0;        // fewest non-terminals among covers of p paths
    SteinerCover witness;   // one optimal cover
};

// Minimizes (number of paths, non-terminal count) lexicographically.
OracleCover brute_force_cover(const DiGraph& g, const TerminalSet& t, int limit = 12);

struct OraclePath {
    DirectedPath path;
    double cost = 0.0;
};

// Cheapest directed path visiting every vertex; `start` >= 0 forces the first
// vertex.  Empty result means no Hamiltonian path exists.
std::optional<OraclePath> brute_force_hamiltonian(const DiGraph& g, int limit = 10,
                                                  int start = -1);

// Cheapest single directed path containing all of `t`; for an empty terminal
// set the empty path of cost 0 is returned.
std::optional<OraclePath> brute_force_steiner_path(const DiGraph& g, const TerminalSet& t,
                                                   int limit = 12);

// Calls `cb` once for every cover in which each path contains at least one
// terminal (covers with terminal-free paths are dominated, since dropping
// such a path gives a smaller cover with no more non-terminals).  Unpruned.
void enumerate_covers(const DiGraph& g, const TerminalSet& t, int limit,
                      const std::function<void(const SteinerCover&, long long steiner)>& cb);

} // namespace copath

#endif
