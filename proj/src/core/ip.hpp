#ifndef COPATH_IP_HPP
#define COPATH_IP_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace copath {

// Small integer-program layer: three model builders (Hamiltonian path,
// single Steiner path, Steiner path cover), a deterministic LP text writer,
// and an exhaustive solver for desk-sized models.

enum class VarKind : unsigned char { Binary, Integer };
enum class VarRole : unsigned char { EdgeX, PosP, UseY };

struct IpVar {
    std::string name;
    VarKind kind = VarKind::Binary;
    long long lb = 0, ub = 1;
    VarRole role = VarRole::EdgeX;
    int a = -1, b = -1;  // EdgeX: edge (a, b); PosP / UseY: vertex a
};

enum class Rel : unsigned char { Le, Eq, Ge };

struct IpTerm {
    double coef = 0.0;
    int var = -1;
};

struct IpConstraint {
    std::vector<IpTerm> terms;
    Rel rel = Rel::Le;
    double rhs = 0.0;
};

struct IpModel {
    std::string name;
    std::vector<IpVar> vars;
    std::vector<IpConstraint> cons;
    std::vector<IpTerm> objective;  // minimized
};

// Hamiltonian path: edge binaries x_i_j, positions p_i in [0, n]; start >= 0
// additionally pins p_start = 1.
IpModel build_hp_model(const DiGraph& g, int start = -1);

// Single path containing all terminals: adds use binaries y_i.
IpModel build_sp_model(const DiGraph& g, const TerminalSet& t);

// Path cover of the terminals: the graph is extended by a source (vertex id
// n) with edges to every terminal and a sink (id n+1) with edges from every
// terminal, each of weight spc_big_m(g).
IpModel build_spc_model(const DiGraph& g, const TerminalSet& t);

// |V| * |E| for unit-weight graphs, |V| * max edge weight otherwise.
double spc_big_m(const DiGraph& g);

// Deterministic LP text: Minimize / Subject To (constraints named c1, c2,
// ...) / Bounds / Generals / Binaries / End.  Constraints whose terms all
// vanished are dropped when trivially true and kept as a marker with a
// zero-coefficient term when impossible.
std::string emit_lp(const IpModel& m);

struct IpSolution {
    double objective = 0.0;
    std::vector<long long> value;  // indexed like m.vars
};

// Exhaustive search over the binary variables with constraint-interval and
// objective pruning; positions are completed per leaf via the implied
// difference constraints.  Empty result = infeasible; models with more than
// `max_binaries` binaries raise too_large_error.
std::optional<IpSolution> solve_small(const IpModel& m, int max_binaries = 30);

// Structure-checking decoders for solutions of the three models; they
// re-derive the paths from the chosen edges and refuse anything that is not
// a clean path system.
DirectedPath decode_hp(const IpModel& m, const IpSolution& s, const DiGraph& g);
DirectedPath decode_sp(const IpModel& m, const IpSolution& s, const DiGraph& g);
SteinerCover decode_spc(const IpModel& m, const IpSolution& s, const DiGraph& g);

} // namespace copath

#endif
