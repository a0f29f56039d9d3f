#ifndef COPATH_GRAPH_HPP
#define COPATH_GRAPH_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core/errors.hpp"

namespace copath {

// Finite simple digraph with named vertices and optional non-negative edge
// weights.  No self loops, no parallel edges; anti-parallel pairs are fine.
// Adjacency lists are kept sorted ascending so that every traversal order in
// the library is deterministic.
class DiGraph {
public:
    int add_vertex(const std::string& name);
    void add_edge(int u, int v, double w = 1.0);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    long long edge_count() const { return static_cast<long long>(weights_.size()); }

    bool has_vertex(const std::string& name) const { return index_.count(name) > 0; }
    int vertex_id(const std::string& name) const;          // throws input_error
    const std::string& name(int v) const { return names_.at(v); }

    bool has_edge(int u, int v) const { return weights_.count(key(u, v)) > 0; }
    double weight(int u, int v) const;                     // throws input_error

    const std::vector<int>& out(int v) const { return out_.at(v); }
    const std::vector<int>& in(int v) const { return in_.at(v); }

    // all edges as (u, v) pairs, sorted ascending by u then v
    std::vector<std::pair<int, int>> edges() const;

    // true once any edge was added with an explicit weight
    bool weighted() const { return weighted_; }

private:
    static std::uint64_t key(int u, int v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32)
               | static_cast<std::uint32_t>(v);
    }
    void check_vertex(int v) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> out_, in_;
    std::unordered_map<std::uint64_t, double> weights_;
    bool weighted_ = false;
};

// Sorted, duplicate-free set of vertex ids.
struct TerminalSet {
    std::vector<int> verts;

    TerminalSet() = default;
    explicit TerminalSet(std::vector<int> v);

    int size() const { return static_cast<int>(verts.size()); }
    bool empty() const { return verts.empty(); }
    bool contains(int v) const;
    // membership bitmap for graphs with n vertices; throws if an id is out of range
    std::vector<char> mask(int n) const;
};

struct DirectedPath {
    std::vector<int> verts;
};

struct SteinerCover {
    std::vector<DirectedPath> paths;
};

struct CoverStats {
    long long size = 0;     // number of paths
    long long steiner = 0;  // non-terminal vertices used
    double cost = 0.0;      // total weight of path edges
};

enum class CoverFault { None, NotAPath, NotDisjoint, TerminalUncovered };

struct CoverCheck {
    bool ok = false;
    CoverFault fault = CoverFault::None;
    std::string detail;
    CoverStats stats;  // meaningful only when ok
};

// Checks that `cover` is a set of vertex-disjoint simple directed paths of `g`
// covering every vertex of `t`; reports the first violation found.
CoverCheck validate_cover(const DiGraph& g, const TerminalSet& t, const SteinerCover& cover);

// Total edge weight of a cover; requires all path edges to exist in `g`.
double cover_cost(const DiGraph& g, const SteinerCover& cover);

} // namespace copath

#endif
