#include "core/graph.hpp"

#include <algorithm>

namespace copath {

int DiGraph::add_vertex(const std::string& name) {
    if (name.empty())
        throw input_error("vertex name must be non-empty");
    if (index_.count(name))
        throw input_error("duplicate vertex name: " + name);
    int id = vertex_count();
    names_.push_back(name);
    index_.emplace(name, id);
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

void DiGraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw input_error("vertex id out of range: " + std::to_string(v));
}

void DiGraph::add_edge(int u, int v, double w) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw input_error("self loop on vertex " + names_[u]);
    if (w < 0.0)
        throw input_error("negative edge weight on (" + names_[u] + ", " + names_[v] + ")");
    if (!weights_.emplace(key(u, v), w).second)
        throw input_error("duplicate edge (" + names_[u] + ", " + names_[v] + ")");
    auto& ou = out_[u];
    ou.insert(std::lower_bound(ou.begin(), ou.end(), v), v);
    auto& iv = in_[v];
    iv.insert(std::lower_bound(iv.begin(), iv.end(), u), u);
    if (w != 1.0)
        weighted_ = true;
}

int DiGraph::vertex_id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw input_error("unknown vertex name: " + name);
    return it->second;
}

double DiGraph::weight(int u, int v) const {
    auto it = weights_.find(key(u, v));
    if (it == weights_.end())
        throw input_error("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    return it->second;
}

std::vector<std::pair<int, int>> DiGraph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(weights_.size());
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : out_[u])
            es.emplace_back(u, v);
    return es;
}

TerminalSet::TerminalSet(std::vector<int> v) : verts(std::move(v)) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
}

bool TerminalSet::contains(int v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

std::vector<char> TerminalSet::mask(int n) const {
    std::vector<char> m(n, 0);
    for (int v : verts) {
        if (v < 0 || v >= n)
            throw input_error("terminal id out of range: " + std::to_string(v));
        m[v] = 1;
    }
    return m;
}

CoverCheck validate_cover(const DiGraph& g, const TerminalSet& t, const SteinerCover& cover) {
    CoverCheck r;
    std::vector<char> term = t.mask(g.vertex_count());
    std::vector<char> seen(g.vertex_count(), 0);
    CoverStats stats;
    stats.size = static_cast<long long>(cover.paths.size());
    for (const DirectedPath& p : cover.paths) {
        if (p.verts.empty()) {
            r.fault = CoverFault::NotAPath;
            r.detail = "cover contains an empty path";
            return r;
        }
        for (std::size_t i = 0; i < p.verts.size(); ++i) {
            int v = p.verts[i];
            if (v < 0 || v >= g.vertex_count()) {
                r.fault = CoverFault::NotAPath;
                r.detail = "vertex id out of range: " + std::to_string(v);
                return r;
            }
            if (i > 0 && !g.has_edge(p.verts[i - 1], v)) {
                r.fault = CoverFault::NotAPath;
                r.detail = "missing edge (" + g.name(p.verts[i - 1]) + ", " + g.name(v) + ")";
                return r;
            }
            if (seen[v]) {
                r.fault = CoverFault::NotDisjoint;
                r.detail = "vertex " + g.name(v) + " used twice";
                return r;
            }
            seen[v] = 1;
            if (!term[v])
                ++stats.steiner;
            if (i > 0)
                stats.cost += g.weight(p.verts[i - 1], v);
        }
    }
    for (int v : t.verts) {
        if (!seen[v]) {
            r.fault = CoverFault::TerminalUncovered;
            r.detail = "terminal " + g.name(v) + " not covered";
            return r;
        }
    }
    r.ok = true;
    r.stats = stats;
    return r;
}

double cover_cost(const DiGraph& g, const SteinerCover& cover) {
    double total = 0.0;
    for (const DirectedPath& p : cover.paths)
        for (std::size_t i = 1; i < p.verts.size(); ++i)
            total += g.weight(p.verts[i - 1], p.verts[i]);
    return total;
}

} // namespace copath
