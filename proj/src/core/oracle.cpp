#include "core/oracle.hpp"

#include <algorithm>
#include <deque>

namespace copath {

namespace {

void check_limit(const DiGraph& g, int limit, const char* what) {
    if (g.vertex_count() > limit)
        throw too_large_error(std::string(what) + ": instance has "
                              + std::to_string(g.vertex_count()) + " vertices, limit is "
                              + std::to_string(limit));
}

// Shared state for the cover searches.  Paths are grown around the lowest
// uncovered terminal: first forward from it, then backward, so every simple
// path containing that terminal is produced exactly once.
struct CoverSearch {
    const DiGraph& g;
    std::vector<char> term;
    std::vector<char> used;
    std::deque<int> cur;             // path under construction
    std::vector<DirectedPath> done;  // finished paths
    long long uncovered = 0;
    long long steiner = 0;

    // best-so-far for the pruned search
    long long best_p = -1, best_s = -1;
    std::vector<DirectedPath> best_paths;
    bool stop = false;

    // callback for the unpruned enumeration (null in the pruned search)
    const std::function<void(const SteinerCover&, long long)>* emit = nullptr;

    CoverSearch(const DiGraph& gr, const TerminalSet& t) : g(gr) {
        term = t.mask(g.vertex_count());
        used.assign(g.vertex_count(), 0);
        uncovered = t.size();
    }

    void take(int v) {
        used[v] = 1;
        if (term[v])
            --uncovered;
        else
            ++steiner;
    }
    void drop(int v) {
        used[v] = 0;
        if (term[v])
            ++uncovered;
        else
            --steiner;
    }

    void finish_cover() {
        if (emit) {
            SteinerCover c;
            c.paths = done;
            (*emit)(c, steiner);
            return;
        }
        long long p = static_cast<long long>(done.size());
        if (best_p < 0 || p < best_p || (p == best_p && steiner < best_s)) {
            best_p = p;
            best_s = steiner;
            best_paths = done;
            // (1, 0) is unbeatable once any terminal exists
            if (best_p <= 1 && best_s == 0)
                stop = true;
        }
    }

    // true if starting (or continuing) one more path cannot beat the best
    bool dominated() const {
        if (emit || best_p < 0)
            return false;
        long long p = static_cast<long long>(done.size()) + 1;
        if (p > best_p)
            return true;
        if (p == best_p && steiner >= best_s)
            return true;
        return false;
    }

    void next_terminal() {
        if (stop)
            return;
        if (uncovered == 0) {
            finish_cover();
            return;
        }
        if (dominated())
            return;
        int t0 = 0;
        while (used[t0] || !term[t0])
            ++t0;
        cur.clear();
        cur.push_back(t0);
        take(t0);
        grow_front(t0, t0);
        drop(t0);
        cur.clear();
    }

    void grow_front(int front, int back) {
        if (stop)
            return;
        grow_back(front, back);  // stop extending at the front
        for (int w : g.in(front)) {
            if (used[w] || stop)
                continue;
            if (!term[w] && dominated())
                continue;
            cur.push_front(w);
            take(w);
            grow_front(w, back);
            drop(w);
            cur.pop_front();
        }
    }

    void grow_back(int front, int back) {
        if (stop)
            return;
        close_path();  // stop extending entirely
        for (int w : g.out(back)) {
            if (used[w] || stop)
                continue;
            if (!term[w] && dominated())
                continue;
            cur.push_back(w);
            take(w);
            grow_back(front, w);
            drop(w);
            cur.pop_back();
        }
    }

    void close_path() {
        DirectedPath p;
        p.verts.assign(cur.begin(), cur.end());
        done.push_back(std::move(p));
        auto saved = cur;
        next_terminal();
        cur = saved;
        done.pop_back();
    }
};

} // namespace

OracleCover brute_force_cover(const DiGraph& g, const TerminalSet& t, int limit) {
    check_limit(g, limit, "brute_force_cover");
    OracleCover r;
    if (t.empty())
        return r;
    CoverSearch s(g, t);
    s.next_terminal();
    r.p = s.best_p;
    r.s = s.best_s;
    r.witness.paths = std::move(s.best_paths);
    return r;
}

void enumerate_covers(const DiGraph& g, const TerminalSet& t, int limit,
                      const std::function<void(const SteinerCover&, long long)>& cb) {
    check_limit(g, limit, "enumerate_covers");
    if (t.empty()) {
        cb(SteinerCover{}, 0);
        return;
    }
    CoverSearch s(g, t);
    s.emit = &cb;
    s.next_terminal();
}

namespace {

struct HamSearch {
    const DiGraph& g;
    int n;
    std::vector<char> used;
    std::vector<int> cur;
    double cost = 0.0;
    bool found = false;
    double best_cost = 0.0;
    std::vector<int> best;

    explicit HamSearch(const DiGraph& gr) : g(gr), n(gr.vertex_count()) {
        used.assign(n, 0);
    }

    void extend(int v) {
        if (static_cast<int>(cur.size()) == n) {
            if (!found || cost < best_cost) {
                found = true;
                best_cost = cost;
                best = cur;
            }
            return;
        }
        for (int w : g.out(v)) {
            if (used[w])
                continue;
            double cw = g.weight(v, w);
            if (found && cost + cw >= best_cost)
                continue;
            used[w] = 1;
            cur.push_back(w);
            cost += cw;
            extend(w);
            cost -= cw;
            cur.pop_back();
            used[w] = 0;
        }
    }
};

} // namespace

std::optional<OraclePath> brute_force_hamiltonian(const DiGraph& g, int limit, int start) {
    check_limit(g, limit, "brute_force_hamiltonian");
    int n = g.vertex_count();
    if (n == 0)
        return OraclePath{};
    HamSearch s(g);
    for (int v = 0; v < n; ++v) {
        if (start >= 0 && v != start)
            continue;
        s.used[v] = 1;
        s.cur.push_back(v);
        s.extend(v);
        s.cur.pop_back();
        s.used[v] = 0;
    }
    if (!s.found)
        return std::nullopt;
    OraclePath r;
    r.path.verts = std::move(s.best);
    r.cost = s.best_cost;
    return r;
}

namespace {

struct SteinerPathSearch {
    const DiGraph& g;
    std::vector<char> term;
    std::vector<char> used;
    std::vector<int> cur;
    long long missing;
    double cost = 0.0;
    bool found = false;
    double best_cost = 0.0;
    std::vector<int> best;

    SteinerPathSearch(const DiGraph& gr, const TerminalSet& t)
        : g(gr), missing(t.size()) {
        term = t.mask(g.vertex_count());
        used.assign(g.vertex_count(), 0);
    }

    void extend(int v) {
        if (missing == 0) {
            // extensions only add weight, so record and backtrack
            if (!found || cost < best_cost) {
                found = true;
                best_cost = cost;
                best = cur;
            }
            return;
        }
        for (int w : g.out(v)) {
            if (used[w])
                continue;
            double cw = g.weight(v, w);
            if (found && cost + cw >= best_cost)
                continue;
            used[w] = 1;
            cur.push_back(w);
            cost += cw;
            if (term[w])
                --missing;
            extend(w);
            if (term[w])
                ++missing;
            cost -= cw;
            cur.pop_back();
            used[w] = 0;
        }
    }
};

} // namespace

std::optional<OraclePath> brute_force_steiner_path(const DiGraph& g, const TerminalSet& t,
                                                   int limit) {
    check_limit(g, limit, "brute_force_steiner_path");
    if (t.empty())
        return OraclePath{};
    SteinerPathSearch s(g, t);
    for (int v = 0; v < g.vertex_count(); ++v) {
        s.used[v] = 1;
        s.cur.push_back(v);
        if (s.term[v])
            --s.missing;
        s.extend(v);
        if (s.term[v])
            ++s.missing;
        s.cur.pop_back();
        s.used[v] = 0;
    }
    if (!s.found)
        return std::nullopt;
    OraclePath r;
    r.path.verts = std::move(s.best);
    r.cost = s.best_cost;
    return r;
}

} // namespace copath
