#include "core/gen.hpp"

#include <numeric>
#include <random>

#include "core/errors.hpp"

namespace copath {

namespace {

// pinned draws: modulo for ranges, 53-bit mantissa for unit doubles
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

double unit(std::mt19937_64& rng) {
    return double(rng() >> 11) * (1.0 / 9007199254740992.0);
}

struct CographGen {
    std::mt19937_64 rng;
    double union_prob;
    double order_prob;
    bool balanced;
    CoExpr e;

    OpKind pick_kind() {
        double u = unit(rng);
        if (u < union_prob)
            return OpKind::Union;
        if (u < union_prob + order_prob)
            return OpKind::Order;
        return OpKind::Series;
    }

    // builds the subexpression over vertices l..r inclusive
    int build(int l, int r, OpKind kind) {
        if (l == r)
            return e.new_leaf("v" + std::to_string(l));
        if (r - l == 1) {
            int a = e.new_leaf("v" + std::to_string(l));
            int b = e.new_leaf("v" + std::to_string(r));
            return e.new_node(kind, a, b);
        }
        int m = balanced ? (l + r) / 2 : l + int(draw(rng, std::uint64_t(r - l)));
        OpKind kl = pick_kind();
        int a = build(l, m, kl);
        OpKind kr = pick_kind();
        int b = build(m + 1, r, kr);
        return e.new_node(kind, a, b);
    }
};

} // namespace

std::pair<CoExpr, TerminalSet> random_cograph(int t, int n, double prob, std::uint64_t seed,
                                              const CographOpts& opts) {
    if (n < 1 || t < 0 || t > n)
        throw input_error("random_cograph: need 0 <= t <= n and n >= 1");
    if (prob < 0.0 || prob > 1.0 || opts.order_prob < 0.0 || prob + opts.order_prob > 1.0)
        throw input_error("random_cograph: probabilities out of range");
    CographGen gen;
    gen.rng.seed(seed);
    gen.union_prob = prob;
    gen.order_prob = opts.order_prob;
    gen.balanced = opts.balanced;
    // terminals first, by partial shuffle
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < t; ++i)
        std::swap(ids[i], ids[i + int(draw(gen.rng, std::uint64_t(n - i)))]);
    ids.resize(t);
    gen.build(0, n - 1, OpKind::Series);
    std::vector<std::string> names;
    names.reserve(t);
    for (int id : ids)
        names.push_back("v" + std::to_string(id));
    bind_terminals(gen.e, names);
    TerminalSet ts = bound_terminals(gen.e);
    return {std::move(gen.e), std::move(ts)};
}

CoExpr complete_bipartite(int n, int m) {
    if (n < 1 || m < 1)
        throw input_error("complete_bipartite: both sides need a vertex");
    CoExpr e;
    auto side = [&e](int cnt, const char* prefix) {
        int acc = e.new_leaf(prefix + std::to_string(0));
        for (int i = 1; i < cnt; ++i)
            acc = e.new_node(OpKind::Union, acc, e.new_leaf(prefix + std::to_string(i)));
        return acc;
    };
    int left = side(n, "a");
    int right = side(m, "b");
    e.new_node(OpKind::Series, left, right);
    return e;
}

DiGraph random_tournament(int n, std::uint64_t seed, bool weighted) {
    if (n < 1)
        throw input_error("random_tournament: need n >= 1");
    std::mt19937_64 rng(seed);
    DiGraph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool forward = (rng() & 1) == 0;
            double w = weighted ? 1.0 + double(draw(rng, 100)) : 1.0;
            if (forward)
                g.add_edge(i, j, w);
            else
                g.add_edge(j, i, w);
        }
    return g;
}

void validate_boards(const BoardSpec& b) {
    if (b.m < 1)
        throw input_error("boards: need at least one component type");
    if (b.k < 1)
        throw input_error("boards: tray capacity must be positive");
    for (std::size_t i = 0; i < b.boards.size(); ++i) {
        const std::string& row = b.boards[i];
        if (static_cast<int>(row.size()) != b.m)
            throw input_error("boards: row " + std::to_string(i + 1) + " has "
                              + std::to_string(row.size()) + " bits, expected "
                              + std::to_string(b.m));
        int ones = 0;
        for (char c : row) {
            if (c != '0' && c != '1')
                throw input_error("boards: row " + std::to_string(i + 1)
                                  + " contains a character other than 0/1");
            ones += c == '1';
        }
        if (ones < 1 || ones > b.k)
            throw input_error("boards: row " + std::to_string(i + 1) + " has "
                              + std::to_string(ones) + " ones, allowed 1.."
                              + std::to_string(b.k));
    }
}

DiGraph hamming_instance(const BoardSpec& b) {
    validate_boards(b);
    std::vector<std::string> rows;
    rows.push_back(std::string(std::size_t(b.m), '0'));  // b0, the start
    rows.insert(rows.end(), b.boards.begin(), b.boards.end());
    DiGraph g;
    for (std::size_t i = 0; i < rows.size(); ++i)
        g.add_vertex("b" + std::to_string(i));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (i == j)
                continue;
            int d = 0;
            for (int bit = 0; bit < b.m; ++bit)
                d += rows[i][bit] != rows[j][bit];
            g.add_edge(int(i), int(j), double(d));
        }
    return g;
}

} // namespace copath
