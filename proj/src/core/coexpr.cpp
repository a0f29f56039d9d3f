#include "core/coexpr.hpp"

#include <algorithm>
#include <cctype>

namespace copath {

int CoExpr::new_leaf(const std::string& name) {
    if (leaf_index.count(name))
        throw parse_error("duplicate vertex name: " + name);
    int leaf = static_cast<int>(leaf_names.size());
    leaf_names.push_back(name);
    leaf_index.emplace(name, leaf);
    CoNode nd;
    nd.kind = OpKind::Leaf;
    nd.leaf_lo = leaf;
    nd.leaf_hi = leaf + 1;
    nodes.push_back(nd);
    root = static_cast<int>(nodes.size()) - 1;
    return root;
}

int CoExpr::new_node(OpKind kind, int left, int right) {
    CoNode nd;
    nd.kind = kind;
    nd.left = left;
    nd.right = right;
    nd.leaf_lo = nodes[left].leaf_lo;
    nd.leaf_hi = nodes[right].leaf_hi;
    nodes.push_back(nd);
    root = static_cast<int>(nodes.size()) - 1;
    return root;
}

namespace {

constexpr int max_paren_depth = 10000;

struct Parser {
    const std::string& src;
    CoExpr& e;
    std::size_t pos = 0;
    int line = 1, col = 1;
    int depth = 0;

    Parser(const std::string& s, CoExpr& out) : src(s), e(out) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("parse error at " + std::to_string(line) + ":"
                          + std::to_string(col) + ": " + msg);
    }

    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_space() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '#') {
                while (pos < src.size() && src[pos] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    char peek() {
        skip_space();
        return pos < src.size() ? src[pos] : '\0';
    }

    static bool name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    int parse_atom() {
        char c = peek();
        if (c == '(') {
            if (++depth > max_paren_depth)
                fail("parenthesis nesting too deep");
            advance();
            int node = parse_expr();
            if (peek() != ')')
                fail("expected ')'");
            advance();
            --depth;
            return node;
        }
        if (!name_start(c))
            fail(c == '\0' ? std::string("expected a vertex name")
                           : "unexpected character '" + std::string(1, c) + "'");
        std::string name;
        while (pos < src.size() && name_char(src[pos])) {
            name += src[pos];
            advance();
        }
        return e.new_leaf(name);
    }

    int parse_factor() {
        int node = parse_atom();
        while (peek() == '*') {
            advance();
            node = e.new_node(OpKind::Series, node, parse_atom());
        }
        return node;
    }

    int parse_term() {
        int node = parse_factor();
        while (peek() == '>') {
            advance();
            node = e.new_node(OpKind::Order, node, parse_factor());
        }
        return node;
    }

    int parse_expr() {
        int node = parse_term();
        while (peek() == '+') {
            advance();
            node = e.new_node(OpKind::Union, node, parse_term());
        }
        return node;
    }
};

} // namespace

CoExpr parse_coexpr(const std::string& text) {
    CoExpr e;
    Parser p(text, e);
    e.root = p.parse_expr();
    if (p.peek() != '\0')
        p.fail("unexpected trailing input");
    return e;
}

static void refresh_counts(CoExpr& e) {
    e.terminal_leaves.clear();
    e.nonterminal_leaves.clear();
    for (int v = 0; v < e.vertex_count(); ++v)
        (e.terminal[v] ? e.terminal_leaves : e.nonterminal_leaves).push_back(v);
    // children precede parents, so one forward pass fills the counts
    for (CoNode& nd : e.nodes) {
        if (nd.kind == OpKind::Leaf)
            nd.tc = e.terminal[nd.leaf_lo] ? 1 : 0;
        else
            nd.tc = e.nodes[nd.left].tc + e.nodes[nd.right].tc;
    }
    e.bound = true;
}

void bind_terminals(CoExpr& e, const std::vector<std::string>& names) {
    std::vector<int> ids;  // resolve everything first so a bad name changes nothing
    ids.reserve(names.size());
    for (const std::string& name : names) {
        auto it = e.leaf_index.find(name);
        if (it == e.leaf_index.end())
            throw input_error("unknown terminal: " + name);
        ids.push_back(it->second);
    }
    e.terminal.assign(e.vertex_count(), 0);
    for (int id : ids)
        e.terminal[id] = 1;
    refresh_counts(e);
}

void bind_all_terminals(CoExpr& e) {
    e.terminal.assign(e.vertex_count(), 1);
    refresh_counts(e);
}

TerminalSet bound_terminals(const CoExpr& e) {
    if (!e.bound)
        throw input_error("expression has no terminals bound");
    return TerminalSet(e.terminal_leaves);
}

DiGraph to_digraph(const CoExpr& e) {
    DiGraph g;
    for (const std::string& name : e.leaf_names)
        g.add_vertex(name);
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(std::min<long long>(coexpr_edge_count(e), 1 << 26)));
    for (const CoNode& nd : e.nodes) {
        if (nd.kind == OpKind::Leaf || nd.kind == OpKind::Union)
            continue;
        const CoNode& l = e.nodes[nd.left];
        const CoNode& r = e.nodes[nd.right];
        for (int i = l.leaf_lo; i < l.leaf_hi; ++i)
            for (int j = r.leaf_lo; j < r.leaf_hi; ++j) {
                es.emplace_back(i, j);
                if (nd.kind == OpKind::Series)
                    es.emplace_back(j, i);
            }
    }
    std::sort(es.begin(), es.end());
    for (auto [u, v] : es)
        g.add_edge(u, v);
    return g;
}

long long coexpr_edge_count(const CoExpr& e) {
    std::vector<long long> ec(e.nodes.size(), 0);
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        const CoNode& nd = e.nodes[i];
        if (nd.kind == OpKind::Leaf)
            continue;
        const CoNode& l = e.nodes[nd.left];
        const CoNode& r = e.nodes[nd.right];
        long long cross = static_cast<long long>(l.leaf_hi - l.leaf_lo)
                          * (r.leaf_hi - r.leaf_lo);
        int k = nd.kind == OpKind::Union ? 0 : nd.kind == OpKind::Order ? 1 : 2;
        ec[i] = ec[nd.left] + ec[nd.right] + k * cross;
    }
    return e.root < 0 ? 0 : ec[e.root];
}

static int prec(const CoExpr& e, int node) {
    switch (e.nodes[node].kind) {
        case OpKind::Union: return 1;
        case OpKind::Order: return 2;
        case OpKind::Series: return 3;
        default: return 4;
    }
}

std::string to_string(const CoExpr& e) {
    if (e.root < 0)
        return "";
    std::string out;
    // explicit stack: negative entries emit a literal, non-negative a subtree
    enum Lit { close = -1, plus = -2, greater = -3, star = -4, open = -5 };
    std::vector<int> stack{e.root};
    while (!stack.empty()) {
        int item = stack.back();
        stack.pop_back();
        switch (item) {
            case close: out += ')'; continue;
            case open: out += '('; continue;
            case plus: out += '+'; continue;
            case greater: out += '>'; continue;
            case star: out += '*'; continue;
            default: break;
        }
        const CoNode& nd = e.nodes[item];
        if (nd.kind == OpKind::Leaf) {
            out += e.leaf_names[nd.leaf_lo];
            continue;
        }
        int p = prec(e, item);
        bool lp = prec(e, nd.left) < p;
        // equal precedence on the right would reassociate, so parenthesize
        bool rp = prec(e, nd.right) <= p;
        int op = nd.kind == OpKind::Union ? plus : nd.kind == OpKind::Order ? greater : star;
        if (rp) stack.push_back(close);
        stack.push_back(nd.right);
        if (rp) stack.push_back(open);
        stack.push_back(op);
        if (lp) stack.push_back(close);
        stack.push_back(nd.left);
        if (lp) stack.push_back(open);
    }
    return out;
}

static std::pair<int, int> range_in(const std::vector<int>& sorted, int lo, int hi) {
    auto first = std::lower_bound(sorted.begin(), sorted.end(), lo);
    auto last = std::lower_bound(sorted.begin(), sorted.end(), hi);
    return {static_cast<int>(first - sorted.begin()), static_cast<int>(last - sorted.begin())};
}

std::pair<int, int> terminal_range(const CoExpr& e, int lo, int hi) {
    return range_in(e.terminal_leaves, lo, hi);
}

std::pair<int, int> nonterminal_range(const CoExpr& e, int lo, int hi) {
    return range_in(e.nonterminal_leaves, lo, hi);
}

} // namespace copath
