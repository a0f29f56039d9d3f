#ifndef COPATH_COEXPR_HPP
#define COPATH_COEXPR_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace copath {

enum class OpKind : unsigned char { Leaf, Union, Order, Series };

// One node of a co-expression tree.  For a leaf, leaf_lo is the leaf id and
// leaf_hi = leaf_lo + 1; for inner nodes the subtree's leaves form the
// contiguous range [leaf_lo, leaf_hi) because leaves are numbered in input
// order and subtrees are contiguous spans of the input.
struct CoNode {
    OpKind kind = OpKind::Leaf;
    int left = -1, right = -1;
    int leaf_lo = 0, leaf_hi = 0;
    long long tc = 0;  // terminals in the subtree; valid once bound
};

// Arena representation of a co-expression.  Nodes are stored so that children
// always precede their parent (the parser and the generators both create
// nodes bottom-up), hence a plain index loop is a valid post-order traversal
// and no pass over the tree needs recursion.
struct CoExpr {
    std::vector<CoNode> nodes;
    int root = -1;
    std::vector<std::string> leaf_names;               // by leaf id, input order
    std::unordered_map<std::string, int> leaf_index;

    bool bound = false;
    std::vector<char> terminal;                        // by leaf id
    std::vector<int> terminal_leaves;                  // ascending leaf ids
    std::vector<int> nonterminal_leaves;               // ascending leaf ids

    int vertex_count() const { return static_cast<int>(leaf_names.size()); }

    int new_leaf(const std::string& name);
    int new_node(OpKind kind, int left, int right);
};

// Parses the textual form.  Operators: '+' disjoint union (lowest), '>' order
// composition, '*' series composition (highest); all left-associative;
// parentheses group; '#' starts a line comment; names are C identifiers and
// must be pairwise distinct.
CoExpr parse_coexpr(const std::string& text);

// Marks the named vertices as terminals and fills the per-node terminal
// counts.  May be called again to re-bind.  Unknown names raise input_error.
void bind_terminals(CoExpr& e, const std::vector<std::string>& names);
void bind_all_terminals(CoExpr& e);

// Terminal ids of a bound expression as a TerminalSet (ids are leaf ids and
// coincide with the vertex ids of to_digraph).
TerminalSet bound_terminals(const CoExpr& e);

// Expands the expression into its digraph.  Vertex ids equal leaf ids.  The
// result has sum-of-products many edges, so expand only desk-sized instances.
DiGraph to_digraph(const CoExpr& e);

// Number of edges the expansion would have, without expanding.
long long coexpr_edge_count(const CoExpr& e);

// Canonical text; emits the fewest parentheses that reparse to the same tree.
std::string to_string(const CoExpr& e);

// Indices [first, last) into e.terminal_leaves (resp. e.nonterminal_leaves)
// of the leaves falling in the leaf range [lo, hi).
std::pair<int, int> terminal_range(const CoExpr& e, int lo, int hi);
std::pair<int, int> nonterminal_range(const CoExpr& e, int lo, int hi);

} // namespace copath

#endif
