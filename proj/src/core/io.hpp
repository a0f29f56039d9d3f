#ifndef COPATH_IO_HPP
#define COPATH_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace copath {

// Text formats.  Edge lists: one edge per line as `u v` or `u v weight`,
// '#' starts a comment, vertices are introduced in order of first
// appearance; a line with a single token introduces an isolated vertex.
DiGraph read_edge_list(std::istream& in);
DiGraph read_edge_list_text(const std::string& text);
std::string write_edge_list(const DiGraph& g);

// Terminal files: whitespace-separated vertex names, '#' comments.
std::vector<std::string> read_terminal_names(std::istream& in);
std::vector<std::string> read_terminal_names_text(const std::string& text);

// Cover JSON: {"paths": [[names...]], "size": k, "steiner": s, "cost": c}.
std::string cover_to_json(const DiGraph& g, const SteinerCover& c, const CoverStats& st);
SteinerCover cover_from_json(const DiGraph& g, const std::string& text);

// Board CSV: one board per line, bits separated by commas or nothing
// ("1,0,0,0" and "1000" both work), '#' comments.
std::vector<std::string> read_boards_csv(std::istream& in);
std::vector<std::string> read_boards_csv_text(const std::string& text);

} // namespace copath

#endif
