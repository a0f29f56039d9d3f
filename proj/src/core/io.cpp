#include "core/io.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace copath {

namespace {

// strips a '#' comment and splits on whitespace
std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t)
        toks.push_back(t);
    return toks;
}

int intern(DiGraph& g, const std::string& name) {
    return g.has_vertex(name) ? g.vertex_id(name) : g.add_vertex(name);
}

} // namespace

DiGraph read_edge_list(std::istream& in) {
    DiGraph g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty())
            continue;
        try {
            if (toks.size() == 1) {
                intern(g, toks[0]);
            } else if (toks.size() <= 3) {
                int u = intern(g, toks[0]);
                int v = intern(g, toks[1]);
                double w = 1.0;
                if (toks.size() == 3) {
                    std::size_t used = 0;
                    w = std::stod(toks[2], &used);
                    if (used != toks[2].size())
                        throw input_error("bad weight '" + toks[2] + "'");
                }
                g.add_edge(u, v, w);
            } else {
                throw input_error("expected `u v [weight]`");
            }
        } catch (const std::exception& ex) {
            throw parse_error("edge list line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return g;
}

DiGraph read_edge_list_text(const std::string& text) {
    std::istringstream is(text);
    return read_edge_list(is);
}

namespace {

std::string num_text(double v) {
    double r = std::round(v);
    if (v == r && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(r));
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::string write_edge_list(const DiGraph& g) {
    std::string out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.out(v).empty() && g.in(v).empty())
            out += g.name(v) + "\n";
    for (auto [u, v] : g.edges()) {
        out += g.name(u) + " " + g.name(v);
        if (g.weighted())
            out += " " + num_text(g.weight(u, v));
        out += "\n";
    }
    return out;
}

std::vector<std::string> read_terminal_names(std::istream& in) {
    std::vector<std::string> names;
    std::string line;
    while (std::getline(in, line))
        for (auto& t : tokens_of(line))
            names.push_back(std::move(t));
    return names;
}

std::vector<std::string> read_terminal_names_text(const std::string& text) {
    std::istringstream is(text);
    return read_terminal_names(is);
}

std::string cover_to_json(const DiGraph& g, const SteinerCover& c, const CoverStats& st) {
    nlohmann::ordered_json j;
    j["paths"] = nlohmann::ordered_json::array();
    for (const DirectedPath& p : c.paths) {
        nlohmann::ordered_json names = nlohmann::ordered_json::array();
        for (int v : p.verts)
            names.push_back(g.name(v));
        j["paths"].push_back(std::move(names));
    }
    j["size"] = st.size;
    j["steiner"] = st.steiner;
    double r = std::round(st.cost);
    if (st.cost == r && std::abs(st.cost) < 1e15)
        j["cost"] = static_cast<long long>(r);
    else
        j["cost"] = st.cost;
    return j.dump();
}

SteinerCover cover_from_json(const DiGraph& g, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw parse_error(std::string("cover json: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("paths") || !j["paths"].is_array())
        throw parse_error("cover json: expected an object with a \"paths\" array");
    SteinerCover c;
    for (const auto& jp : j["paths"]) {
        if (!jp.is_array())
            throw parse_error("cover json: each path must be an array of names");
        DirectedPath p;
        for (const auto& jv : jp) {
            if (!jv.is_string())
                throw parse_error("cover json: vertex names must be strings");
            p.verts.push_back(g.vertex_id(jv.get<std::string>()));
        }
        c.paths.push_back(std::move(p));
    }
    return c;
}

std::vector<std::string> read_boards_csv(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        std::string row;
        for (char ch : body) {
            if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r' || ch == ';')
                continue;
            if (ch != '0' && ch != '1')
                throw parse_error("boards line " + std::to_string(lineno)
                                  + ": unexpected character '" + std::string(1, ch) + "'");
            row += ch;
        }
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> read_boards_csv_text(const std::string& text) {
    std::istringstream is(text);
    return read_boards_csv(is);
}

} // namespace copath
