#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "slp2/coloring.hpp"
#include "slp2/complex.hpp"
#include "slp2/laman.hpp"

namespace slp2 {

struct ParseError : std::runtime_error {
    ParseError(const std::string& source, int line, const std::string& msg)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

namespace detail {

inline std::string strip_comment(std::string s) {
    const auto pos = s.find('#');
    if (pos != std::string::npos) s.erase(pos);
    return s;
}

inline std::vector<std::string> tokens(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

inline VertexId parse_vertex(const std::string& tok, const std::string& source, int line) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size() || v < 0)
            throw std::invalid_argument("bad");
        return static_cast<VertexId>(v);
    } catch (const std::exception&) {
        throw ParseError(source, line, "expected a non-negative integer, got '" + tok + "'");
    }
}

} // namespace detail

/**
 * Facet-list text format: one facet per line as three whitespace-separated
 * vertex ids; `#` starts a comment; blank lines are ignored.
 */
inline Complex2 parse_facet_list(std::istream& in, const std::string& source) {
    std::vector<std::vector<VertexId>> triples;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto toks = detail::tokens(detail::strip_comment(raw));
        if (toks.empty()) continue;
        if (toks.size() != 3)
            throw ParseError(source, lineno,
                             "expected 3 vertex ids, got " + std::to_string(toks.size()));
        std::vector<VertexId> t;
        for (const auto& tok : toks) t.push_back(detail::parse_vertex(tok, source, lineno));
        triples.push_back(std::move(t));
    }
    try {
        return Complex2::from_facets(triples);
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, lineno, e.what());
    }
}

/// JSON mirror of the facet-list format: {"facets": [[1,3,5], ...]}.
inline Complex2 parse_complex_json(const std::string& text, const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source, 1, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw ParseError(source, 1, "expected an object with a 'facets' array");
    std::vector<std::vector<VertexId>> triples;
    for (const auto& entry : j["facets"]) {
        std::vector<VertexId> t;
        for (const auto& v : entry) {
            if (!v.is_number_integer() || v.get<long>() < 0)
                throw ParseError(source, 1, "facet entries must be non-negative integers");
            t.push_back(v.get<VertexId>());
        }
        triples.push_back(std::move(t));
    }
    try {
        return Complex2::from_facets(triples);
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, 1, e.what());
    }
}

/// Read a complex from a file, sniffing JSON by a leading '{'.
inline Complex2 read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_complex_json(text, path);
    std::istringstream ss(text);
    return parse_facet_list(ss, path);
}

inline void write_facet_list(std::ostream& out, const Complex2& c) {
    for (const Face& f : c.facets()) out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

/// Either kind of coloring file content.
struct ParsedColoring {
    std::optional<Coloring> three;
    std::optional<BiColoring> two;
};

/**
 * Coloring file: lines `vertex color` where color is 1, 2 or 3 for proper
 * 3-colorings, or b / r for bi-colorings. The two alphabets cannot be mixed.
 */
inline ParsedColoring parse_coloring(std::istream& in, const std::string& source) {
    Coloring three;
    BiColoring two;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto toks = detail::tokens(detail::strip_comment(raw));
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError(source, lineno, "expected 'vertex color'");
        const VertexId v = detail::parse_vertex(toks[0], source, lineno);
        const std::string& col = toks[1];
        if (col == "b" || col == "r") {
            two[v] = (col == "b") ? BiColor::blue : BiColor::red;
        } else if (col == "1" || col == "2" || col == "3") {
            three[v] = col[0] - '0';
        } else {
            throw ParseError(source, lineno, "color must be 1, 2, 3, b or r");
        }
    }
    if (!three.empty() && !two.empty())
        throw ParseError(source, lineno, "file mixes numeric colors with b/r");
    ParsedColoring out;
    if (!three.empty()) out.three = std::move(three);
    if (!two.empty()) out.two = std::move(two);
    return out;
}

inline ParsedColoring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_coloring(in, path);
}

inline void write_coloring(std::ostream& out, const Coloring& kappa) {
    for (const auto& [v, col] : kappa) out << v << ' ' << col << '\n';
}

inline void write_coloring(std::ostream& out, const BiColoring& pi) {
    for (const auto& [v, col] : pi)
        out << v << ' ' << (col == BiColor::blue ? 'b' : 'r') << '\n';
}

/// Edge-list text: one `u v` pair per line, same comment conventions.
inline SimpleGraph parse_edge_list(std::istream& in, const std::string& source) {
    std::vector<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto toks = detail::tokens(detail::strip_comment(raw));
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            vertices.push_back(detail::parse_vertex(toks[0], source, lineno));
            continue;
        }
        if (toks.size() != 2)
            throw ParseError(source, lineno, "expected 'u v'");
        const VertexId u = detail::parse_vertex(toks[0], source, lineno);
        const VertexId v = detail::parse_vertex(toks[1], source, lineno);
        if (u == v) throw ParseError(source, lineno, "loops are not allowed");
        vertices.push_back(u);
        vertices.push_back(v);
        edges.emplace_back(u, v);
    }
    return SimpleGraph(std::move(vertices), std::move(edges));
}

inline SimpleGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_edge_list(in, path);
}

} // namespace slp2
