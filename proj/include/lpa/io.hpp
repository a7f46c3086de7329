#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"
#include "lpa/talented.hpp"

namespace lpa::io {

using nlohmann::json;

inline Integer parse_integer(const json& value) {
    if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
    if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
    if (value.is_string()) {
        const auto& text = value.get_ref<const std::string&>();
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorCode::ParseError, "'" + text + "' is not a non-negative decimal integer");
        return Integer(text);
    }
    throw Error(ErrorCode::ParseError, "expected an integer or a decimal string");
}

/// Matrix JSON: {"rows": n, "cols": m, "entries": [["0", "1"], ...]}.
inline json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline ExactMatrix matrix_from_rows(const json& rows) {
    if (!rows.is_array()) throw Error(ErrorCode::ParseError, "matrix rows must be an array");
    const auto r = rows.size();
    const auto c = r == 0 ? 0 : rows.at(0).size();
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw Error(ErrorCode::ParseError, "matrix rows must all have the same length");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_integer(rows[i][j]);
    }
    return m;
}

inline ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries")) throw Error(ErrorCode::ParseError, "matrix JSON needs 'entries'");
    auto m = matrix_from_rows(j.at("entries"));
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
        throw Error(ErrorCode::ParseError, "'rows' does not match 'entries'");
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols())
        throw Error(ErrorCode::ParseError, "'cols' does not match 'entries'");
    return m;
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"id", e.id}, {"src", g.vertex_name(e.src)}, {"dst", g.vertex_name(e.dst)}});
    return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

namespace detail {

inline std::vector<std::string> vertex_names(const json& j, std::size_t fallback_count) {
    std::vector<std::string> names;
    if (j.contains("vertices")) {
        if (!j.at("vertices").is_array()) throw Error(ErrorCode::ParseError, "'vertices' must be an array");
        for (const auto& v : j.at("vertices")) {
            if (!v.is_string()) throw Error(ErrorCode::ParseError, "vertex names must be strings");
            names.push_back(v.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < fallback_count; ++i) names.push_back("v" + std::to_string(i + 1));
    }
    return names;
}

inline Graph graph_from_edge_list(const json& j) {
    if (!j.contains("vertices")) throw Error(ErrorCode::ParseError, "edge-list graph JSON needs 'vertices'");
    auto names = vertex_names(j, 0);
    Graph lookup(names, {});
    std::vector<Edge> edges;
    if (!j.at("edges").is_array()) throw Error(ErrorCode::ParseError, "'edges' must be an array");
    for (const auto& item : j.at("edges")) {
        if (!item.is_object() || !item.contains("src") || !item.contains("dst"))
            throw Error(ErrorCode::ParseError, "each edge needs 'src' and 'dst'");
        const auto src = lookup.find_vertex(item.at("src").get<std::string>());
        const auto dst = lookup.find_vertex(item.at("dst").get<std::string>());
        if (!src || !dst) throw Error(ErrorCode::ParseError, "edge refers to an unknown vertex");
        const std::size_t count = item.contains("count") ? item.at("count").get<std::size_t>() : 1;
        if (item.contains("id") && count != 1)
            throw Error(ErrorCode::ParseError, "an explicit edge id needs count 1");
        for (std::size_t k = 0; k < count; ++k) {
            std::string id = item.contains("id") ? item.at("id").get<std::string>()
                                                 : "e" + std::to_string(edges.size() + 1);
            edges.push_back({std::move(id), *src, *dst});
        }
    }
    return Graph(std::move(names), std::move(edges));
}

}  // namespace detail

/// Accepts the edge-list form {"vertices", "edges"} and the matrix form
/// {"vertices"?, "adjacency"}. With both present the edge list wins and the
/// matrix must agree with it.
inline Graph graph_from_json(const json& j) {
    try {
        if (!j.is_object()) throw Error(ErrorCode::ParseError, "graph JSON must be an object");
        const bool has_edges = j.contains("edges");
        const bool has_adjacency = j.contains("adjacency");
        if (!has_edges && !has_adjacency)
            throw Error(ErrorCode::ParseError, "graph JSON needs 'edges' or 'adjacency'");
        if (has_edges) {
            auto g = detail::graph_from_edge_list(j);
            if (has_adjacency && !(matrix_from_rows(j.at("adjacency")) == adjacency(g)))
                throw Error(ErrorCode::ParseError, "'adjacency' conflicts with 'edges'");
            return g;
        }
        auto m = matrix_from_rows(j.at("adjacency"));
        return graph_from_adjacency(detail::vertex_names(j, m.rows()), m);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, e.what());
    }
}

inline Graph graph_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return graph_from_json(j);
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return graph_from_string(buffer.str());
}

inline json vertex_set_to_json(const Graph& g, const VertexSet& h) {
    json out = json::array();
    for (auto v : h.members()) out.push_back(g.vertex_name(v));
    return out;
}

inline VertexSet vertex_set_from_names(const Graph& g, const std::vector<std::string>& names) {
    std::vector<VertexIndex> members;
    for (const auto& name : names) members.push_back(g.index_of(name));
    return VertexSet(g.vertex_count(), std::move(members));
}

inline json names_of(const Graph& g, const std::vector<VertexIndex>& vertices) {
    json out = json::array();
    for (auto v : vertices) out.push_back(g.vertex_name(v));
    return out;
}

/// Term map {"v(i)": "multiplicity"}.
inline json monoid_to_json(const Graph& g, const MonoidElement& x) {
    json out = json::object();
    for (const auto& [gen, mult] : x.terms())
        out[g.vertex_name(gen.vertex) + "(" + std::to_string(gen.shift) + ")"] = mult.str();
    return out;
}

inline json integers_to_json(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

}  // namespace lpa::io
