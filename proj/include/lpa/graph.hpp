#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
    std::string id;
    VertexIndex src = 0;
    VertexIndex dst = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free subset of the vertex indices of a graph with
/// `universe` vertices.
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(std::size_t universe, std::vector<VertexIndex> members)
        : universe_(universe), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
            throw Error(ErrorCode::DuplicateIndex, "vertex set contains a repeated index");
        if (!members_.empty() && members_.back() >= universe_)
            throw Error(ErrorCode::IndexOutOfRange, "vertex set index out of range");
    }

    static VertexSet empty(std::size_t universe) { return VertexSet(universe, {}); }

    static VertexSet full(std::size_t universe) {
        std::vector<VertexIndex> all(universe);
        std::iota(all.begin(), all.end(), VertexIndex{0});
        return VertexSet(universe, std::move(all));
    }

    static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
        std::vector<VertexIndex> members;
        for (std::size_t i = 0; i < universe; ++i)
            if (mask >> i & 1U) members.push_back(i);
        return VertexSet(universe, std::move(members));
    }

    static VertexSet from_flags(const std::vector<char>& flags) {
        std::vector<VertexIndex> members;
        for (std::size_t i = 0; i < flags.size(); ++i)
            if (flags[i]) members.push_back(i);
        return VertexSet(flags.size(), std::move(members));
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool is_empty() const noexcept { return members_.empty(); }
    const std::vector<VertexIndex>& members() const noexcept { return members_; }

    bool contains(VertexIndex v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

    std::vector<char> flags() const {
        std::vector<char> out(universe_, 0);
        for (auto v : members_) out[v] = 1;
        return out;
    }

    std::uint64_t to_mask() const {
        if (universe_ > 64) throw Error(ErrorCode::TooLarge, "bit mask needs at most 64 vertices");
        std::uint64_t mask = 0;
        for (auto v : members_) mask |= std::uint64_t{1} << v;
        return mask;
    }

    VertexSet complement() const {
        std::vector<VertexIndex> out;
        for (VertexIndex v = 0; v < universe_; ++v)
            if (!contains(v)) out.push_back(v);
        return VertexSet(universe_, std::move(out));
    }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                             members_.end());
    }

    VertexSet united(const VertexSet& other) const {
        std::vector<VertexIndex> out;
        std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end(), std::back_inserter(out));
        return VertexSet(std::max(universe_, other.universe_), std::move(out));
    }

    VertexSet intersected(const VertexSet& other) const {
        std::vector<VertexIndex> out;
        std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                              other.members_.end(), std::back_inserter(out));
        return VertexSet(std::max(universe_, other.universe_), std::move(out));
    }

    VertexSet minus(const VertexSet& other) const {
        std::vector<VertexIndex> out;
        std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                            other.members_.end(), std::back_inserter(out));
        return VertexSet(universe_, std::move(out));
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.members_ == b.members_;
    }
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        return a.members_ < b.members_;
    }

private:
    std::size_t universe_ = 0;
    std::vector<VertexIndex> members_;
};

/// Finite directed multigraph. The vertex order is the ordered matrix basis:
/// row and column i of every matrix derived from the graph belong to vertex i.
class Graph {
public:
    Graph() = default;

    Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!index_.emplace(vertices_[i], i).second)
                throw Error(ErrorCode::InvalidGraph, "duplicate vertex '" + vertices_[i] + "'");
        std::unordered_set<std::string> ids;
        out_.resize(vertices_.size());
        in_.resize(vertices_.size());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const auto& edge = edges_[e];
            if (edge.src >= vertices_.size() || edge.dst >= vertices_.size())
                throw Error(ErrorCode::IndexOutOfRange, "edge '" + edge.id + "' endpoint out of range");
            if (!ids.insert(edge.id).second)
                throw Error(ErrorCode::InvalidGraph, "duplicate edge id '" + edge.id + "'");
            out_[edge.src].push_back(e);
            in_[edge.dst].push_back(e);
        }
    }

    /// Builds a graph from `(src, dst)` index pairs, naming vertices v1..vn and
    /// edges e1..em.
    static Graph from_pairs(std::size_t n, const std::vector<std::pair<VertexIndex, VertexIndex>>& pairs) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            edges.push_back({"e" + std::to_string(k + 1), pairs[k].first, pairs[k].second});
        return Graph(std::move(names), std::move(edges));
    }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

    const std::string& vertex_name(VertexIndex v) const {
        check_vertex(v);
        return vertices_[v];
    }

    std::optional<VertexIndex> find_vertex(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VertexIndex index_of(const std::string& name) const {
        auto v = find_vertex(name);
        if (!v) throw Error(ErrorCode::IndexOutOfRange, "unknown vertex '" + name + "'");
        return *v;
    }

    const std::vector<EdgeIndex>& out_edges(VertexIndex v) const {
        check_vertex(v);
        return out_[v];
    }

    const std::vector<EdgeIndex>& in_edges(VertexIndex v) const {
        check_vertex(v);
        return in_[v];
    }

    std::size_t out_degree(VertexIndex v) const { return out_edges(v).size(); }

    void check_vertex(VertexIndex v) const {
        if (v >= vertices_.size())
            throw Error(ErrorCode::IndexOutOfRange,
                        "vertex index " + std::to_string(v) + " out of range");
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexIndex> index_;
    std::vector<std::vector<EdgeIndex>> out_;
    std::vector<std::vector<EdgeIndex>> in_;
};

/// Non-empty edge sequence in which consecutive edges compose.
class PathSeq {
public:
    PathSeq(const Graph& g, std::vector<EdgeIndex> edges) : edges_(std::move(edges)) {
        if (edges_.empty()) throw Error(ErrorCode::PreconditionViolation, "path must be non-empty");
        for (auto e : edges_)
            if (e >= g.edge_count()) throw Error(ErrorCode::IndexOutOfRange, "edge index out of range");
        for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
            if (g.edge(edges_[i]).dst != g.edge(edges_[i + 1]).src)
                throw Error(ErrorCode::PreconditionViolation, "edges do not compose into a path");
        src_ = g.edge(edges_.front()).src;
        dst_ = g.edge(edges_.back()).dst;
    }

    const std::vector<EdgeIndex>& edges() const noexcept { return edges_; }
    std::size_t length() const noexcept { return edges_.size(); }
    VertexIndex src() const noexcept { return src_; }
    VertexIndex dst() const noexcept { return dst_; }

    friend bool operator==(const PathSeq&, const PathSeq&) = default;

private:
    std::vector<EdgeIndex> edges_;
    VertexIndex src_ = 0;
    VertexIndex dst_ = 0;
};

/// Closed path whose edge sources are pairwise distinct, rotated so that it
/// starts at its smallest vertex index.
class CycleSeq {
public:
    CycleSeq(const Graph& g, std::vector<EdgeIndex> edges) : path_(g, std::move(edges)) {
        if (path_.src() != path_.dst()) throw Error(ErrorCode::NotACycle, "path is not closed");
        std::vector<VertexIndex> seen;
        for (auto e : path_.edges()) seen.push_back(g.edge(e).src);
        auto sorted = seen;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorCode::NotACycle, "cycle revisits a vertex");
        auto start = std::min_element(seen.begin(), seen.end()) - seen.begin();
        auto rotated = path_.edges();
        std::rotate(rotated.begin(), rotated.begin() + start, rotated.end());
        path_ = PathSeq(g, std::move(rotated));
        vertices_.clear();
        for (auto e : path_.edges()) vertices_.push_back(g.edge(e).src);
    }

    const std::vector<EdgeIndex>& edges() const noexcept { return path_.edges(); }
    /// Vertices in cycle order, starting from the smallest index.
    const std::vector<VertexIndex>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return path_.length(); }
    const PathSeq& path() const noexcept { return path_; }

    bool visits(VertexIndex v) const {
        return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
    }

    friend bool operator==(const CycleSeq& a, const CycleSeq& b) { return a.path_ == b.path_; }
    friend bool operator<(const CycleSeq& a, const CycleSeq& b) {
        if (a.vertices_ != b.vertices_) return a.vertices_ < b.vertices_;
        return a.edges() < b.edges();
    }

private:
    PathSeq path_;
    std::vector<VertexIndex> vertices_;
};

inline const std::vector<EdgeIndex>& out_edges(const Graph& g, VertexIndex v) {
    return g.out_edges(v);
}

inline bool is_sink(const Graph& g, VertexIndex v) { return g.out_edges(v).empty(); }

inline bool is_source(const Graph& g, VertexIndex v) { return g.in_edges(v).empty(); }

inline std::vector<VertexIndex> sinks(const Graph& g) {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (is_sink(g, v)) out.push_back(v);
    return out;
}

inline std::vector<VertexIndex> sources(const Graph& g) {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (is_source(g, v)) out.push_back(v);
    return out;
}

inline void check_vertex_set(const Graph& g, const VertexSet& h) {
    if (!h.members().empty() && h.members().back() >= g.vertex_count())
        throw Error(ErrorCode::IndexOutOfRange, "vertex set does not fit the graph");
}

/// E[H]: vertices of `h` in the order of `g`, edges with both ends in `h`.
inline Graph induced_subgraph(const Graph& g, const VertexSet& h) {
    check_vertex_set(g, h);
    std::vector<VertexIndex> relabel(g.vertex_count(), 0);
    std::vector<std::string> names;
    for (auto v : h.members()) {
        relabel[v] = names.size();
        names.push_back(g.vertex_name(v));
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (h.contains(e.src) && h.contains(e.dst))
            edges.push_back({e.id, relabel[e.src], relabel[e.dst]});
    return Graph(std::move(names), std::move(edges));
}

/// H2/H1 without any hereditary or saturated check: vertices H2 \ H1 and the
/// edges of `g` with both endpoints there. For H2 = E^0 and hereditary H1 this
/// is exactly {e : s(e) not in H1, r(e) not in H1}.
inline Graph quotient_graph(const Graph& g, const VertexSet& h_small, const VertexSet& h_big) {
    check_vertex_set(g, h_small);
    check_vertex_set(g, h_big);
    if (!h_small.is_subset_of(h_big))
        throw Error(ErrorCode::PreconditionViolation, "quotient needs H1 contained in H2");
    return induced_subgraph(g, h_big.minus(h_small));
}

/// Reorders the vertex basis: vertex k of the result is vertex `order[k]` of `g`.
inline Graph relabel(const Graph& g, const std::vector<VertexIndex>& order) {
    const auto n = g.vertex_count();
    if (order.size() != n) throw Error(ErrorCode::NotABijection, "permutation has wrong length");
    std::vector<VertexIndex> position(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (order[k] >= n || position[order[k]] != n)
            throw Error(ErrorCode::NotABijection, "not a permutation of the vertex indices");
        position[order[k]] = k;
    }
    std::vector<std::string> names;
    for (auto v : order) names.push_back(g.vertex_name(v));
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({e.id, position[e.src], position[e.dst]});
    return Graph(std::move(names), std::move(edges));
}

inline std::string ghost_id(const std::string& id) { return id + "*"; }

/// Transpose graph: every edge e becomes a ghost e* with the ends swapped.
/// Applying it twice restores the original ids, so opposite is an involution.
inline Graph opposite_graph(const Graph& g) {
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        std::string id = e.id;
        if (!id.empty() && id.back() == '*')
            id.pop_back();
        else
            id = ghost_id(id);
        edges.push_back({std::move(id), e.dst, e.src});
    }
    return Graph(g.vertices(), std::move(edges));
}

/// Double graph: the real edges followed by one ghost per real edge.
inline Graph double_graph(const Graph& g) {
    auto edges = g.edges();
    for (const auto& e : g.edges()) edges.push_back({ghost_id(e.id), e.dst, e.src});
    return Graph(g.vertices(), std::move(edges));
}

inline std::vector<char> reachable_from(const Graph& g, VertexIndex start, bool forward = true) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexIndex> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto e : forward ? g.out_edges(v) : g.in_edges(v)) {
            auto w = forward ? g.edge(e).dst : g.edge(e).src;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

/// A single vertex without edges, and the empty graph, count as strongly connected.
inline bool is_strongly_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto all = [](const std::vector<char>& s) {
        return std::all_of(s.begin(), s.end(), [](char c) { return c != 0; });
    };
    return all(reachable_from(g, 0, true)) && all(reachable_from(g, 0, false));
}

/// Calls `visit` once per cycle, each in canonical rotation. Returning false
/// from `visit` stops the enumeration. Cycles are edge sequences, so parallel
/// edges yield distinct cycles.
inline void for_each_cycle(const Graph& g, const std::function<bool(const std::vector<EdgeIndex>&)>& visit) {
    const auto n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<EdgeIndex> edges;
    bool stop = false;

    std::function<void(VertexIndex, VertexIndex)> extend = [&](VertexIndex start, VertexIndex v) {
        for (auto e : g.out_edges(v)) {
            if (stop) return;
            auto w = g.edge(e).dst;
            if (w == start) {
                edges.push_back(e);
                if (!visit(edges)) stop = true;
                edges.pop_back();
            } else if (w > start && !on_path[w]) {
                on_path[w] = 1;
                edges.push_back(e);
                extend(start, w);
                edges.pop_back();
                on_path[w] = 0;
            }
        }
    };

    for (VertexIndex start = 0; start < n && !stop; ++start) {
        on_path[start] = 1;
        extend(start, start);
        on_path[start] = 0;
    }
}

/// Every vertex-simple cycle, ordered by vertex sequence and then edge indices.
inline std::vector<CycleSeq> find_all_cycles(const Graph& g) {
    std::vector<CycleSeq> out;
    for_each_cycle(g, [&](const std::vector<EdgeIndex>& edges) {
        out.emplace_back(g, edges);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Edges leaving the cycle: e not in the cycle with s(e) on the cycle.
inline std::vector<EdgeIndex> cycle_exits(const Graph& g, const CycleSeq& c) {
    std::vector<EdgeIndex> exits;
    for (auto v : c.vertices())
        for (auto e : g.out_edges(v))
            if (std::find(c.edges().begin(), c.edges().end(), e) == c.edges().end())
                exits.push_back(e);
    std::sort(exits.begin(), exits.end());
    return exits;
}

inline bool has_exit(const Graph& g, const CycleSeq& c) { return !cycle_exits(g, c).empty(); }

inline bool is_comet(const Graph& g) {
    std::vector<std::vector<EdgeIndex>> found;
    for_each_cycle(g, [&](const std::vector<EdgeIndex>& edges) {
        found.push_back(edges);
        return found.size() < 2;
    });
    if (found.size() != 1) return false;
    return !has_exit(g, CycleSeq(g, found.front()));
}

}  // namespace lpa
