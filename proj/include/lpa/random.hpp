#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa::random {

using Engine = std::mt19937_64;

inline std::size_t uniform(Engine& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random multigraph on 1..max_n vertices. Each ordered pair (loops included)
/// is present with probability `density` and then carries 1..max_mult edges.
inline Graph multigraph(Engine& rng, std::size_t max_n, std::size_t max_mult, double density = 0.35,
                        std::size_t min_n = 1) {
    const auto n = uniform(rng, min_n, max_n);
    std::bernoulli_distribution present(density);
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    for (VertexIndex i = 0; i < n; ++i)
        for (VertexIndex j = 0; j < n; ++j)
            if (present(rng))
                for (std::size_t m = uniform(rng, 1, max_mult); m > 0; --m) pairs.emplace_back(i, j);
    return Graph::from_pairs(n, pairs);
}

/// Strongly connected multigraph: a random Hamiltonian cycle plus random extra
/// edges. A single vertex may come out edgeless.
inline Graph strongly_connected(Engine& rng, std::size_t max_n, std::size_t max_mult, double density = 0.2) {
    const auto n = uniform(rng, 1, max_n);
    std::vector<VertexIndex> tour(n);
    std::iota(tour.begin(), tour.end(), VertexIndex{0});
    std::shuffle(tour.begin(), tour.end(), rng);
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    if (n > 1)
        for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(tour[k], tour[(k + 1) % n]);
    std::bernoulli_distribution present(density);
    for (VertexIndex i = 0; i < n; ++i)
        for (VertexIndex j = 0; j < n; ++j)
            if (present(rng))
                for (std::size_t m = uniform(rng, 1, max_mult); m > 0; --m) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    return Graph::from_pairs(n, pairs);
}

/// A cycle without exits plus a random tail. Tail vertices may point into the
/// cycle and among themselves; cycle vertices emit only their cycle edge.
/// Vertex labels are shuffled so the cycle is not at the front.
struct CometLike {
    Graph graph;
    std::vector<EdgeIndex> cycle_edges;
};

inline CometLike comet_like(Engine& rng, std::size_t max_cycle, std::size_t max_tail, double density = 0.3) {
    const auto len = uniform(rng, 1, max_cycle);
    const auto tail = uniform(rng, 0, max_tail);
    const auto n = len + tail;
    std::vector<VertexIndex> label(n);
    std::iota(label.begin(), label.end(), VertexIndex{0});
    std::shuffle(label.begin(), label.end(), rng);

    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    for (std::size_t k = 0; k < len; ++k) pairs.emplace_back(label[k], label[(k + 1) % len]);
    std::bernoulli_distribution present(density);
    for (std::size_t i = len; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (present(rng))
                for (std::size_t m = uniform(rng, 1, 2); m > 0; --m) pairs.emplace_back(label[i], label[j]);
    CometLike out{Graph::from_pairs(n, pairs), {}};
    for (std::size_t k = 0; k < len; ++k) out.cycle_edges.push_back(k);
    return out;
}

}  // namespace lpa::random
