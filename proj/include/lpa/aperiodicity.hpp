#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"
#include "lpa/talented.hpp"

namespace lpa {

/// Classical primitivity bound n^2 - 2n + 2 (1 for n <= 1).
inline std::size_t wielandt_bound(std::size_t n) { return n <= 1 ? 1 : n * n - 2 * n + 2; }

inline void require_strongly_connected(const Graph& g) {
    if (!is_strongly_connected(g))
        throw Error(ErrorCode::NotStronglyConnected, "graph is not strongly connected");
}

/// gcd of all cycle lengths, 0 when there is no cycle.
inline std::size_t period(const Graph& g) {
    require_strongly_connected(g);
    std::size_t d = 0;
    for_each_cycle(g, [&](const std::vector<EdgeIndex>& edges) {
        d = std::gcd(d, edges.size());
        return d != 1;
    });
    return d;
}

namespace detail {

using Pattern = std::vector<char>;

inline Pattern support(const ExactMatrix& m) {
    Pattern p(m.entries().size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = m.entries()[k] != 0;
    return p;
}

inline Pattern boolean_product(const Pattern& a, const Pattern& b, std::size_t n) {
    Pattern c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i * n + k])
                for (std::size_t j = 0; j < n; ++j) c[i * n + j] |= b[k * n + j];
    return c;
}

inline bool all_set(const Pattern& p) {
    return !p.empty() && std::all_of(p.begin(), p.end(), [](char c) { return c != 0; });
}

/// First k in [1, wielandt_bound] whose power is entrywise positive. The zero
/// pattern of Adj^k is that of the boolean power, so the scan runs on patterns.
inline std::optional<std::size_t> first_positive_power(const Graph& g) {
    const auto n = g.vertex_count();
    if (n == 0) return std::nullopt;
    const auto base = support(adjacency(g));
    auto current = base;
    for (std::size_t k = 1; k <= wielandt_bound(n); ++k) {
        if (all_set(current)) return k;
        current = boolean_product(current, base, n);
    }
    return std::nullopt;
}

}  // namespace detail

/// The bare matrix test without the scope check. A graph that is not strongly
/// connected never passes it.
inline bool has_positive_power(const Graph& g) { return detail::first_positive_power(g).has_value(); }

/// Some power Adj^k with k <= n^2 - 2n + 2 is strictly positive.
inline bool is_aperiodic(const Graph& g) {
    require_strongly_connected(g);
    return detail::first_positive_power(g).has_value();
}

/// Least k0 with Adj^k0 > 0, confirmed on the exact powers k0..k0+n.
inline std::size_t aperiodic_index(const Graph& g) {
    require_strongly_connected(g);
    const auto k0 = detail::first_positive_power(g);
    if (!k0) throw Error(ErrorCode::NotAperiodic, "no positive power within the Wielandt bound");
    const auto adj = adjacency(g);
    auto p = power(adj, *k0);
    for (std::size_t k = *k0; k <= *k0 + g.vertex_count(); ++k) {
        if (!p.is_positive())
            throw Error(ErrorCode::NotAperiodic, "Adj^" + std::to_string(k) + " lost positivity");
        p = p * adj;
    }
    return *k0;
}

/// Expands each v(0) to level k in the talented monoid and checks that every
/// vertex occurs at level k with a positive coefficient.
inline bool verify_positive_representation(const Graph& g, std::size_t k) {
    require_strongly_connected(g);
    if (!detail::first_positive_power(g))
        throw Error(ErrorCode::NotAperiodic, "graph is not aperiodic");
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const auto coeffs = coefficients_at_level(g, v, k);
        for (const auto& c : coeffs.level)
            if (c <= 0) return false;
    }
    return true;
}

struct AperiodicityReport {
    bool strongly_connected = false;
    std::optional<std::size_t> period;  // absent when not strongly connected
    bool aperiodic = false;
    std::optional<std::size_t> index;
    std::size_t wielandt_bound = 0;
    bool applicable = false;
    std::string note;
};

/// Never throws on the scope restriction: a graph that is not strongly
/// connected is reported as not applicable.
inline AperiodicityReport analyze_aperiodicity(const Graph& g) {
    AperiodicityReport r;
    r.wielandt_bound = wielandt_bound(g.vertex_count());
    r.strongly_connected = is_strongly_connected(g);
    if (!r.strongly_connected) {
        r.note = "not applicable: aperiodicity is defined for strongly connected graphs only";
        return r;
    }
    r.applicable = true;
    r.note = "scope restricted to strongly connected graphs";
    r.period = period(g);
    r.aperiodic = is_aperiodic(g);
    if (r.aperiodic) r.index = aperiodic_index(g);
    return r;
}

}  // namespace lpa
