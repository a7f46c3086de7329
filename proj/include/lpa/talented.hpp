#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

/// Generator v(i) of the talented monoid.
struct Generator {
    VertexIndex vertex = 0;
    std::int64_t shift = 0;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Finite N-linear combination of generators. Zero multiplicities are never
/// stored, so two elements are equal exactly when their term maps are.
class MonoidElement {
public:
    using Terms = std::map<Generator, Integer>;

    MonoidElement() = default;

    static MonoidElement generator(VertexIndex v, std::int64_t shift, Integer multiplicity = 1) {
        MonoidElement x;
        x.add(Generator{v, shift}, multiplicity);
        return x;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer multiplicity(const Generator& gen) const {
        auto it = terms_.find(gen);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(const Generator& gen, const Integer& multiplicity) {
        if (multiplicity < 0) throw Error(ErrorCode::PreconditionViolation, "multiplicities are non-negative");
        if (multiplicity == 0) return;
        terms_[gen] += multiplicity;
    }

    /// Removes `multiplicity` copies of `gen`.
    void remove(const Generator& gen, const Integer& multiplicity) {
        auto it = terms_.find(gen);
        if (it == terms_.end() || it->second < multiplicity)
            throw Error(ErrorCode::GeneratorAbsent, "generator does not occur often enough");
        it->second -= multiplicity;
        if (it->second == 0) terms_.erase(it);
    }

    MonoidElement& operator+=(const MonoidElement& other) {
        for (const auto& [gen, mult] : other.terms_) add(gen, mult);
        return *this;
    }

    friend MonoidElement operator+(MonoidElement a, const MonoidElement& b) { return a += b; }
    friend bool operator==(const MonoidElement&, const MonoidElement&) = default;

    std::string to_string(const Graph& g) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [gen, mult] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (mult != 1) os << mult << "*";
            os << g.vertex_name(gen.vertex) << "(" << gen.shift << ")";
        }
        return os.str();
    }

private:
    Terms terms_;
};

/// The Z-action: every v(i) becomes v(i + n).
inline MonoidElement shift(const MonoidElement& x, std::int64_t n) {
    MonoidElement out;
    for (const auto& [gen, mult] : x.terms()) out.add(Generator{gen.vertex, gen.shift + n}, mult);
    return out;
}

/// Rewrites one occurrence of v(i) as the sum of r(e)(i + 1) over the edges
/// leaving v.
inline MonoidElement expand_once(const Graph& g, const MonoidElement& x, const Generator& at) {
    g.check_vertex(at.vertex);
    if (x.multiplicity(at) == 0) throw Error(ErrorCode::GeneratorAbsent, "generator does not occur in the element");
    if (is_sink(g, at.vertex))
        throw Error(ErrorCode::SinkCannotExpand, "sink '" + g.vertex_name(at.vertex) + "' has no relation");
    MonoidElement out = x;
    out.remove(at, 1);
    for (auto e : g.out_edges(at.vertex)) out.add(Generator{g.edge(e).dst, at.shift + 1}, 1);
    return out;
}

/// Expands every non-sink generator below `level` until all of them sit at
/// `level`. Sink generators freeze at the shift where they were produced.
inline MonoidElement expand_to_level(const Graph& g, const MonoidElement& x, std::int64_t level) {
    for (const auto& [gen, mult] : x.terms()) {
        g.check_vertex(gen.vertex);
        if (!is_sink(g, gen.vertex) && gen.shift > level)
            throw Error(ErrorCode::PreconditionViolation, "non-sink generator lies above the target level");
    }
    MonoidElement current = x;
    for (;;) {
        // map order is (vertex, shift); find the lowest shift among expandable terms
        const Generator* next = nullptr;
        for (const auto& [gen, mult] : current.terms())
            if (gen.shift < level && !is_sink(g, gen.vertex) && (next == nullptr || gen.shift < next->shift))
                next = &gen;
        if (next == nullptr) return current;
        const Generator gen = *next;
        const Integer mult = current.multiplicity(gen);
        current.remove(gen, mult);
        for (auto e : g.out_edges(gen.vertex)) current.add(Generator{g.edge(e).dst, gen.shift + 1}, mult);
    }
}

/// v(0) expanded to level k, split into the coefficient vector on
/// v_1(k), ..., v_n(k) and the sink generators that froze below level k.
struct LevelCoefficients {
    std::vector<Integer> level;
    MonoidElement remainder;
};

inline LevelCoefficients coefficients_at_level(const Graph& g, VertexIndex v, std::size_t k) {
    g.check_vertex(v);
    const auto level = static_cast<std::int64_t>(k);
    const auto expanded = expand_to_level(g, MonoidElement::generator(v, 0), level);
    LevelCoefficients out{std::vector<Integer>(g.vertex_count()), {}};
    for (const auto& [gen, mult] : expanded.terms()) {
        if (gen.shift == level)
            out.level[gen.vertex] += mult;
        else
            out.remainder.add(gen, mult);
    }
    return out;
}

struct ShiftIdentityCheck {
    bool holds = true;
    std::string counterexample;
};

/// Checks v(0) = Adj^k v(k) generator by generator: the level-k coefficients of
/// v(0) must equal row v of Adj^k, and every frozen sink term w(j) must carry
/// exactly the number of length-j paths from v to w.
inline ShiftIdentityCheck verify_shift_identity(const Graph& g, std::size_t k) {
    const auto adj = adjacency(g);
    std::vector<ExactMatrix> powers{ExactMatrix::identity(g.vertex_count())};
    for (std::size_t j = 1; j <= k; ++j) powers.push_back(powers.back() * adj);

    ShiftIdentityCheck result;
    auto fail = [&](const std::string& what) {
        result.holds = false;
        result.counterexample = what;
        return result;
    };
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const auto coeffs = coefficients_at_level(g, v, k);
        for (VertexIndex w = 0; w < g.vertex_count(); ++w)
            if (coeffs.level[w] != powers[k](v, w))
                return fail("level coefficient of " + g.vertex_name(w) + " in " + g.vertex_name(v) +
                            "(0) is " + coeffs.level[w].str() + ", Adj^k entry is " + powers[k](v, w).str());
        for (const auto& [gen, mult] : coeffs.remainder.terms())
            if (!is_sink(g, gen.vertex) || gen.shift < 0 || gen.shift >= static_cast<std::int64_t>(k))
                return fail("unexpected remainder term in " + g.vertex_name(v) + "(0)");
        for (auto w : sinks(g))
            for (std::size_t j = 0; j < k; ++j) {
                const auto frozen = coeffs.remainder.multiplicity(Generator{w, static_cast<std::int64_t>(j)});
                if (frozen != powers[j](v, w))
                    return fail("sink " + g.vertex_name(w) + "(" + std::to_string(j) + ") in " +
                                g.vertex_name(v) + "(0) has " + frozen.str() + " copies, expected " +
                                powers[j](v, w).str());
            }
    }
    return result;
}

}  // namespace lpa
