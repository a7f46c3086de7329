#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"

namespace lpa {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& row : rows) {
            if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const T& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
        return (*this)(i, j);
    }

    const std::vector<T>& entries() const noexcept { return entries_; }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const T& x) { return x == 0; });
    }

    /// Every entry strictly positive. The 0x0 matrix is not counted as positive.
    bool is_positive() const {
        return !entries_.empty() &&
               std::all_of(entries_.begin(), entries_.end(), [](const T& x) { return x > 0; });
    }

    bool row_is_zero(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
        Matrix c = a;
        for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using ExactMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Adj(E): entry (i, j) counts the edges v_i -> v_j.
inline ExactMatrix adjacency(const Graph& g) {
    ExactMatrix m(g.vertex_count(), g.vertex_count());
    for (const auto& e : g.edges()) m(e.src, e.dst) += 1;
    return m;
}

/// Graph with the given vertex names whose adjacency matrix is `m`. Edges are
/// generated row by row with ids e1, e2, ...
inline Graph graph_from_adjacency(std::vector<std::string> names, const ExactMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "adjacency matrix must be square");
    if (names.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vertex list does not match matrix size");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) < 0) throw Error(ErrorCode::InvalidGraph, "adjacency entries must be non-negative");
            for (Integer k = 0; k < m(i, j); ++k)
                edges.push_back({"e" + std::to_string(edges.size() + 1), i, j});
        }
    return Graph(std::move(names), std::move(edges));
}

inline Graph graph_from_adjacency(const ExactMatrix& m) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m.rows(); ++i) names.push_back("v" + std::to_string(i + 1));
    return graph_from_adjacency(std::move(names), m);
}

template <class T>
Matrix<T> power(const Matrix<T>& m, std::size_t k) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "power needs a square matrix");
    Matrix<T> result = Matrix<T>::identity(m.rows());
    Matrix<T> base = m;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

struct Norms {
    std::vector<Integer> row;  // row sums
    std::vector<Integer> col;  // column sums
    Integer total;

    friend bool operator==(const Norms&, const Norms&) = default;
};

inline Norms norms(const ExactMatrix& m) {
    Norms out{std::vector<Integer>(m.rows()), std::vector<Integer>(m.cols()), 0};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out.row[i] += m(i, j);
            out.col[j] += m(i, j);
            out.total += m(i, j);
        }
    return out;
}

/// Rank over the rationals by Bareiss fraction-free elimination.
inline std::size_t rank(ExactMatrix m) {
    const auto rows = m.rows();
    const auto cols = m.cols();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

inline void check_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
    if (perm.size() != n) throw Error(ErrorCode::NotABijection, "permutation has wrong length");
    std::vector<char> seen(n, 0);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw Error(ErrorCode::NotABijection, "not a permutation of 0..n-1");
        seen[p] = 1;
    }
}

/// Simultaneous row and column permutation: result(i, j) = m(perm[i], perm[j]).
/// Matches `adjacency(relabel(g, perm))`.
template <class T>
Matrix<T> permute(const Matrix<T>& m, const std::vector<std::size_t>& perm) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "permute needs a square matrix");
    check_permutation(perm, m.rows());
    Matrix<T> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(perm[i], perm[j]);
    return out;
}

/// Order-preserving choice of rows and columns.
struct SubmatrixSelector {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    static SubmatrixSelector principal(std::vector<std::size_t> idx) { return {idx, idx}; }

    static SubmatrixSelector leading(std::size_t size) {
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        return {idx, idx};
    }

    /// Formal: rows 0..m-1 and columns 0..k-1.
    bool is_formal() const { return is_prefix(rows) && is_prefix(cols); }
    bool is_principal() const { return rows == cols; }
    bool is_formal_principal() const { return is_formal() && is_principal(); }

private:
    static bool is_prefix(const std::vector<std::size_t>& idx) {
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (idx[k] != k) return false;
        return true;
    }
};

struct Submatrix {
    ExactMatrix matrix;
    bool formal = false;
    bool principal = false;

    bool formal_principal() const { return formal && principal; }
};

inline Submatrix select(const ExactMatrix& m, const SubmatrixSelector& sel) {
    auto check = [](const std::vector<std::size_t>& idx, std::size_t bound) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] >= bound) throw Error(ErrorCode::InvalidSelector, "selector index out of range");
            if (k > 0 && idx[k] <= idx[k - 1])
                throw Error(ErrorCode::InvalidSelector, "selector indices must be strictly increasing");
        }
    };
    check(sel.rows, m.rows());
    check(sel.cols, m.cols());
    ExactMatrix out(sel.rows.size(), sel.cols.size());
    for (std::size_t i = 0; i < sel.rows.size(); ++i)
        for (std::size_t j = 0; j < sel.cols.size(); ++j) out(i, j) = m(sel.rows[i], sel.cols[j]);
    return {std::move(out), sel.is_formal(), sel.is_principal()};
}

/// Rows [r0, r1) and columns [c0, c1).
template <class T>
Matrix<T> block(const Matrix<T>& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    if (r0 > r1 || r1 > m.rows() || c0 > c1 || c1 > m.cols())
        throw Error(ErrorCode::InvalidSelector, "block out of range");
    Matrix<T> out(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = m(i, j);
    return out;
}

/// Deg(E): diagonal matrix of outdegrees.
inline ExactMatrix degree_matrix(const Graph& g) {
    ExactMatrix d(g.vertex_count(), g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) d(v, v) = g.out_degree(v);
    return d;
}

/// P = Deg(E)^-1 Adj(E), exact. Requires a graph without sinks.
inline RationalMatrix stochastic(const Graph& g) {
    const auto adj = adjacency(g);
    RationalMatrix p(adj.rows(), adj.cols());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const auto deg = g.out_degree(v);
        if (deg == 0)
            throw Error(ErrorCode::HasSink, "vertex '" + g.vertex_name(v) + "' is a sink");
        for (std::size_t j = 0; j < adj.cols(); ++j) p(v, j) = Rational(adj(v, j), Integer(deg));
    }
    return p;
}

/// Smallest j <= n with m^j = 0. For non-negative matrices, m is nilpotent
/// exactly when m^n = 0, so the search stops at the dimension.
inline std::optional<std::size_t> is_nilpotent(const ExactMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "nilpotency needs a square matrix");
    const auto n = m.rows();
    if (n == 0) return 0;
    ExactMatrix p = m;
    for (std::size_t j = 1; j <= n; ++j) {
        if (p.is_zero()) return j;
        if (j < n) p = p * m;
    }
    return std::nullopt;
}

/// Permutation matrix of a single n-cycle in the given basis order. A 1x1
/// matrix [1] is the one-vertex cycle (a loop).
inline bool is_circulant_permutation(const ExactMatrix& m) {
    if (!m.is_square() || m.rows() == 0) return false;
    const auto n = m.rows();
    std::vector<std::size_t> image(n, n);
    std::vector<char> hit(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& x = m(i, j);
            if (x == 0) continue;
            if (x != 1 || image[i] != n || hit[j]) return false;
            image[i] = j;
            hit[j] = 1;
        }
    for (auto j : image)
        if (j == n) return false;
    std::size_t v = 0;
    std::size_t steps = 0;
    do {
        v = image[v];
        ++steps;
    } while (v != 0 && steps <= n);
    return steps == n;
}

/// The canonical n x n cyclic shift: ones on the superdiagonal and at (n-1, 0).
inline ExactMatrix cyclic_shift(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, (i + 1) % n) = 1;
    return m;
}

}  // namespace lpa
