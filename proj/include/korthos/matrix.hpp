#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over a finite commutative ring, and the k-orthogonality predicates.
 *
 * A matrix A is left k-orthogonal when A^T A = kI and right k-orthogonal when A A^T = kI.
 * Matrices are values: every operation returns a fresh matrix.
 */

#include <korthos/ring.hpp>

#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace korthos {

/// Determinants use cofactor expansion, capped at this order.
inline constexpr std::size_t det_cap = 6;

class Matrix {
public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols) : Matrix(std::move(ring), rows, cols, {}) {}

    Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Index> entries)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::dimension_mismatch, "matrix dimensions must be positive");
        if (entries_.empty()) entries_.assign(rows_ * cols_, 0);
        if (entries_.size() != rows_ * cols_)
            throw Error(ErrorCode::dimension_mismatch, "entry count does not match " + shape());
        for (const Index e : entries_)
            if (e >= ring_.order()) throw Error(ErrorCode::invalid_parameter, "entry outside " + ring_.literal());
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Index operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
    Index& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }

    Element at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw Error(ErrorCode::dimension_mismatch, "index outside " + shape());
        return {ring_.id(), (*this)(i, j)};
    }

    void set(std::size_t i, std::size_t j, Element e) {
        if (i >= rows_ || j >= cols_) throw Error(ErrorCode::dimension_mismatch, "index outside " + shape());
        if (e.owner != ring_.id()) throw Error(ErrorCode::ring_mismatch, "entry from another ring");
        (*this)(i, j) = e.index;
    }

    std::span<const Index> entries() const noexcept { return entries_; }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    /// Entry-wise equality; comparing matrices over different rings is an error.
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (!(a.ring_ == b.ring_))
            throw Error(ErrorCode::ring_mismatch, "comparing matrices over " + a.ring_.literal() + " and " + b.ring_.literal());
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    /// Canonical order: shape, then row-major entry indices lexicographically.
    friend bool canonical_less(const Matrix& a, const Matrix& b) noexcept {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.entries_ < b.entries_;
    }

private:
    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Index> entries_;
};

struct CanonicalLess {
    bool operator()(const Matrix& a, const Matrix& b) const noexcept { return canonical_less(a, b); }
};

namespace detail {

inline void require_same_ring(const Matrix& a, const Matrix& b) {
    if (!(a.ring() == b.ring()))
        throw Error(ErrorCode::ring_mismatch, a.ring().literal() + " vs " + b.ring().literal());
}

inline Index check_scalar(const Ring& ring, Element k) {
    if (k.owner != ring.id()) throw Error(ErrorCode::ring_mismatch, "scalar from another ring than " + ring.literal());
    return k.index;
}

}  // namespace detail

inline Matrix zero(const Ring& ring, std::size_t rows, std::size_t cols) { return Matrix(ring, rows, cols); }

inline Matrix scalar(const Ring& ring, Element k, std::size_t n) {
    const Index kk = detail::check_scalar(ring, k);
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = kk;
    return m;
}

inline Matrix identity(const Ring& ring, std::size_t n) { return scalar(ring, ring.one(), n); }

/// Ones on the anti-diagonal.
inline Matrix reversal(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = ring.one().index;
    return m;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.ring(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    detail::require_same_ring(a, b);
    if (a.cols() != b.rows()) throw Error(ErrorCode::dimension_mismatch, a.shape() + " * " + b.shape());
    const Ring& r = a.ring();
    Matrix c(r, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Index s = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) s = r.add(s, r.mul(a(i, t), b(t, j)));
            c(i, j) = s;
        }
    return c;
}

inline Matrix mat_add(const Matrix& a, const Matrix& b) {
    detail::require_same_ring(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::dimension_mismatch, a.shape() + " + " + b.shape());
    Matrix c(a.ring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.ring().add(a(i, j), b(i, j));
    return c;
}

inline Matrix scalar_mul(Element k, const Matrix& a) {
    const Index kk = detail::check_scalar(a.ring(), k);
    Matrix c(a.ring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.ring().mul(kk, a(i, j));
    return c;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }

/// A^T A, the Gram matrix of the columns.
inline Matrix gram_columns(const Matrix& a) {
    const Ring& r = a.ring();
    Matrix g(r, a.cols(), a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j) {
            Index s = 0;
            for (std::size_t t = 0; t < a.rows(); ++t) s = r.add(s, r.mul(a(t, i), a(t, j)));
            g(i, j) = g(j, i) = s;
        }
    return g;
}

/// A A^T, the Gram matrix of the rows.
inline Matrix gram_rows(const Matrix& a) {
    const Ring& r = a.ring();
    Matrix g(r, a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.rows(); ++j) {
            Index s = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) s = r.add(s, r.mul(a(i, t), a(j, t)));
            g(i, j) = g(j, i) = s;
        }
    return g;
}

/// The k with m = kI, if m is a scalar matrix.
inline std::optional<Index> scalar_value(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const Index k = m(0, 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != (i == j ? k : 0)) return std::nullopt;
    return k;
}

inline bool is_scalar_matrix(const Matrix& m, Index k) {
    const auto v = scalar_value(m);
    return v && *v == k;
}

namespace detail {

inline Index cofactor_det(const Matrix& a, std::vector<std::size_t>& cols, std::size_t row) {
    const Ring& r = a.ring();
    if (cols.size() == 1) return a(row, cols[0]);
    Index total = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Index entry = a(row, cols[c]);
        if (entry == 0) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != c) rest.push_back(cols[t]);
        const Index term = r.mul(entry, cofactor_det(a, rest, row + 1));
        total = (c % 2 == 0) ? r.add(total, term) : r.sub(total, term);
    }
    return total;
}

}  // namespace detail

inline Element det(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::dimension_mismatch, "determinant of non-square " + a.shape());
    if (a.rows() > det_cap)
        throw Error(ErrorCode::size_cap_exceeded, "determinant capped at order " + std::to_string(det_cap));
    std::vector<std::size_t> cols(a.cols());
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    return {a.ring().id(), detail::cofactor_det(a, cols, 0)};
}

inline bool is_invertible(const Matrix& a) { return a.ring().is_unit(det(a)); }

struct OrthClass {
    Element k;
    bool left = false;
    bool right = false;
    bool two_sided = false;
};

inline OrthClass classify_k_orthogonal(const Matrix& a, Element k) {
    const Index kk = detail::check_scalar(a.ring(), k);
    if (!a.is_square()) throw Error(ErrorCode::dimension_mismatch, "k-orthogonality needs a square matrix");
    OrthClass out{k};
    out.left = is_scalar_matrix(gram_columns(a), kk);
    out.right = is_scalar_matrix(gram_rows(a), kk);
    out.two_sided = out.left && out.right;
    return out;
}

/// Detects whether A^T A or A A^T is scalar; A^T A takes precedence.
inline std::optional<OrthClass> find_k(const Matrix& a) {
    if (!a.is_square()) return std::nullopt;
    auto k = scalar_value(gram_columns(a));
    if (!k) k = scalar_value(gram_rows(a));
    if (!k) return std::nullopt;
    return classify_k_orthogonal(a, {a.ring().id(), *k});
}

/// [A : B], columns of B appended to A.
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
    detail::require_same_ring(a, b);
    if (a.rows() != b.rows()) throw Error(ErrorCode::dimension_mismatch, a.shape() + " | " + b.shape());
    Matrix c(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

/// Deletes the given zero-based rows.
inline Matrix delete_rows(const Matrix& a, const std::vector<std::size_t>& drop) {
    std::vector<Index> kept;
    std::size_t rows = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (std::find(drop.begin(), drop.end(), i) != drop.end()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) kept.push_back(a(i, j));
        ++rows;
    }
    for (const auto i : drop)
        if (i >= a.rows()) throw Error(ErrorCode::dimension_mismatch, "row " + std::to_string(i + 1) + " outside " + a.shape());
    if (rows == 0) throw Error(ErrorCode::dimension_mismatch, "deleting every row of " + a.shape());
    return Matrix(a.ring(), rows, a.cols(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Text format: rows separated by ';', entries by ','. Entries use the ring's element syntax.

inline std::string format_matrix(const Matrix& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out += ',';
            out += a.ring().render(a(i, j));
        }
    }
    return out;
}

inline Matrix parse_matrix(const Ring& ring, std::string_view text) {
    std::vector<Index> entries;
    std::size_t cols = 0, rows = 0;
    std::string_view body = detail::trim_view(text);
    if (!body.empty() && body.back() == ';') body.remove_suffix(1);
    for (const auto row : detail::split_top(body, ';')) {
        const auto cells = detail::split_top(row, ',');
        if (rows == 0) cols = cells.size();
        else if (cells.size() != cols)
            throw Error(ErrorCode::parse_error, "ragged matrix text '" + std::string(text) + "'");
        for (const auto cell : cells) entries.push_back(ring.parse(cell).index);
        ++rows;
    }
    return Matrix(ring, rows, cols, std::move(entries));
}

}  // namespace korthos
