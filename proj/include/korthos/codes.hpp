#pragma once

/**
 * @file codes.hpp
 * @brief Linear codes over finite commutative rings: codeword spans, dual codes by exhaustive
 *        membership, duality classification and minimum Hamming / Lee distance.
 *
 * A leading-systematic code has generator [I_k : A]. Over the rings handled here:
 * - it is self-dual exactly when A is antiorthogonal (A A^T = -I, square)
 * - it is weakly self-dual exactly when A is right row-antiorthogonal
 * - any code is weakly self-dual exactly when G G^T = 0
 * These statements are not assumed; the checks below compute both sides independently.
 */

#include <korthos/matrix.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace korthos {

using Word = std::vector<Index>;

inline constexpr std::uint64_t default_code_budget = 1'000'000;

struct LinearCode {
    Ring ring;
    std::size_t length;
    Matrix generator;
    std::vector<Word> codewords;  // sorted, distinct
    bool systematic = false;

    std::size_t size() const noexcept { return codewords.size(); }
    bool contains(const Word& w) const { return std::binary_search(codewords.begin(), codewords.end(), w); }
};

struct DualityReport {
    std::size_t size = 0;
    std::size_t dual_size = 0;
    bool self_dual = false;
    bool weakly_self_dual = false;
    bool lcd = false;
    /// det(G G^T) is a unit; unset when k exceeds the determinant cap
    std::optional<bool> gram_nonsingular;
    std::optional<std::size_t> hamming_distance;
    std::optional<std::size_t> lee_distance;
};

struct SidedFlags {
    bool left = false;
    bool right = false;
};

namespace detail {

inline std::uint64_t space_size(const Ring& ring, std::size_t dim, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= ring.order();
        if (total > budget)
            throw Error(ErrorCode::budget_exceeded,
                        ring.literal() + "^" + std::to_string(dim) + " exceeds budget " + std::to_string(budget));
    }
    return total;
}

inline Index inner(const Ring& r, const Word& u, std::span<const Index> v) {
    Index s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s = r.add(s, r.mul(u[i], v[i]));
    return s;
}

inline std::span<const Index> row(const Matrix& m, std::size_t i) { return m.entries().subspan(i * m.cols(), m.cols()); }

/// Every x in R^dim, in index-lexicographic order.
template <class Visit>
void for_each_vector(const Ring& ring, std::size_t dim, std::uint64_t total, Visit&& visit) {
    Word v(dim, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        visit(v);
        for (std::size_t i = dim; i-- > 0;) {
            if (++v[i] < ring.order()) break;
            v[i] = 0;
        }
    }
}

/// Greedy generating rows for a submodule given by its full element list.
inline Matrix generating_rows(const Ring& r, std::size_t n, const std::vector<Word>& words) {
    std::set<Word> span{Word(n, 0)};
    std::vector<Index> rows;
    std::size_t count = 0;
    for (const auto& w : words) {
        if (span.size() == words.size()) break;
        if (span.contains(w)) continue;
        std::set<Word> grown;
        for (const auto& s : span)
            for (Index c = 0; c < r.order(); ++c) {
                Word x(n);
                for (std::size_t i = 0; i < n; ++i) x[i] = r.add(s[i], r.mul(c, w[i]));
                grown.insert(std::move(x));
            }
        span = std::move(grown);
        rows.insert(rows.end(), w.begin(), w.end());
        ++count;
    }
    if (count == 0) return Matrix(r, 1, n);
    return Matrix(r, count, n, std::move(rows));
}

inline bool leading_identity(const Matrix& g) {
    if (g.cols() < g.rows()) return false;
    const Index one = g.ring().one().index;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.rows(); ++j)
            if (g(i, j) != (i == j ? one : 0)) return false;
    return true;
}

}  // namespace detail

/// The code {uG : u in R^k}.
inline LinearCode code_from_generator(const Matrix& g, std::uint64_t budget = default_code_budget) {
    const Ring& r = g.ring();
    const std::uint64_t total = detail::space_size(r, g.rows(), budget);
    std::vector<Word> words;
    words.reserve(total);
    detail::for_each_vector(r, g.rows(), total, [&](const Word& u) {
        Word w(g.cols(), 0);
        for (std::size_t i = 0; i < g.rows(); ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < g.cols(); ++j) w[j] = r.add(w[j], r.mul(u[i], g(i, j)));
        }
        words.push_back(std::move(w));
    });
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return LinearCode{r, g.cols(), g, std::move(words), detail::leading_identity(g)};
}

/// Leading-systematic code with generator [I_k : A].
inline LinearCode systematic_from_A(const Matrix& a, std::uint64_t budget = default_code_budget) {
    return code_from_generator(hconcat(identity(a.ring(), a.rows()), a), budget);
}

/// The degenerate case of an empty A: generator I_k, the full space R^k.
inline LinearCode systematic_from_A(const Ring& ring, std::size_t k, std::uint64_t budget = default_code_budget) {
    return code_from_generator(identity(ring, k), budget);
}

/// {u in R^n : <u, g> = 0 for every generator row g}, by exhaustive membership testing.
inline LinearCode dual_code(const LinearCode& c, std::uint64_t budget = default_code_budget) {
    const Ring& r = c.ring;
    const std::uint64_t total = detail::space_size(r, c.length, budget);
    std::vector<Word> words;
    detail::for_each_vector(r, c.length, total, [&](const Word& u) {
        for (std::size_t i = 0; i < c.generator.rows(); ++i)
            if (detail::inner(r, u, detail::row(c.generator, i)) != 0) return;
        words.push_back(u);
    });
    Matrix g = detail::generating_rows(r, c.length, words);
    const bool sys = detail::leading_identity(g);
    return LinearCode{r, c.length, std::move(g), std::move(words), sys};
}

inline std::size_t hamming_weight(const Word& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Index x) { return x != 0; }));
}

/// Over Z_m, the Lee weight of x is min(x, m - x).
inline std::size_t lee_weight(const Ring& ring, const Word& w) {
    const auto* z = std::get_if<ZModKind>(&ring.kind());
    if (!z) throw Error(ErrorCode::not_applicable, "Lee weight is defined only over Z_m, not " + ring.literal());
    std::size_t total = 0;
    for (const Index x : w) total += std::min<std::size_t>(x, z->n - x);
    return total;
}

namespace detail {

template <class Weight>
std::size_t minimum_weight(const LinearCode& c, Weight weight) {
    std::optional<std::size_t> best;
    for (const auto& w : c.codewords) {
        if (hamming_weight(w) == 0) continue;
        const std::size_t x = weight(w);
        if (!best || x < *best) best = x;
    }
    if (!best) throw Error(ErrorCode::undefined_distance, "code has no nonzero codeword");
    return *best;
}

}  // namespace detail

inline std::size_t hamming_distance(const LinearCode& c) {
    return detail::minimum_weight(c, [](const Word& w) { return hamming_weight(w); });
}

inline std::size_t lee_distance(const LinearCode& c) {
    if (!std::holds_alternative<ZModKind>(c.ring.kind()))
        throw Error(ErrorCode::not_applicable, "Lee distance is defined only over Z_m, not " + c.ring.literal());
    return detail::minimum_weight(c, [&](const Word& w) { return lee_weight(c.ring, w); });
}

inline DualityReport duality_report(const LinearCode& c, std::uint64_t budget = default_code_budget) {
    const LinearCode dual = dual_code(c, budget);
    DualityReport rep;
    rep.size = c.size();
    rep.dual_size = dual.size();
    rep.self_dual = c.codewords == dual.codewords;
    rep.weakly_self_dual =
        std::includes(dual.codewords.begin(), dual.codewords.end(), c.codewords.begin(), c.codewords.end());
    std::vector<Word> common;
    std::set_intersection(c.codewords.begin(), c.codewords.end(), dual.codewords.begin(), dual.codewords.end(),
                          std::back_inserter(common));
    rep.lcd = common.size() == 1;
    if (c.generator.rows() <= det_cap) rep.gram_nonsingular = c.ring.is_unit(det(gram_rows(c.generator)));
    if (c.size() > 1) {
        rep.hamming_distance = hamming_distance(c);
        if (std::holds_alternative<ZModKind>(c.ring.kind())) rep.lee_distance = lee_distance(c);
    }
    return rep;
}

/// A^T A = -I and A A^T = -I, evaluated separately.
inline SidedFlags anti_orthogonal_check(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::dimension_mismatch, "antiorthogonality needs a square matrix");
    const OrthClass c = classify_k_orthogonal(a, a.ring().neg(a.ring().one()));
    return {c.left, c.right};
}

/// A A^T = -I_k for a k x m matrix.
inline bool row_anti_orthogonal_check(const Matrix& a) {
    return is_scalar_matrix(gram_rows(a), a.ring().neg(a.ring().one().index));
}

inline SidedFlags self_orthogonal_check(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::dimension_mismatch, "self-orthogonality needs a square matrix");
    const OrthClass c = classify_k_orthogonal(a, a.ring().zero());
    return {c.left, c.right};
}

/// G G^T = 0.
inline bool row_self_orthogonal_check(const Matrix& g) { return is_scalar_matrix(gram_rows(g), 0); }

}  // namespace korthos
