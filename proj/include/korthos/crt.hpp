#pragma once

/**
 * @file crt.hpp
 * @brief Chinese-remainder splitting of semi-local rings into component rings, and the
 *        product decompositions of k-orthogonal censuses that follow from it.
 *
 * Supported splits:
 * - Z_n -> product of Z_(p^e) over the prime-power factors of n, x -> (x mod p^e, ...),
 *   reconstruction by Bezout coefficients
 * - F + vF, v^2 = v (char 2): a + vb -> (a + b, a)
 * - F + vF, v^2 = 1 (odd char): a + vb -> (a - b, a + b)
 * - Galois fields and explicit products split as themselves
 */

#include <korthos/search.hpp>

#include <limits>
#include <set>
#include <span>
#include <stdexcept>

namespace korthos {

struct CrtSplit {
    Ring source;
    std::vector<Ring> factors;
    std::vector<Index> forward_table;   // source.order() x factors.size()
    std::vector<Index> backward_table;  // tuple code (mixed radix, first factor most significant) -> source

    bool to_fields() const {
        return std::all_of(factors.begin(), factors.end(), [](const Ring& f) { return f.is_field(); });
    }

    Index forward_index(Index a, std::size_t j) const noexcept { return forward_table[std::size_t{a} * factors.size() + j]; }

    std::vector<Element> forward(Element a) const {
        if (!source.owns(a)) throw Error(ErrorCode::ring_mismatch, "element not in " + source.literal());
        std::vector<Element> out;
        for (std::size_t j = 0; j < factors.size(); ++j) out.push_back({factors[j].id(), forward_index(a.index, j)});
        return out;
    }

    Element backward(std::span<const Element> parts) const {
        if (parts.size() != factors.size()) throw Error(ErrorCode::dimension_mismatch, "wrong tuple length");
        Index code = 0;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (!factors[j].owns(parts[j])) throw Error(ErrorCode::ring_mismatch, "tuple entry not in " + factors[j].literal());
            code = code * factors[j].order() + parts[j].index;
        }
        return {source.id(), backward_table[code]};
    }
};

namespace detail {

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    return ((t0 % m) + m) % m;
}

/// Round trip and homomorphism laws, exhaustively.
inline void verify_split(const CrtSplit& s) {
    const Ring& r = s.source;
    const std::size_t m = s.factors.size();
    const auto fail = [&](const std::string& what) {
        throw std::logic_error("CRT split of " + r.literal() + " is not " + what);
    };
    std::vector<bool> hit(r.order(), false);
    for (Index code = 0; code < r.order(); ++code) {
        const Index a = s.backward_table[code];
        if (hit[a]) fail("injective");
        hit[a] = true;
    }
    for (Index a = 0; a < r.order(); ++a) {
        Index code = 0;
        for (std::size_t j = 0; j < m; ++j) code = code * s.factors[j].order() + s.forward_index(a, j);
        if (s.backward_table[code] != a) fail("a round trip");
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (s.forward_index(0, j) != 0 || s.forward_index(r.one().index, j) != s.factors[j].one().index)
            fail("unital");
    }
    if (r.order() > axiom_check_limit) return;
    for (Index a = 0; a < r.order(); ++a)
        for (Index b = 0; b < r.order(); ++b)
            for (std::size_t j = 0; j < m; ++j) {
                const Ring& f = s.factors[j];
                if (s.forward_index(r.add(a, b), j) != f.add(s.forward_index(a, j), s.forward_index(b, j))) fail("additive");
                if (s.forward_index(r.mul(a, b), j) != f.mul(s.forward_index(a, j), s.forward_index(b, j)))
                    fail("multiplicative");
            }
}

}  // namespace detail

/// Splits R into its component rings. Local rings such as Z4 split as themselves.
inline CrtSplit split(const Ring& ring) {
    CrtSplit s{ring, {}, {}, {}};
    const Index order = ring.order();
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ZModKind>) {
                std::vector<std::int64_t> moduli;
                for (const auto& [p, e] : detail::factorize(k.n)) moduli.push_back(static_cast<std::int64_t>(detail::ipow(p, e)));
                if (moduli.size() == 1) {
                    s.factors = {ring};
                } else {
                    for (const auto m : moduli) s.factors.push_back(make_zmod(static_cast<std::uint64_t>(m)));
                }
                s.forward_table.resize(std::size_t{order} * s.factors.size());
                for (Index x = 0; x < order; ++x)
                    for (std::size_t j = 0; j < s.factors.size(); ++j)
                        s.forward_table[std::size_t{x} * s.factors.size() + j] =
                            static_cast<Index>(x % s.factors[j].order());
                // x = sum r_j * M_j * (M_j^-1 mod m_j) mod n
                const std::int64_t n = k.n;
                std::vector<std::int64_t> weight;
                for (const auto& f : s.factors) {
                    const std::int64_t mj = f.order(), big = n / mj;
                    weight.push_back(big * detail::mod_inverse(big % mj, mj) % n);
                }
                s.backward_table.resize(order);
                for (Index code = 0; code < order; ++code) {
                    Index c = code;
                    std::int64_t x = 0;
                    for (std::size_t j = s.factors.size(); j-- > 0;) {
                        const Index o = s.factors[j].order();
                        x = (x + static_cast<std::int64_t>(c % o) * weight[j]) % n;
                        c /= o;
                    }
                    s.backward_table[code] = static_cast<Index>(x);
                }
            } else if constexpr (std::is_same_v<K, VExtensionKind>) {
                const Ring& f = k.base;
                const Index q = f.order();
                s.factors = {f, f};
                s.forward_table.resize(std::size_t{order} * 2);
                s.backward_table.resize(order);
                const Index half = k.rule == VSquare::one ? f.inverse(f.add(f.one().index, f.one().index)) : 0;
                for (Index a = 0; a < q; ++a)
                    for (Index b = 0; b < q; ++b) {
                        const Index x = a * q + b;
                        if (k.rule == VSquare::v) {
                            s.forward_table[2 * std::size_t{x}] = f.add(a, b);
                            s.forward_table[2 * std::size_t{x} + 1] = a;
                            // (s, t) -> a = t, b = s - t
                            s.backward_table[a * q + b] = b * q + f.sub(a, b);
                        } else {
                            s.forward_table[2 * std::size_t{x}] = f.sub(a, b);
                            s.forward_table[2 * std::size_t{x} + 1] = f.add(a, b);
                            // (s, t) -> a = (s + t) / 2, b = (t - s) / 2
                            s.backward_table[a * q + b] = f.mul(f.add(a, b), half) * q + f.mul(f.sub(b, a), half);
                        }
                    }
            } else if constexpr (std::is_same_v<K, ProductKind>) {
                s.factors = k.components;
                const std::size_t m = s.factors.size();
                s.forward_table.resize(std::size_t{order} * m);
                s.backward_table.resize(order);
                for (Index x = 0; x < order; ++x) {
                    Index c = x;
                    for (std::size_t j = m; j-- > 0;) {
                        s.forward_table[std::size_t{x} * m + j] = c % s.factors[j].order();
                        c /= s.factors[j].order();
                    }
                    s.backward_table[x] = x;
                }
            } else {
                s.factors = {ring};
                s.forward_table.resize(order);
                s.backward_table.resize(order);
                for (Index x = 0; x < order; ++x) s.forward_table[x] = s.backward_table[x] = x;
            }
        },
        ring.kind());
    detail::verify_split(s);
    return s;
}

/// As split(), but every factor must be a field.
inline CrtSplit split_to_fields(const Ring& ring) {
    CrtSplit s = split(ring);
    if (!s.to_fields())
        throw Error(ErrorCode::not_splittable_to_fields, ring.literal() + " has a non-field residue component");
    return s;
}

inline std::vector<Matrix> map_matrix(const CrtSplit& s, const Matrix& a) {
    if (!(a.ring() == s.source)) throw Error(ErrorCode::ring_mismatch, "matrix not over " + s.source.literal());
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < s.factors.size(); ++j) {
        Matrix m(s.factors[j], a.rows(), a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = s.forward_index(a(r, c), j);
        out.push_back(std::move(m));
    }
    return out;
}

inline Matrix unmap_matrix(const CrtSplit& s, std::span<const Matrix> parts) {
    if (parts.size() != s.factors.size()) throw Error(ErrorCode::dimension_mismatch, "wrong number of components");
    Matrix out(s.source, parts[0].rows(), parts[0].cols());
    std::vector<Element> tuple(parts.size());
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) {
            for (std::size_t j = 0; j < parts.size(); ++j) tuple[j] = parts[j].at(r, c);
            out(r, c) = s.backward(tuple).index;
        }
    return out;
}

struct IsomorphismReport {
    Side side = Side::left;
    std::vector<Ring> factors;
    std::vector<Element> a;  // image of k in each factor
    std::vector<std::size_t> factor_counts;
    std::uint64_t product = 1;
    std::size_t direct_count = 0;
    bool bijection_ok = false;
    std::uint64_t nodes_visited = 0;
};

/**
 * Checks LO_n(k,R) ~ LO_n(a_1,F_1) x ... x LO_n(a_m,F_m) (or the RO / O analogue):
 * the component map restricted to the direct census must be injective, land in the product
 * of factor censuses, and the counts must agree.
 */
inline IsomorphismReport verify_semigroup_isomorphism(const Ring& ring, std::size_t n, Element k, Side side = Side::left,
                                                      const SearchOptions& options = {}) {
    if (!ring.owns(k)) throw Error(ErrorCode::ring_mismatch, "k not in " + ring.literal());
    if (ring.mul(k, k) != k) throw Error(ErrorCode::invalid_parameter, ring.render(k) + " is not idempotent");
    const CrtSplit s = split_to_fields(ring);
    SearchOptions quick = options;
    quick.verify_structure = false;

    IsomorphismReport rep;
    rep.side = side;
    rep.factors = s.factors;
    rep.a = s.forward(k);
    std::vector<Census> parts;
    for (std::size_t j = 0; j < s.factors.size(); ++j) {
        parts.push_back(enumerate(s.factors[j], n, rep.a[j], side, quick));
        rep.factor_counts.push_back(parts.back().count());
        rep.product *= parts.back().count();
        rep.nodes_visited += parts.back().nodes_visited;
    }
    const Census direct = enumerate(ring, n, k, side, quick);
    rep.nodes_visited += direct.nodes_visited;
    rep.direct_count = direct.count();

    bool into = true;
    std::set<std::vector<Index>> images;
    for (const auto& a : direct.elements) {
        const auto comps = map_matrix(s, a);
        std::vector<Index> key;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            into = into && parts[j].contains(comps[j]);
            key.insert(key.end(), comps[j].entries().begin(), comps[j].entries().end());
        }
        images.insert(std::move(key));
    }
    rep.bijection_ok = into && images.size() == direct.count() && direct.count() == rep.product;
    return rep;
}

/// |GL_n(F_q)| = q^(n(n-1)/2) * prod_{i=1..n} (q^i - 1).
inline std::uint64_t gl_order(std::uint64_t q, std::size_t n) {
    if (!detail::prime_power(q)) throw Error(ErrorCode::invalid_parameter, std::to_string(q) + " is not a prime power");
    if (n == 0) throw Error(ErrorCode::invalid_parameter, "degree must be at least 1");
    unsigned __int128 out = 1, qi = 1;
    const auto guard = [](unsigned __int128 v) {
        if (v > std::numeric_limits<std::uint64_t>::max())
            throw Error(ErrorCode::size_cap_exceeded, "|GL_n(F_q)| overflows 64 bits");
    };
    for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) guard(out *= q);
    for (std::size_t i = 1; i <= n; ++i) {
        guard(qi *= q);
        guard(out *= (qi - 1));
    }
    return static_cast<std::uint64_t>(out);
}

struct OrthOrderReport {
    std::vector<Ring> factors;
    std::vector<std::size_t> factor_counts;
    std::uint64_t product = 1;
};

/// |O_n(R)| as the product of |O_n(F_j)|, each factor counted by naive enumeration.
inline OrthOrderReport orth_group_order(const Ring& ring, std::size_t n, const SearchOptions& options = {}) {
    const CrtSplit s = split_to_fields(ring);
    SearchOptions naive = options;
    naive.prune = false;
    naive.verify_structure = false;
    OrthOrderReport rep;
    rep.factors = s.factors;
    for (const auto& f : s.factors) {
        rep.factor_counts.push_back(enumerate(f, n, f.one(), Side::two_sided, naive).count());
        rep.product *= rep.factor_counts.back();
    }
    return rep;
}

}  // namespace korthos
