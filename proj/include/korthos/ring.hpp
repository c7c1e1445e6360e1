#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative rings with unity as immutable element-index descriptors.
 *
 * Supported constructions:
 * - Z_n, integers modulo n
 * - GF(p^r) in a polynomial basis over Z_p
 * - F + vF over a Galois field F, with v^2 = v (characteristic 2) or v^2 = 1 (odd characteristic)
 * - finite direct products of the above
 *
 * Elements are dense indices 0..order-1 with a fixed enumeration:
 * - Z_n by residue
 * - GF(p^r) by coefficient vector read as a base-p integer, constant term least significant
 * - F + vF by index(a) * |F| + index(b) for a + vb
 * - products lexicographically, first component most significant
 *
 * Descriptors are interned by canonical literal, so constructing `Z6` twice yields the same
 * descriptor. A descriptor never changes after construction and may be shared across threads.
 */

#include <korthos/error.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace korthos {

using Index = std::uint32_t;

enum class VSquare { v, one };

/// Ring axioms are verified exhaustively at construction when the order is at most this.
inline constexpr Index axiom_check_limit = 64;
/// Addition and multiplication are table-backed up to this order, computed on demand above.
inline constexpr Index table_limit = 256;
inline constexpr Index max_ring_order = Index{1} << 24;

enum class AxiomCheck { automatic, force, skip };

namespace detail {
struct RingImpl;
}

struct ZModKind;
struct GaloisKind;
struct VExtensionKind;
struct ProductKind;
using RingKind = std::variant<ZModKind, GaloisKind, VExtensionKind, ProductKind>;

/// An element of a specific ring. Arithmetic through Ring checks ownership.
struct Element {
    const detail::RingImpl* owner = nullptr;
    Index index = 0;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

class Ring {
public:
    explicit Ring(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {}

    Index order() const noexcept;
    const std::string& literal() const noexcept;
    const RingKind& kind() const noexcept;
    const detail::RingImpl* id() const noexcept { return impl_.get(); }

    Element zero() const noexcept { return {id(), 0}; }
    Element one() const noexcept;
    Element element(Index index) const;

    bool owns(Element e) const noexcept { return e.owner == id() && e.index < order(); }

    Element add(Element a, Element b) const { return {id(), add(check(a), check(b))}; }
    Element sub(Element a, Element b) const { return {id(), sub(check(a), check(b))}; }
    Element mul(Element a, Element b) const { return {id(), mul(check(a), check(b))}; }
    Element neg(Element a) const { return {id(), neg(check(a))}; }
    bool eq(Element a, Element b) const { return check(a) == check(b); }
    bool is_unit(Element a) const { return is_unit(check(a)); }
    Element inverse(Element a) const { return {id(), inverse(check(a))}; }

    // Unchecked index arithmetic for inner loops.
    Index add(Index a, Index b) const noexcept;
    Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }
    Index mul(Index a, Index b) const noexcept;
    Index neg(Index a) const noexcept;
    bool is_unit(Index a) const noexcept;
    Index inverse(Index a) const;

    bool is_field() const noexcept;
    std::uint64_t characteristic() const noexcept;

    std::string render(Element e) const { return render(check(e)); }
    std::string render(Index index) const;
    Element parse(std::string_view text) const;

    /// Exhaustive check of the commutative ring axioms; throws invalid-parameter on failure.
    void verify_axioms() const;

    friend bool operator==(const Ring& a, const Ring& b) noexcept { return a.impl_ == b.impl_; }

private:
    Index check(Element e) const {
        if (e.owner != id()) throw Error(ErrorCode::ring_mismatch, "element does not belong to " + literal());
        return e.index;
    }

    std::shared_ptr<const detail::RingImpl> impl_;
};

struct ZModKind {
    std::uint32_t n;
};

struct GaloisKind {
    std::uint32_t p;
    std::uint32_t r;
    std::vector<std::uint32_t> modulus;  // c_0 .. c_r, monic
};

struct VExtensionKind {
    Ring base;
    VSquare rule;
};

struct ProductKind {
    std::vector<Ring> components;
};

namespace detail {

struct RingImpl {
    std::string literal;
    RingKind kind;
    Index order = 0;
    Index one = 0;
    bool tabled = false;
    std::vector<Index> add_table;
    std::vector<Index> mul_table;
    std::vector<Index> neg_table;

    Index add(Index a, Index b) const noexcept {
        return tabled ? add_table[std::size_t{a} * order + b] : compute_add(a, b);
    }
    Index mul(Index a, Index b) const noexcept {
        return tabled ? mul_table[std::size_t{a} * order + b] : compute_mul(a, b);
    }
    Index neg(Index a) const noexcept { return neg_table[a]; }

    Index compute_add(Index a, Index b) const noexcept;
    Index compute_mul(Index a, Index b) const noexcept;
    Index compute_neg(Index a) const noexcept;
};

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    while (exp-- > 0) out *= base;
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Returns (p, r) when q = p^r for a prime p.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t r = 0;
    while (q % p == 0) {
        q /= p;
        ++r;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), r};
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Polynomials over Z_p as coefficient vectors, constant term first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
}

/// Remainder of f modulo the monic polynomial g.
inline Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t d = f.size(); d-- > dg;) {
        const std::uint64_t c = f[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dg; ++i)
            f[d - dg + i] = static_cast<std::uint32_t>((f[d - dg + i] + (p - c) * g[i]) % p);
    }
    f.resize(std::max<std::size_t>(dg, 1));
    trim(f);
    return f;
}

/// Exhaustive irreducibility test: no monic factor of degree 1..r/2 divides f.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t r = f.size() - 1;
    for (std::size_t d = 1; d <= r / 2; ++d) {
        const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
            g[d] = 1;
            const Poly rem = poly_mod(f, g, p);
            if (rem.size() == 1 && rem[0] == 0) return false;
        }
    }
    return true;
}

inline std::string render_poly(const Poly& f) {
    std::string out;
    for (std::size_t d = f.size(); d-- > 0;) {
        const std::uint32_t c = f[d];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (d == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'x';
        if (d > 1) out += '^' + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

inline std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Splits on `sep` occurring outside (), [] nesting.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

/// True when s is entirely wrapped by one matching pair of parentheses.
inline bool wrapped(std::string_view s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')' && --depth == 0 && i + 1 != s.size()) return false;
    }
    return true;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
    s = trim_view(s);
    if (s.empty()) return std::nullopt;
    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 18) return std::nullopt;
    std::int64_t value = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return negative ? -value : value;
}

inline Poly parse_poly(std::string_view text, std::uint32_t p) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(ErrorCode::parse_error, "empty polynomial");
    Poly f(1, 0);
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
        std::string_view term(s.data() + start, i - start);
        if (term.empty()) throw Error(ErrorCode::parse_error, "bad polynomial '" + std::string(text) + "'");
        std::int64_t coef = 1;
        std::size_t degree = 0;
        const auto xpos = term.find('x');
        if (xpos == std::string_view::npos) {
            auto v = parse_int(term);
            if (!v) throw Error(ErrorCode::parse_error, "bad polynomial term '" + std::string(term) + "'");
            coef = *v;
        } else {
            std::string_view c = term.substr(0, xpos);
            if (!c.empty() && c.back() == '*') c.remove_suffix(1);
            if (!c.empty()) {
                auto v = parse_int(c);
                if (!v) throw Error(ErrorCode::parse_error, "bad coefficient '" + std::string(c) + "'");
                coef = *v;
            }
            std::string_view rest = term.substr(xpos + 1);
            if (rest.empty()) {
                degree = 1;
            } else {
                if (rest.front() != '^') throw Error(ErrorCode::parse_error, "bad exponent in '" + std::string(term) + "'");
                auto e = parse_int(rest.substr(1));
                if (!e || *e < 0 || *e > 64) throw Error(ErrorCode::parse_error, "bad exponent in '" + std::string(term) + "'");
                degree = static_cast<std::size_t>(*e);
            }
        }
        if (negative) coef = -coef;
        if (f.size() <= degree) f.resize(degree + 1, 0);
        const std::int64_t pp = p;
        f[degree] = static_cast<std::uint32_t>((((f[degree] + coef) % pp) + pp) % pp);
    }
    trim(f);
    return f;
}

struct ModulusEntry {
    std::uint32_t p;
    std::uint32_t r;
    const char* poly;
};

/// Conway polynomials for the non-prime fields of order at most 49.
inline constexpr std::array<ModulusEntry, 8> default_moduli{{
    {2, 2, "x^2+x+1"},
    {2, 3, "x^3+x+1"},
    {2, 4, "x^4+x+1"},
    {2, 5, "x^5+x^2+1"},
    {3, 2, "x^2+2x+2"},
    {3, 3, "x^3+2x+1"},
    {5, 2, "x^2+4x+2"},
    {7, 2, "x^2+6x+3"},
}};

// Mixed-radix helpers for products and v-extensions.
inline std::vector<Index> component_orders(const ProductKind& k) {
    std::vector<Index> out;
    for (const auto& c : k.components) out.push_back(c.order());
    return out;
}

template <class Op>
Index product_apply(const ProductKind& k, Index a, Index b, Op op) {
    Index out = 0;
    Index scale = 1;
    for (std::size_t i = k.components.size(); i-- > 0;) {
        const Index o = k.components[i].order();
        out += op(k.components[i], a % o, b % o) * scale;
        a /= o;
        b /= o;
        scale *= o;
    }
    return out;
}

inline Index RingImpl::compute_add(Index a, Index b) const noexcept {
    return std::visit(
        [&](const auto& k) -> Index {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ZModKind>) {
                return static_cast<Index>((std::uint64_t{a} + b) % k.n);
            } else if constexpr (std::is_same_v<K, GaloisKind>) {
                Index out = 0, scale = 1;
                for (std::uint32_t i = 0; i < k.r; ++i) {
                    out += ((a % k.p + b % k.p) % k.p) * scale;
                    a /= k.p;
                    b /= k.p;
                    scale *= k.p;
                }
                return out;
            } else if constexpr (std::is_same_v<K, VExtensionKind>) {
                const Index f = k.base.order();
                return k.base.add(a / f, b / f) * f + k.base.add(a % f, b % f);
            } else {
                return product_apply(k, a, b, [](const Ring& r, Index x, Index y) { return r.add(x, y); });
            }
        },
        kind);
}

inline Index RingImpl::compute_mul(Index a, Index b) const noexcept {
    return std::visit(
        [&](const auto& k) -> Index {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ZModKind>) {
                return static_cast<Index>((std::uint64_t{a} * b) % k.n);
            } else if constexpr (std::is_same_v<K, GaloisKind>) {
                std::array<std::uint64_t, 64> da{}, db{}, prod{};
                for (std::uint32_t i = 0; i < k.r; ++i, a /= k.p, b /= k.p) {
                    da[i] = a % k.p;
                    db[i] = b % k.p;
                }
                for (std::uint32_t i = 0; i < k.r; ++i)
                    for (std::uint32_t j = 0; j < k.r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % k.p;
                for (std::uint32_t d = 2 * k.r - 1; d-- > k.r;) {
                    const std::uint64_t c = prod[d];
                    if (c == 0) continue;
                    for (std::uint32_t i = 0; i <= k.r; ++i)
                        prod[d - k.r + i] = (prod[d - k.r + i] + (k.p - c) * k.modulus[i]) % k.p;
                }
                Index out = 0, scale = 1;
                for (std::uint32_t i = 0; i < k.r; ++i, scale *= k.p) out += static_cast<Index>(prod[i]) * scale;
                return out;
            } else if constexpr (std::is_same_v<K, VExtensionKind>) {
                const Ring& f = k.base;
                const Index n = f.order();
                const Index x = a / n, y = a % n, z = b / n, w = b % n;
                // (x + vy)(z + vw)
                const Index cross = f.add(f.mul(x, w), f.mul(y, z));
                if (k.rule == VSquare::v) return f.mul(x, z) * n + f.add(cross, f.mul(y, w));
                return f.add(f.mul(x, z), f.mul(y, w)) * n + cross;
            } else {
                return product_apply(k, a, b, [](const Ring& r, Index x, Index y) { return r.mul(x, y); });
            }
        },
        kind);
}

inline Index RingImpl::compute_neg(Index a) const noexcept {
    return std::visit(
        [&](const auto& k) -> Index {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ZModKind>) {
                return a == 0 ? 0 : k.n - a;
            } else if constexpr (std::is_same_v<K, GaloisKind>) {
                Index out = 0, scale = 1;
                for (std::uint32_t i = 0; i < k.r; ++i, a /= k.p, scale *= k.p) out += ((k.p - a % k.p) % k.p) * scale;
                return out;
            } else if constexpr (std::is_same_v<K, VExtensionKind>) {
                const Index n = k.base.order();
                return k.base.neg(a / n) * n + k.base.neg(a % n);
            } else {
                return product_apply(k, a, a, [](const Ring& r, Index x, Index) { return r.neg(x); });
            }
        },
        kind);
}

inline std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

// Descriptors are kept for the life of the process, so an Element never outlives its ring.
inline std::map<std::string, std::shared_ptr<const RingImpl>>& registry() {
    static std::map<std::string, std::shared_ptr<const RingImpl>> r;
    return r;
}

/// Builds (or reuses) the descriptor for `literal`.
inline Ring intern(std::string literal, RingKind kind, Index order, Index one, AxiomCheck check) {
    std::shared_ptr<const RingImpl> impl;
    {
        std::lock_guard lock(registry_mutex());
        auto& slot = registry()[literal];
        impl = slot;
        if (!impl) {
            auto fresh = std::make_shared<RingImpl>();
            fresh->literal = literal;
            fresh->kind = std::move(kind);
            fresh->order = order;
            fresh->one = one;
            fresh->neg_table.resize(order);
            for (Index a = 0; a < order; ++a) fresh->neg_table[a] = fresh->compute_neg(a);
            if (order <= table_limit) {
                fresh->add_table.resize(std::size_t{order} * order);
                fresh->mul_table.resize(std::size_t{order} * order);
                for (Index a = 0; a < order; ++a)
                    for (Index b = 0; b < order; ++b) {
                        fresh->add_table[std::size_t{a} * order + b] = fresh->compute_add(a, b);
                        fresh->mul_table[std::size_t{a} * order + b] = fresh->compute_mul(a, b);
                    }
                fresh->tabled = true;
            }
            impl = fresh;
            slot = impl;
        }
    }
    Ring ring(impl);
    if (check == AxiomCheck::force || (check == AxiomCheck::automatic && order <= axiom_check_limit))
        ring.verify_axioms();
    return ring;
}

}  // namespace detail

inline Index Ring::order() const noexcept { return impl_->order; }
inline const std::string& Ring::literal() const noexcept { return impl_->literal; }
inline const RingKind& Ring::kind() const noexcept { return impl_->kind; }
inline Element Ring::one() const noexcept { return {id(), impl_->one}; }
inline Index Ring::add(Index a, Index b) const noexcept { return impl_->add(a, b); }
inline Index Ring::mul(Index a, Index b) const noexcept { return impl_->mul(a, b); }
inline Index Ring::neg(Index a) const noexcept { return impl_->neg(a); }

inline Element Ring::element(Index index) const {
    if (index >= order())
        throw Error(ErrorCode::invalid_parameter,
                    "index " + std::to_string(index) + " out of range for " + literal());
    return {id(), index};
}

inline bool Ring::is_unit(Index a) const noexcept {
    return std::visit(
        [&](const auto& k) -> bool {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ZModKind>) {
                return std::gcd(a, k.n) == 1;
            } else if constexpr (std::is_same_v<K, GaloisKind>) {
                return a != 0;
            } else if constexpr (std::is_same_v<K, VExtensionKind>) {
                const Ring& f = k.base;
                const Index n = f.order(), x = a / n, y = a % n;
                // a + vb is a unit iff both images under the splitting map are nonzero
                if (k.rule == VSquare::v) return f.add(x, y) != 0 && x != 0;
                return f.sub(x, y) != 0 && f.add(x, y) != 0;
            } else {
                for (std::size_t i = k.components.size(); i-- > 0;) {
                    const Index o = k.components[i].order();
                    if (!k.components[i].is_unit(a % o)) return false;
                    a /= o;
                }
                return true;
            }
        },
        kind());
}

inline Index Ring::inverse(Index a) const {
    if (!is_unit(a)) throw Error(ErrorCode::not_a_unit, render(a) + " is not a unit of " + literal());
    return std::visit(
        [&](const auto& k) -> Index {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ZModKind>) {
                std::int64_t r0 = k.n, r1 = a, t0 = 0, t1 = 1;
                while (r1 != 0) {
                    const std::int64_t q = r0 / r1;
                    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
                    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
                }
                const std::int64_t n = k.n;
                return static_cast<Index>(((t0 % n) + n) % n);
            } else if constexpr (std::is_same_v<K, GaloisKind>) {
                std::uint64_t e = order() - 2;
                Index result = impl_->one, base = a;
                while (e > 0) {
                    if (e & 1) result = mul(result, base);
                    base = mul(base, base);
                    e >>= 1;
                }
                return result;
            } else if constexpr (std::is_same_v<K, VExtensionKind>) {
                const Ring& f = k.base;
                const Index n = f.order(), x = a / n, y = a % n;
                if (k.rule == VSquare::v) {
                    // a + vb -> (a + b, a)
                    const Index s = f.inverse(f.add(x, y)), t = f.inverse(x);
                    return t * n + f.sub(s, t);
                }
                // a + vb -> (a - b, a + b)
                const Index s = f.inverse(f.sub(x, y)), t = f.inverse(f.add(x, y));
                const Index half = f.inverse(f.add(f.one().index, f.one().index));
                return f.mul(f.add(s, t), half) * n + f.mul(f.sub(t, s), half);
            } else {
                return detail::product_apply(k, a, a, [](const Ring& r, Index x, Index) { return r.inverse(x); });
            }
        },
        kind());
}

inline bool Ring::is_field() const noexcept {
    if (const auto* z = std::get_if<ZModKind>(&kind())) return detail::is_prime(z->n);
    return std::holds_alternative<GaloisKind>(kind());
}

inline std::uint64_t Ring::characteristic() const noexcept {
    return std::visit(
        [](const auto& k) -> std::uint64_t {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ZModKind>) return k.n;
            else if constexpr (std::is_same_v<K, GaloisKind>) return k.p;
            else if constexpr (std::is_same_v<K, VExtensionKind>) return k.base.characteristic();
            else {
                std::uint64_t c = 1;
                for (const auto& r : k.components) c = std::lcm(c, r.characteristic());
                return c;
            }
        },
        kind());
}

inline std::string Ring::render(Index index) const {
    return std::visit(
        [&](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ZModKind>) {
                return std::to_string(index);
            } else if constexpr (std::is_same_v<K, GaloisKind>) {
                if (k.r == 1) return std::to_string(index);
                std::string out = "(";
                for (std::uint32_t i = 0; i < k.r; ++i, index /= k.p) {
                    if (i) out += ',';
                    out += std::to_string(index % k.p);
                }
                return out + ")";
            } else if constexpr (std::is_same_v<K, VExtensionKind>) {
                const Index n = k.base.order();
                return k.base.render(index / n) + "+v*" + k.base.render(index % n);
            } else {
                std::vector<std::string> parts(k.components.size());
                for (std::size_t i = k.components.size(); i-- > 0;) {
                    const Index o = k.components[i].order();
                    parts[i] = k.components[i].render(index % o);
                    index /= o;
                }
                std::string out = "(";
                for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
                return out + ")";
            }
        },
        kind());
}

inline Element Ring::parse(std::string_view text) const {
    using detail::parse_int;
    const std::string_view s = detail::trim_view(text);
    const auto fail = [&]() -> Error {
        return Error(ErrorCode::parse_error, "cannot read '" + std::string(text) + "' as an element of " + literal());
    };
    if (s.empty()) throw fail();
    if (s.front() == '#') {
        const auto v = parse_int(s.substr(1));
        if (!v || *v < 0 || *v >= static_cast<std::int64_t>(order())) throw fail();
        return element(static_cast<Index>(*v));
    }
    const auto reduce = [](std::int64_t v, std::int64_t m) { return static_cast<Index>(((v % m) + m) % m); };
    const Index index = std::visit(
        [&](const auto& k) -> Index {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ZModKind>) {
                const auto v = parse_int(s);
                if (!v) throw fail();
                return reduce(*v, k.n);
            } else if constexpr (std::is_same_v<K, GaloisKind>) {
                if (!detail::wrapped(s)) {
                    const auto v = parse_int(s);
                    if (!v) throw fail();
                    if (k.r == 1) return reduce(*v, k.p);
                    if (*v < 0 || *v >= static_cast<std::int64_t>(order())) throw fail();
                    return static_cast<Index>(*v);
                }
                const auto parts = detail::split_top(s.substr(1, s.size() - 2), ',');
                if (parts.size() != k.r) throw fail();
                Index out = 0, scale = 1;
                for (const auto part : parts) {
                    const auto v = parse_int(part);
                    if (!v) throw fail();
                    out += reduce(*v, k.p) * scale;
                    scale *= k.p;
                }
                return out;
            } else if constexpr (std::is_same_v<K, VExtensionKind>) {
                const Ring& f = k.base;
                Index a = 0, b = 0;
                for (auto term : detail::split_top(s, '+')) {
                    term = detail::trim_view(term);
                    if (term.empty()) throw fail();
                    if (term == "v") {
                        b = f.add(b, f.one().index);
                    } else if (term.starts_with("v*")) {
                        b = f.add(b, f.parse(term.substr(2)).index);
                    } else if (term.ends_with("*v")) {
                        b = f.add(b, f.parse(term.substr(0, term.size() - 2)).index);
                    } else if (term.back() == 'v') {
                        b = f.add(b, f.parse(term.substr(0, term.size() - 1)).index);
                    } else {
                        a = f.add(a, f.parse(term).index);
                    }
                }
                return a * f.order() + b;
            } else {
                if (!detail::wrapped(s)) throw fail();
                const auto parts = detail::split_top(s.substr(1, s.size() - 2), ',');
                if (parts.size() != k.components.size()) throw fail();
                Index out = 0;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    out = out * k.components[i].order() + k.components[i].parse(parts[i]).index;
                return out;
            }
        },
        kind());
    return {id(), index};
}

inline void Ring::verify_axioms() const {
    const Index n = order();
    const auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::invalid_parameter, literal() + " violates " + what);
    };
    const Index u = impl_->one;
    if (u == 0) fail("1 != 0");
    for (Index a = 0; a < n; ++a) {
        if (add(a, 0) != a) fail("additive identity");
        if (mul(u, a) != a) fail("multiplicative identity");
        if (add(a, neg(a)) != 0) fail("additive inverse");
        for (Index b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a)) fail("commutativity of +");
            if (mul(a, b) != mul(b, a)) fail("commutativity of *");
            for (Index c = 0; c < n; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail("associativity of +");
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("associativity of *");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Constructors

inline Ring make_zmod(std::uint64_t n, AxiomCheck check = AxiomCheck::automatic) {
    if (n < 2) throw Error(ErrorCode::invalid_parameter, "Z_n requires n >= 2");
    if (n > max_ring_order) throw Error(ErrorCode::invalid_parameter, "ring order too large");
    const auto m = static_cast<std::uint32_t>(n);
    return detail::intern("Z" + std::to_string(n), ZModKind{m}, m, 1, check);
}

inline Ring make_galois_field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus,
                              AxiomCheck check = AxiomCheck::automatic) {
    if (!detail::is_prime(p)) throw Error(ErrorCode::invalid_parameter, std::to_string(p) + " is not prime");
    if (r < 1 || r > 24) throw Error(ErrorCode::invalid_parameter, "GF degree must be in 1..24");
    const std::uint64_t q = detail::ipow(p, r);
    if (q > max_ring_order) throw Error(ErrorCode::invalid_parameter, "ring order too large");
    for (auto& c : modulus) c %= p;
    detail::trim(modulus);
    if (modulus.size() != r + 1 || modulus.back() != 1)
        throw Error(ErrorCode::invalid_parameter, "modulus must be monic of degree " + std::to_string(r));
    if (!detail::is_irreducible(modulus, p))
        throw Error(ErrorCode::invalid_parameter, detail::render_poly(modulus) + " is reducible over Z" + std::to_string(p));
    std::string literal = "GF(" + std::to_string(p);
    if (r == 1) modulus = {0, 1};  // every monic linear modulus yields the same arithmetic
    else literal += "," + std::to_string(r) + ";" + detail::render_poly(modulus);
    literal += ")";
    return detail::intern(std::move(literal), GaloisKind{p, r, std::move(modulus)}, static_cast<Index>(q), 1, check);
}

inline Ring make_galois_field(std::uint32_t p, std::uint32_t r, std::string_view modulus,
                              AxiomCheck check = AxiomCheck::automatic) {
    if (!detail::is_prime(p)) throw Error(ErrorCode::invalid_parameter, std::to_string(p) + " is not prime");
    return make_galois_field(p, r, detail::parse_poly(modulus, p), check);
}

/// GF(p^r) with the built-in default modulus.
inline Ring make_galois_field(std::uint32_t p, std::uint32_t r = 1, AxiomCheck check = AxiomCheck::automatic) {
    if (r == 1) return make_galois_field(p, 1, std::vector<std::uint32_t>{0, 1}, check);
    for (const auto& entry : detail::default_moduli)
        if (entry.p == p && entry.r == r) return make_galois_field(p, r, std::string_view(entry.poly), check);
    throw Error(ErrorCode::invalid_parameter,
                "no default modulus for GF(" + std::to_string(p) + "^" + std::to_string(r) + "); supply one");
}

inline Ring make_v_extension(const Ring& base, VSquare rule, AxiomCheck check = AxiomCheck::automatic) {
    if (!std::holds_alternative<GaloisKind>(base.kind()))
        throw Error(ErrorCode::invalid_parameter, "v-extension base must be a Galois field, got " + base.literal());
    const bool even = base.characteristic() == 2;
    if (rule == VSquare::v && !even)
        throw Error(ErrorCode::invalid_parameter, "v^2 = v requires characteristic 2");
    if (rule == VSquare::one && even)
        throw Error(ErrorCode::invalid_parameter, "v^2 = 1 requires odd characteristic");
    const std::uint64_t order = std::uint64_t{base.order()} * base.order();
    if (order > max_ring_order) throw Error(ErrorCode::invalid_parameter, "ring order too large");
    std::string literal = base.literal() + "+v" + base.literal() + (rule == VSquare::v ? "[v2=v]" : "[v2=1]");
    return detail::intern(std::move(literal), VExtensionKind{base, rule}, static_cast<Index>(order),
                          base.one().index * base.order(), check);
}

inline Ring make_product(std::vector<Ring> components, AxiomCheck check = AxiomCheck::automatic) {
    if (components.empty()) throw Error(ErrorCode::invalid_parameter, "product of zero rings");
    std::uint64_t order = 1;
    Index one = 0;
    std::string literal;
    for (const auto& c : components) {
        order *= c.order();
        if (order > max_ring_order) throw Error(ErrorCode::invalid_parameter, "ring order too large");
        one = one * c.order() + c.one().index;
        if (!literal.empty()) literal += 'x';
        const bool nested = std::holds_alternative<ProductKind>(c.kind()) && !detail::wrapped(c.literal());
        literal += nested ? "(" + c.literal() + ")" : c.literal();
    }
    if (components.size() == 1 && !detail::wrapped(literal)) literal = "(" + literal + ")";
    return detail::intern(std::move(literal), ProductKind{std::move(components)}, static_cast<Index>(order), one, check);
}

/// The four-element Boolean ring GF(2) + vGF(2), v^2 = v.
inline Ring make_r2() { return make_v_extension(make_galois_field(2), VSquare::v); }

namespace detail {

inline Ring parse_field(std::string_view s) {
    const auto fail = [&]() -> Error { return Error(ErrorCode::parse_error, "bad field literal '" + std::string(s) + "'"); };
    if (s.size() > 1 && s.front() == 'F' && s[1] != '(') {
        const auto q = parse_int(s.substr(1));
        if (!q) throw fail();
        const auto pr = prime_power(static_cast<std::uint64_t>(*q));
        if (!pr) throw Error(ErrorCode::invalid_parameter, std::string(s) + " is not a prime-power order");
        return make_galois_field(pr->first, pr->second);
    }
    if (!s.starts_with("GF(") || s.back() != ')') throw fail();
    const std::string_view body = s.substr(3, s.size() - 4);
    const auto semi = body.find(';');
    const std::string_view head = body.substr(0, semi);
    const auto parts = split_top(head, ',');
    if (parts.size() == 1) {
        if (semi != std::string_view::npos) throw fail();
        const auto q = parse_int(parts[0]);
        if (!q || *q < 2) throw fail();
        const auto pr = prime_power(static_cast<std::uint64_t>(*q));
        if (!pr) throw Error(ErrorCode::invalid_parameter, std::string(s) + " is not a prime-power order");
        return make_galois_field(pr->first, pr->second);
    }
    if (parts.size() != 2) throw fail();
    const auto p = parse_int(parts[0]);
    const auto r = parse_int(parts[1]);
    if (!p || !r || *p < 2 || *r < 1 || *p > 0xFFFF || *r > 24) throw fail();
    const auto pp = static_cast<std::uint32_t>(*p), rr = static_cast<std::uint32_t>(*r);
    if (semi == std::string_view::npos) return make_galois_field(pp, rr);
    return make_galois_field(pp, rr, body.substr(semi + 1));
}

}  // namespace detail

/**
 * Reads a ring literal: `Z6`, `GF(3)`, `GF(4)`, `GF(2,2;x^2+x+1)`, `F9`,
 * `GF(2)+vGF(2)[v2=v]`, `GF(3)+vGF(3)[v2=1]`, `R2`, products joined by `x` such as `Z6xZ4`,
 * with parentheses for grouping.
 */
inline Ring parse_ring(std::string_view text) {
    std::string_view s = detail::trim_view(text);
    if (s.empty()) throw Error(ErrorCode::parse_error, "empty ring literal");
    const auto parts = detail::split_top(s, 'x');
    if (parts.size() > 1) {
        std::vector<Ring> components;
        for (const auto part : parts) components.push_back(parse_ring(part));
        return make_product(std::move(components));
    }
    if (detail::wrapped(s)) {
        const Ring inner = parse_ring(s.substr(1, s.size() - 2));
        if (std::holds_alternative<ProductKind>(inner.kind())) return inner;
        return make_product({inner});
    }
    if (s == "R2") return make_r2();
    if (s.front() == 'Z') {
        const auto n = detail::parse_int(s.substr(1));
        if (!n) throw Error(ErrorCode::parse_error, "bad ring literal '" + std::string(s) + "'");
        if (*n < 2) throw Error(ErrorCode::invalid_parameter, "Z_n requires n >= 2");
        return make_zmod(static_cast<std::uint64_t>(*n));
    }
    if (s.ends_with("[v2=v]") || s.ends_with("[v2=1]")) {
        const VSquare rule = s.ends_with("[v2=v]") ? VSquare::v : VSquare::one;
        const std::string_view body = s.substr(0, s.size() - 6);
        const auto terms = detail::split_top(body, '+');
        if (terms.size() != 2 || !terms[1].starts_with("v"))
            throw Error(ErrorCode::parse_error, "bad v-extension literal '" + std::string(s) + "'");
        const Ring base = detail::parse_field(detail::trim_view(terms[0]));
        const Ring again = detail::parse_field(detail::trim_view(terms[1].substr(1)));
        if (!(base == again))
            throw Error(ErrorCode::parse_error, "v-extension needs the same field on both sides in '" + std::string(s) + "'");
        return make_v_extension(base, rule);
    }
    return detail::parse_field(s);
}

// ---------------------------------------------------------------------------
// Element sets

struct IdempotentSet {
    std::vector<Element> elements;

    bool contains(Element e) const { return std::binary_search(elements.begin(), elements.end(), e); }
    std::size_t size() const noexcept { return elements.size(); }
};

/// All e with e*e = e, ascending by index.
inline IdempotentSet idempotents(const Ring& ring) {
    IdempotentSet out;
    for (Index a = 0; a < ring.order(); ++a)
        if (ring.mul(a, a) == a) out.elements.push_back({ring.id(), a});
    return out;
}

inline std::vector<Element> units(const Ring& ring) {
    std::vector<Element> out;
    for (Index a = 0; a < ring.order(); ++a)
        if (ring.is_unit(a)) out.push_back({ring.id(), a});
    return out;
}

}  // namespace korthos
