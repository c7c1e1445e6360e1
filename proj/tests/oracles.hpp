#pragma once

// Brute-force reference implementations used by the tests. Nothing here includes the
// library: rings are plain addition / multiplication tables built from textbook formulas,
// and every search is a full sweep. Element names follow the library's text format so results
// can be compared through parse_matrix.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Ring {
    std::string literal;
    int q = 0;
    std::vector<std::string> names;
    std::vector<std::vector<int>> add, mul;
    int one = 1;

    int neg(int a) const {
        for (int b = 0; b < q; ++b)
            if (add[a][b] == 0) return b;
        return -1;
    }
};

inline Ring tabulate(std::string literal, int q, std::vector<std::string> names, int one,
                     const std::function<int(int, int)>& plus, const std::function<int(int, int)>& times) {
    Ring r{std::move(literal), q, std::move(names), {}, {}, one};
    r.add.assign(q, std::vector<int>(q));
    r.mul.assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            r.add[a][b] = plus(a, b);
            r.mul[a][b] = times(a, b);
        }
    return r;
}

inline Ring zmod(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return tabulate("Z" + std::to_string(n), n, names, 1 % n, [n](int a, int b) { return (a + b) % n; },
                    [n](int a, int b) { return (a * b) % n; });
}

// GF(p^r) with elements c0 + c1 x + ... ; index = sum c_i p^i; modulus given low degree first, monic.
inline Ring galois(int p, std::vector<int> modulus, std::string literal) {
    const int r = static_cast<int>(modulus.size()) - 1;
    int q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    const auto digits = [p, r](int a) {
        std::vector<int> d(r);
        for (int i = 0; i < r; ++i, a /= p) d[i] = a % p;
        return d;
    };
    const auto pack = [p, r](const std::vector<int>& d) {
        int a = 0;
        for (int i = r; i-- > 0;) a = a * p + d[i];
        return a;
    };
    std::vector<std::string> names;
    for (int a = 0; a < q; ++a) {
        const auto d = digits(a);
        std::string s = "(";
        for (int i = 0; i < r; ++i) s += (i ? "," : "") + std::to_string(d[i]);
        names.push_back(s + ")");
    }
    return tabulate(
        std::move(literal), q, names, 1,
        [=](int a, int b) {
            auto x = digits(a), y = digits(b);
            for (int i = 0; i < r; ++i) x[i] = (x[i] + y[i]) % p;
            return pack(x);
        },
        [=](int a, int b) {
            const auto x = digits(a), y = digits(b);
            std::vector<int> prod(2 * r, 0);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            for (int d = 2 * r - 1; d >= r; --d) {
                const int c = prod[d];
                prod[d] = 0;
                for (int i = 0; i < r; ++i) prod[d - r + i] = ((prod[d - r + i] - c * modulus[i]) % p + p) % p;
            }
            prod.resize(r);
            return pack(prod);
        });
}

// F_p + vF_p over a prime p, index = a + p b for a + vb. v_square_is_v selects v^2 = v, else v^2 = 1.
inline Ring vext(int p, bool v_square_is_v) {
    const int q = p * p;
    std::vector<std::string> names;
    for (int i = 0; i < q; ++i) names.push_back(std::to_string(i % p) + "+v*" + std::to_string(i / p));
    const std::string base = "GF(" + std::to_string(p) + ")";
    return tabulate(
        base + "+v" + base + (v_square_is_v ? "[v2=v]" : "[v2=1]"), q, names, 1,
        [p](int x, int y) { return (x % p + y % p) % p + p * ((x / p + y / p) % p); },
        [p, v_square_is_v](int x, int y) {
            const int a = x % p, b = x / p, c = y % p, d = y / p;
            int re = a * c, ve = a * d + b * c;
            if (v_square_is_v) ve += b * d;
            else re += b * d;
            return re % p + p * (ve % p);
        });
}

// First component most significant.
inline Ring product(const Ring& s, const Ring& t) {
    std::vector<std::string> names;
    for (int i = 0; i < s.q * t.q; ++i) names.push_back("(" + s.names[i / t.q] + "," + t.names[i % t.q] + ")");
    const int tq = t.q;
    return tabulate(
        s.literal + "x" + t.literal, s.q * t.q, names, s.one * t.q + t.one,
        [&s, &t, tq](int x, int y) { return s.add[x / tq][y / tq] * tq + t.add[x % tq][y % tq]; },
        [&s, &t, tq](int x, int y) { return s.mul[x / tq][y / tq] * tq + t.mul[x % tq][y % tq]; });
}

inline std::vector<int> idempotents(const Ring& r) {
    std::vector<int> out;
    for (int a = 0; a < r.q; ++a)
        if (r.mul[a][a] == a) out.push_back(a);
    return out;
}

using Entries = std::vector<int>;  // row-major

inline std::string text(const Ring& r, const Entries& a, int rows, int cols) {
    std::string s;
    for (int i = 0; i < rows; ++i) {
        if (i) s += ';';
        for (int j = 0; j < cols; ++j) s += (j ? "," : "") + r.names[a[i * cols + j]];
    }
    return s;
}

// Entry (i,j) of A^T A (by_columns) or A A^T.
inline int gram(const Ring& r, const Entries& a, int n, int i, int j, bool by_columns) {
    int s = 0;
    for (int t = 0; t < n; ++t) {
        const int x = by_columns ? a[t * n + i] : a[i * n + t];
        const int y = by_columns ? a[t * n + j] : a[j * n + t];
        s = r.add[s][r.mul[x][y]];
    }
    return s;
}

// The scalar of a scalar Gram matrix, or -1.
inline int gram_scalar(const Ring& r, const Entries& a, int n, bool by_columns) {
    const int k = gram(r, a, n, 0, 0, by_columns);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (gram(r, a, n, i, j, by_columns) != (i == j ? k : 0)) return -1;
    return k;
}

template <class Visit>
void for_each_matrix(int q, int cells, Visit&& visit) {
    Entries a(cells, 0);
    while (true) {
        visit(a);
        int i = cells - 1;
        while (i >= 0 && ++a[i] == q) a[i--] = 0;
        if (i < 0) return;
    }
}

// One sweep over all q^(n^2) matrices: censuses[side][k], side 0 left, 1 right, 2 two-sided.
struct AllCensuses {
    std::vector<std::vector<std::vector<Entries>>> by_side;
    std::size_t count(int side, int k) const { return by_side[side][k].size(); }
};

inline AllCensuses sweep(const Ring& r, int n) {
    AllCensuses out;
    out.by_side.assign(3, std::vector<std::vector<Entries>>(r.q));
    for_each_matrix(r.q, n * n, [&](const Entries& a) {
        const int l = gram_scalar(r, a, n, true);
        const int rt = gram_scalar(r, a, n, false);
        if (l >= 0) out.by_side[0][l].push_back(a);
        if (rt >= 0) out.by_side[1][rt].push_back(a);
        if (l >= 0 && l == rt) out.by_side[2][l].push_back(a);
    });
    return out;
}

inline int det2(const Ring& r, const Entries& a) {
    return r.add[r.mul[a[0]][a[3]]][r.neg(r.mul[a[1]][a[2]])];
}

inline int det3(const Ring& r, const Entries& a) {
    const auto m = [&](int x, int y, int z) { return r.mul[r.mul[a[x]][a[y]]][a[z]]; };
    int pos = r.add[r.add[m(0, 4, 8)][m(1, 5, 6)]][m(2, 3, 7)];
    int negs = r.add[r.add[m(2, 4, 6)][m(0, 5, 7)]][m(1, 3, 8)];
    return r.add[pos][r.neg(negs)];
}

inline bool is_unit(const Ring& r, int a) {
    for (int b = 0; b < r.q; ++b)
        if (r.mul[a][b] == r.one) return true;
    return false;
}

inline std::size_t count_invertible(const Ring& r, int n) {
    std::size_t count = 0;
    const std::function<int(const Entries&)> det = n == 1   ? [](const Entries& a) { return a.at(0); }
                                                   : n == 2 ? std::function<int(const Entries&)>([&r](const Entries& a) { return det2(r, a); })
                                                            : [&r](const Entries& a) { return det3(r, a); };
    for_each_matrix(r.q, n * n, [&](const Entries& a) {
        if (is_unit(r, det(a))) ++count;
    });
    return count;
}

// Codes ---------------------------------------------------------------------

using Word = std::vector<int>;

inline std::set<Word> span(const Ring& r, const std::vector<Word>& generator) {
    std::set<Word> words{Word(generator.front().size(), 0)};
    for (const auto& g : generator) {
        std::set<Word> grown;
        for (const auto& w : words)
            for (int c = 0; c < r.q; ++c) {
                Word x = w;
                for (std::size_t i = 0; i < x.size(); ++i) x[i] = r.add[x[i]][r.mul[c][g[i]]];
                grown.insert(x);
            }
        words = std::move(grown);
    }
    return words;
}

inline int inner(const Ring& r, const Word& u, const Word& v) {
    int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s = r.add[s][r.mul[u[i]][v[i]]];
    return s;
}

// Orthogonal against every codeword, not only the generator rows.
inline std::set<Word> dual(const Ring& r, const std::set<Word>& code) {
    const int n = static_cast<int>(code.begin()->size());
    std::set<Word> out;
    for_each_matrix(r.q, n, [&](const Word& u) {
        for (const auto& c : code)
            if (inner(r, u, c) != 0) return;
        out.insert(u);
    });
    return out;
}

inline int min_weight(const std::set<Word>& code, const std::function<int(const Word&)>& weight) {
    int best = -1;
    for (const auto& w : code) {
        if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) continue;
        const int x = weight(w);
        if (best < 0 || x < best) best = x;
    }
    return best;
}

inline int hamming(const Word& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x != 0; }));
}

inline int lee(int m, const Word& w) {
    int s = 0;
    for (const int x : w) s += std::min(x, m - x);
    return s;
}

}  // namespace oracle
