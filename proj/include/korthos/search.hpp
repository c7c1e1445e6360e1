#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive enumeration of the k-orthogonal sets LO_n(k,R), RO_n(k,R), O_n(k,R).
 *
 * The pruned search assigns the columns of A one at a time. Every column must have
 * inner product k with itself, so candidates come from the pool of vectors of norm k. After a
 * column is placed, the candidate list for the next depth keeps only the vectors orthogonal to
 * it, so a leaf at depth n satisfies A^T A = kI by construction. The right-sided census is the
 * same search followed by a transpose; the two-sided census filters the left one by A A^T = kI.
 *
 * Work is sharded over the first column's candidates. The merged result is sorted canonically,
 * so the output does not depend on the number of workers.
 */

#include <korthos/matrix.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <map>
#include <optional>
#include <thread>
#include <vector>

namespace korthos {

enum class Side { left, right, two_sided };

constexpr std::string_view to_string(Side side) noexcept {
    switch (side) {
        case Side::left: return "left";
        case Side::right: return "right";
        case Side::two_sided: return "two";
    }
    return "?";
}

inline constexpr std::uint64_t default_node_budget = 100'000'000;

struct SearchOptions {
    std::uint64_t node_budget = default_node_budget;
    /// false selects the naive sweep over all |R|^(n^2) matrices
    bool prune = true;
    unsigned jobs = 1;
    /// run closure and group checks after enumeration
    bool verify_structure = true;
};

struct CensusChecks {
    bool closure_verified = false;
    bool identity_present = false;
    bool is_group = false;
};

struct Census {
    Ring ring;
    std::size_t n;
    Element k;
    Side side;
    std::vector<Matrix> elements;  // canonical order
    CensusChecks checks;
    std::uint64_t nodes_visited = 0;

    std::size_t count() const noexcept { return elements.size(); }

    bool contains(const Matrix& m) const {
        return std::binary_search(elements.begin(), elements.end(), m, CanonicalLess{});
    }
};

namespace detail {

class NodeCounter {
public:
    explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}

    void add(std::uint64_t n) {
        if (visited_.fetch_add(n, std::memory_order_relaxed) + n > budget_)
            throw Error(ErrorCode::budget_exceeded, "search exceeded " + std::to_string(budget_) + " nodes");
    }

    std::uint64_t visited() const noexcept { return visited_.load(); }

private:
    std::uint64_t budget_;
    std::atomic<std::uint64_t> visited_{0};
};

/// Batches node increments so workers touch the shared counter rarely.
class LocalCounter {
public:
    explicit LocalCounter(NodeCounter& shared) : shared_(shared) {}
    ~LocalCounter() {
        if (pending_ > 0 && std::uncaught_exceptions() == 0) {
            try {
                shared_.add(pending_);
            } catch (...) {
            }
        }
    }
    void tick() {
        if (++pending_ == 4096) flush();
    }
    void flush() {
        const auto n = pending_;
        pending_ = 0;
        shared_.add(n);
    }

private:
    NodeCounter& shared_;
    std::uint64_t pending_ = 0;
};

class ColumnSearch {
public:
    ColumnSearch(const Ring& ring, std::size_t n, Index k, NodeCounter& counter)
        : ring_(ring), n_(n), counter_(counter) {
        if (n == 0) throw Error(ErrorCode::invalid_parameter, "degree must be at least 1");
        const std::uint64_t total = ipow(ring.order(), static_cast<unsigned>(n));
        if (total > (std::uint64_t{1} << 32)) throw Error(ErrorCode::budget_exceeded, "column space too large");
        counter_.add(total);
        std::vector<Index> v(n, 0);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = n; i-- > 0; c /= ring.order()) v[i] = static_cast<Index>(c % ring.order());
            if (dot(v.data(), v.data()) == k) pool_.insert(pool_.end(), v.begin(), v.end());
        }
    }

    std::size_t pool_size() const noexcept { return pool_.size() / n_; }

    /// Calls emit(columns) for every orthogonal column tuple whose first column is in `roots`.
    /// emit returns false to stop.
    template <class Emit>
    void run(const std::vector<std::uint32_t>& roots, Emit&& emit, const std::atomic<bool>* stop = nullptr) const {
        LocalCounter local(counter_);
        std::vector<std::uint32_t> chosen;
        chosen.reserve(n_);
        std::vector<std::uint32_t> everything(pool_size());
        for (std::uint32_t i = 0; i < everything.size(); ++i) everything[i] = i;
        for (const auto root : roots) {
            if (stop && stop->load(std::memory_order_relaxed)) break;
            chosen.push_back(root);
            const bool go = n_ == 1 ? emit(chosen) : descend(everything, chosen, local, emit, stop);
            chosen.pop_back();
            if (!go) break;
        }
        local.flush();
    }

private:
    Index dot(const Index* a, const Index* b) const noexcept {
        Index s = 0;
        for (std::size_t i = 0; i < n_; ++i) s = ring_.add(s, ring_.mul(a[i], b[i]));
        return s;
    }

    const Index* vec(std::uint32_t i) const noexcept { return pool_.data() + std::size_t{i} * n_; }

    template <class Emit>
    bool descend(const std::vector<std::uint32_t>& candidates, std::vector<std::uint32_t>& chosen, LocalCounter& local,
                 Emit& emit, const std::atomic<bool>* stop) const {
        const Index* last = vec(chosen.back());
        std::vector<std::uint32_t> next;
        for (const auto c : candidates) {
            local.tick();
            if (dot(last, vec(c)) == 0) next.push_back(c);
        }
        for (const auto c : next) {
            if (stop && stop->load(std::memory_order_relaxed)) return false;
            chosen.push_back(c);
            const bool go = chosen.size() == n_ ? emit(chosen) : descend(next, chosen, local, emit, stop);
            chosen.pop_back();
            if (!go) return false;
        }
        return true;
    }

public:
    /// Matrix whose j-th column is pool vector columns[j].
    std::vector<Index> assemble(const std::vector<std::uint32_t>& columns) const {
        std::vector<Index> entries(n_ * n_);
        for (std::size_t j = 0; j < n_; ++j) {
            const Index* v = vec(columns[j]);
            for (std::size_t i = 0; i < n_; ++i) entries[i * n_ + j] = v[i];
        }
        return entries;
    }

private:
    const Ring& ring_;
    std::size_t n_;
    NodeCounter& counter_;
    std::vector<Index> pool_;  // row-major, pool_size() x n
};

/// All A with A^T A = kI, by pruned column search, sharded over `jobs` workers.
inline std::vector<std::vector<Index>> left_search(const Ring& ring, std::size_t n, Index k, unsigned jobs,
                                                   NodeCounter& counter) {
    const ColumnSearch search(ring, n, k, counter);
    const std::size_t roots = search.pool_size();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(roots, 1))));
    std::vector<std::vector<std::vector<Index>>> found(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    const auto work = [&](unsigned shard) {
        try {
            std::vector<std::uint32_t> mine;
            for (std::size_t r = shard; r < roots; r += jobs) mine.push_back(static_cast<std::uint32_t>(r));
            search.run(mine, [&](const std::vector<std::uint32_t>& cols) {
                found[shard].push_back(search.assemble(cols));
                return true;
            });
        } catch (...) {
            errors[shard] = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned s = 0; s < jobs; ++s) pool.emplace_back(work, s);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<std::vector<Index>> out;
    for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

inline std::vector<Index> transposed(const std::vector<Index>& a, std::size_t n) {
    std::vector<Index> t(a.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
    return t;
}

inline bool rows_gram_is(const Ring& ring, const std::vector<Index>& a, std::size_t n, Index k) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Index s = 0;
            for (std::size_t t = 0; t < n; ++t) s = ring.add(s, ring.mul(a[i * n + t], a[j * n + t]));
            if (s != (i == j ? k : 0)) return false;
        }
    return true;
}

/// Naive sweep over M_n(R) using the matrix-algebra predicates.
inline std::vector<std::vector<Index>> naive_search(const Ring& ring, std::size_t n, Index k, Side side,
                                                    NodeCounter& counter) {
    const std::size_t cells = n * n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        total *= ring.order();
        if (total > default_node_budget * 1000)
            throw Error(ErrorCode::budget_exceeded, "naive search space too large");
    }
    counter.add(total);
    std::vector<std::vector<Index>> out;
    std::vector<Index> entries(cells, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        const Matrix a(ring, n, n, entries);
        const OrthClass c = classify_k_orthogonal(a, {ring.id(), k});
        const bool keep = side == Side::left ? c.left : side == Side::right ? c.right : c.two_sided;
        if (keep) out.push_back(entries);
        for (std::size_t i = cells; i-- > 0;) {
            if (++entries[i] < ring.order()) break;
            entries[i] = 0;
        }
    }
    return out;
}

}  // namespace detail

/// Multiplicative closure: AB is in the set for all A, B in it.
inline bool verify_closure(const Census& census) {
    const Ring& r = census.ring;
    const std::size_t n = census.n;
    const auto& els = census.elements;
    std::vector<Index> prod(n * n);
    const auto less = [](const Matrix& m, const std::vector<Index>& key) {
        return std::lexicographical_compare(m.entries().begin(), m.entries().end(), key.begin(), key.end());
    };
    for (const auto& a : els)
        for (const auto& b : els) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Index s = 0;
                    for (std::size_t t = 0; t < n; ++t) s = r.add(s, r.mul(a(i, t), b(t, j)));
                    prod[i * n + j] = s;
                }
            const auto it = std::lower_bound(els.begin(), els.end(), prod, less);
            if (it == els.end() || !std::equal(prod.begin(), prod.end(), it->entries().begin())) return false;
        }
    return true;
}

struct GroupReport {
    bool is_group = false;
    std::optional<Matrix> identity;
    /// position of each element -> position of its two-sided inverse
    std::map<std::size_t, std::size_t> inverse_witnesses;
};

/// Looks for an identity element and two-sided inverses within a closed census.
inline GroupReport verify_group(const Census& census) {
    GroupReport out;
    const auto& els = census.elements;
    if (els.empty() || !verify_closure(census)) return out;

    const auto acts_as_identity = [&](const Matrix& e) {
        return std::all_of(els.begin(), els.end(), [&](const Matrix& a) { return e * a == a && a * e == a; });
    };
    const Matrix id = identity(census.ring, census.n);
    if (census.contains(id) && acts_as_identity(id)) {
        out.identity = id;
    } else {
        for (const auto& e : els)
            if (acts_as_identity(e)) {
                out.identity = e;
                break;
            }
    }
    if (!out.identity) return out;

    for (std::size_t i = 0; i < els.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < els.size() && !found; ++j) {
            if (els[i] * els[j] == *out.identity && els[j] * els[i] == *out.identity) {
                out.inverse_witnesses[i] = j;
                found = true;
            }
        }
        if (!found) {
            out.inverse_witnesses.clear();
            return out;
        }
    }
    out.is_group = true;
    return out;
}

/**
 * Enumerates {A in M_n(R) : A^T A = kI} (left), {A : A A^T = kI} (right) or their intersection.
 * Throws budget-exceeded rather than returning a partial set.
 */
inline Census enumerate(const Ring& ring, std::size_t n, Element k, Side side, const SearchOptions& options = {}) {
    const Index kk = detail::check_scalar(ring, k);
    if (n == 0) throw Error(ErrorCode::invalid_parameter, "degree must be at least 1");
    detail::NodeCounter counter(options.node_budget);
    std::vector<std::vector<Index>> raw;
    if (!options.prune) {
        raw = detail::naive_search(ring, n, kk, side, counter);
    } else {
        raw = detail::left_search(ring, n, kk, options.jobs, counter);
        if (side == Side::right) {
            for (auto& a : raw) a = detail::transposed(a, n);
        } else if (side == Side::two_sided) {
            counter.add(raw.size());
            std::erase_if(raw, [&](const std::vector<Index>& a) { return !detail::rows_gram_is(ring, a, n, kk); });
        }
    }
    std::sort(raw.begin(), raw.end());
    Census census{ring, n, k, side, {}, {}, 0};
    census.elements.reserve(raw.size());
    for (auto& a : raw) census.elements.emplace_back(ring, n, n, std::move(a));
    census.nodes_visited = counter.visited();
    census.checks.identity_present = census.contains(identity(ring, n));
    if (options.verify_structure) {
        census.checks.closure_verified = verify_closure(census);
        census.checks.is_group = census.checks.closure_verified && verify_group(census).is_group;
    }
    return census;
}

/// Transpose maps the left census onto the right census bijectively.
inline bool transpose_bijection_check(const Census& left, const Census& right) {
    if (!(left.ring == right.ring) || left.n != right.n || left.k != right.k) return false;
    if (left.count() != right.count()) return false;
    std::vector<Matrix> images;
    images.reserve(left.count());
    for (const auto& a : left.elements) images.push_back(transpose(a));
    std::sort(images.begin(), images.end(), CanonicalLess{});
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    return images == right.elements;
}

enum class SetRelation { disjoint, equal };

/// For idempotent k, k': LO_n(k,R) and LO_n(k',R) are either equal (k = k') or disjoint.
inline SetRelation disjoint_or_equal_check(const Ring& ring, std::size_t n, Element k, Element k2,
                                           const SearchOptions& options = {}) {
    for (const Element e : {k, k2})
        if (ring.mul(e, e) != e)
            throw Error(ErrorCode::invalid_parameter, ring.render(e) + " is not idempotent");
    if (k == k2) return SetRelation::equal;
    SearchOptions quick = options;
    quick.verify_structure = false;
    const Census a = enumerate(ring, n, k, Side::left, quick);
    const Census b = enumerate(ring, n, k2, Side::left, quick);
    std::vector<Matrix> common;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                          std::back_inserter(common), CanonicalLess{});
    if (!common.empty()) throw std::logic_error("distinct scalars share a left k-orthogonal matrix");
    return SetRelation::disjoint;
}

/// Every two-sided k-orthogonal 2x2 matrix over GF(2)+vGF(2) is [[a,b],[b,a]] with a+b = k, four in all.
inline bool circulant_characterization_check(const Census& census) {
    if (!(census.ring == make_r2()) || census.n != 2 || census.side != Side::two_sided)
        throw Error(ErrorCode::not_applicable, "circulant characterization needs O_2(k, R2)");
    const Ring& r = census.ring;
    if (census.count() != 4) return false;
    return std::all_of(census.elements.begin(), census.elements.end(), [&](const Matrix& m) {
        return m(0, 0) == m(1, 1) && m(0, 1) == m(1, 0) && r.add(m(0, 0), m(0, 1)) == census.k.index;
    });
}

struct CensusRow {
    Element k;
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t two_sided = 0;
    std::size_t difference() const noexcept { return left - two_sided; }
};

/// One row per idempotent k: |LO|, |RO|, |O|.
inline std::vector<CensusRow> census_table(const Ring& ring, std::size_t n, const SearchOptions& options = {}) {
    SearchOptions quick = options;
    quick.verify_structure = false;
    std::vector<CensusRow> rows;
    for (const Element k : idempotents(ring).elements) {
        CensusRow row{k};
        row.left = enumerate(ring, n, k, Side::left, quick).count();
        row.right = enumerate(ring, n, k, Side::right, quick).count();
        row.two_sided = enumerate(ring, n, k, Side::two_sided, quick).count();
        rows.push_back(row);
    }
    return rows;
}

/// A witness with A A^T = -I, or none after the full pruned search.
inline std::optional<Matrix> antiorthogonal_exists(const Ring& ring, std::size_t n, const SearchOptions& options = {}) {
    detail::NodeCounter counter(options.node_budget);
    const Index minus_one = ring.neg(ring.one().index);
    const detail::ColumnSearch search(ring, n, minus_one, counter);
    std::vector<std::uint32_t> roots(search.pool_size());
    for (std::uint32_t i = 0; i < roots.size(); ++i) roots[i] = i;
    std::optional<Matrix> witness;
    search.run(roots, [&](const std::vector<std::uint32_t>& cols) {
        // pool vectors become rows, so A A^T = -I
        witness.emplace(ring, n, n, detail::transposed(search.assemble(cols), n));
        return false;
    });
    return witness;
}

}  // namespace korthos
