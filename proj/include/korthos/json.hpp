#pragma once

/**
 * @file json.hpp
 * @brief JSON forms of matrices, censuses and reports (nlohmann/json).
 *
 * Matrix: {"ring": literal, "rows": r, "cols": c, "entries": [rendered elements, row-major]}.
 */

#include <korthos/codes.hpp>
#include <korthos/crt.hpp>
#include <korthos/search.hpp>

#include <nlohmann/json.hpp>

namespace korthos {

using json = nlohmann::ordered_json;

inline json to_json(const Matrix& m) {
    json entries = json::array();
    for (const Index e : m.entries()) entries.push_back(m.ring().render(e));
    return {{"ring", m.ring().literal()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline Matrix matrix_from_json(const json& j) {
    try {
        const Ring ring = parse_ring(j.at("ring").get<std::string>());
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        std::vector<Index> entries;
        for (const auto& e : j.at("entries")) {
            const std::string text = e.is_string() ? e.get<std::string>() : std::to_string(e.get<long long>());
            entries.push_back(ring.parse(text).index);
        }
        return Matrix(ring, rows, cols, std::move(entries));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("matrix JSON: ") + e.what());
    }
}

inline json to_json(const CensusChecks& c) {
    return {{"closure_verified", c.closure_verified}, {"identity_present", c.identity_present}, {"is_group", c.is_group}};
}

/// Census summary; matrices are listed in text format when `with_elements`.
inline json to_json(const Census& c, bool with_elements) {
    json out = {{"ring", c.ring.literal()},
                {"n", c.n},
                {"k", c.ring.render(c.k)},
                {"side", std::string(to_string(c.side))},
                {"count", c.count()},
                {"checks", to_json(c.checks)}};
    if (with_elements) {
        json els = json::array();
        for (const auto& m : c.elements) els.push_back(format_matrix(m));
        out["elements"] = std::move(els);
    }
    return out;
}

inline json to_json(const Ring& ring, const CensusRow& r) {
    return {{"k", ring.render(r.k)}, {"left", r.left}, {"right", r.right}, {"two_sided", r.two_sided},
            {"difference", r.difference()}};
}

inline json to_json(const IsomorphismReport& r) {
    json factors = json::array(), a = json::array();
    for (std::size_t j = 0; j < r.factors.size(); ++j) {
        factors.push_back(r.factors[j].literal());
        a.push_back(r.factors[j].render(r.a[j]));
    }
    return {{"side", std::string(to_string(r.side))},
            {"factors", std::move(factors)},
            {"a_j", std::move(a)},
            {"factor_counts", r.factor_counts},
            {"product", r.product},
            {"direct_count", r.direct_count},
            {"bijection_ok", r.bijection_ok}};
}

inline json to_json(const DualityReport& r) {
    const auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
    return {{"size", r.size},
            {"dual_size", r.dual_size},
            {"self_dual", r.self_dual},
            {"weakly_self_dual", r.weakly_self_dual},
            {"lcd", r.lcd},
            {"gram_nonsingular", opt(r.gram_nonsingular)},
            {"hamming_distance", opt(r.hamming_distance)},
            {"lee_distance", opt(r.lee_distance)}};
}

}  // namespace korthos
