#pragma once

#include <korthos/korthos.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace support {

/// Runs f and reports the library error code it threw, if any.
inline std::optional<korthos::ErrorCode> error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const korthos::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

/// Oracle index -> library index, matched through the shared text format.
inline std::vector<korthos::Index> element_map(const korthos::Ring& ring, const oracle::Ring& o) {
    std::vector<korthos::Index> out;
    for (const auto& name : o.names) out.push_back(ring.parse(name).index);
    return out;
}

inline korthos::Matrix to_matrix(const korthos::Ring& ring, const std::vector<korthos::Index>& map,
                                 const oracle::Entries& a, std::size_t rows, std::size_t cols) {
    std::vector<korthos::Index> entries;
    for (const int x : a) entries.push_back(map[x]);
    return korthos::Matrix(ring, rows, cols, std::move(entries));
}

inline std::vector<korthos::Matrix> sorted(const korthos::Ring& ring, const std::vector<korthos::Index>& map,
                                           const std::vector<oracle::Entries>& list, std::size_t n) {
    std::vector<korthos::Matrix> out;
    for (const auto& a : list) out.push_back(to_matrix(ring, map, a, n, n));
    std::sort(out.begin(), out.end(), korthos::CanonicalLess{});
    return out;
}

inline std::vector<korthos::Matrix> parse_all(const korthos::Ring& ring, std::initializer_list<const char*> texts) {
    std::vector<korthos::Matrix> out;
    for (const char* t : texts) out.push_back(korthos::parse_matrix(ring, t));
    std::sort(out.begin(), out.end(), korthos::CanonicalLess{});
    return out;
}

}  // namespace support
