#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace korthos {

enum class ErrorCode {
    invalid_parameter,
    parse_error,
    not_a_unit,
    ring_mismatch,
    dimension_mismatch,
    size_cap_exceeded,
    budget_exceeded,
    not_splittable_to_fields,
    not_applicable,
    undefined_distance,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_parameter: return "invalid-parameter";
        case ErrorCode::parse_error: return "parse-error";
        case ErrorCode::not_a_unit: return "not-a-unit";
        case ErrorCode::ring_mismatch: return "ring-mismatch";
        case ErrorCode::dimension_mismatch: return "dimension-mismatch";
        case ErrorCode::size_cap_exceeded: return "size-cap-exceeded";
        case ErrorCode::budget_exceeded: return "budget-exceeded";
        case ErrorCode::not_splittable_to_fields: return "not-splittable-to-fields";
        case ErrorCode::not_applicable: return "not-applicable";
        case ErrorCode::undefined_distance: return "undefined-distance";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace korthos
