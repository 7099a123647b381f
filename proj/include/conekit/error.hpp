#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conekit {

enum class ErrorCode {
    degenerate_ray,
    dimension_mismatch,
    not_pointed,
    not_full_dimensional,
    invalid_spec,
    degenerate_space,
    rank_unsupported,
    outside_effective,
    boundary_point,
    no_reference_data,
    route_mismatch,
    fixture_corrupt,
    internal,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::degenerate_ray: return "DegenerateRay";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_pointed: return "NotPointed";
    case ErrorCode::not_full_dimensional: return "NotFullDimensional";
    case ErrorCode::invalid_spec: return "InvalidSpec";
    case ErrorCode::degenerate_space: return "DegenerateSpace";
    case ErrorCode::rank_unsupported: return "RankUnsupported";
    case ErrorCode::outside_effective: return "OutsideEffective";
    case ErrorCode::boundary_point: return "BoundaryPoint";
    case ErrorCode::no_reference_data: return "NoReferenceData";
    case ErrorCode::route_mismatch: return "RouteMismatch";
    case ErrorCode::fixture_corrupt: return "FixtureCorrupt";
    case ErrorCode::internal: return "InternalError";
    }
    return "Unknown";
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

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace conekit
