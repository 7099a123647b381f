#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace conekit {

/// Arbitrary-precision integer. All coordinates in the library use it.
using Integer = mpz_class;

/// Exact rational scalar. GMP keeps it in lowest terms with a positive denominator.
using Scalar = mpq_class;

using IntVector = std::vector<Integer>;

inline IntVector int_vector(std::initializer_list<long> values) {
    IntVector out;
    out.reserve(values.size());
    for (long v : values) out.emplace_back(v);
    return out;
}

inline std::string to_string(const Integer& value) { return value.get_str(); }

inline std::string to_string(const Scalar& value) { return value.get_str(); }

inline std::string to_string(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

inline bool fits_int64(const Integer& value) {
    static const Integer lo(std::to_string(INT64_MIN + 1));
    static const Integer hi(std::to_string(INT64_MAX));
    return value >= lo && value <= hi;
}

inline std::int64_t to_int64(const Integer& value) {
    if (value.fits_slong_p()) return value.get_si();
    // long is 64 bits on every platform we build for; keep the fallback exact anyway.
    return std::stoll(value.get_str());
}

inline Integer from_int64(std::int64_t value) {
    if (value >= LONG_MIN && value <= LONG_MAX) return Integer(static_cast<long>(value));
    return Integer(std::to_string(value));
}

} // namespace conekit
