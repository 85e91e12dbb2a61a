#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace chromhom {

/// Arbitrary-precision integer used for matrix entries, invariant factors and
/// polynomial coefficients.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::optional<std::int64_t> to_int64(const Integer& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(v.get_si());
}

inline Integer from_int64(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace chromhom
