#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cstdlib>
#include <string>

namespace bramble::detail {

using Big = boost::multiprecision::mpfr_float;  // dynamic decimal-digit precision
using BigInt = boost::multiprecision::mpz_int;

inline constexpr unsigned kMinPrecisionDigits = 50;
inline constexpr unsigned kMaxPrecisionDigits = 100000;
inline constexpr unsigned kDefaultPrecisionDigits = 320;

/// Starting working precision in decimal digits: BRAMBLE_PRECISION from the
/// environment, clamped to [50, 100000]; 320 when unset or unparseable.
inline unsigned envPrecisionDigits() {
    const char* s = std::getenv("BRAMBLE_PRECISION");
    if (!s || !*s) return kDefaultPrecisionDigits;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0') return kDefaultPrecisionDigits;
    if (v < static_cast<long>(kMinPrecisionDigits)) return kMinPrecisionDigits;
    if (v > static_cast<long>(kMaxPrecisionDigits)) return kMaxPrecisionDigits;
    return static_cast<unsigned>(v);
}

/// Scoped override of the mpfr default precision (decimal digits).
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits) : saved_(Big::default_precision()) {
        Big::default_precision(digits);
    }
    ~PrecisionGuard() { Big::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

/// Fixed-point rendering with exactly six truncated fraction digits.
inline std::string fixedSixDigits(const Big& v) {
    Big f = floor(v);
    BigInt whole(f);
    Big scaled = (v - f) * 1000000;
    BigInt frac(scaled);
    std::string fs = frac.str();
    return whole.str() + "." + std::string(6 - fs.size(), '0') + fs;
}

/// ceil to an exact integer.
inline BigInt ceilToInt(const Big& v) { return BigInt(Big(ceil(v))); }

}  // namespace bramble::detail
