#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "bchlab/error.hpp"

namespace bchlab {

/// Exact integer used by every closed form, transform and bound. No floating
/// point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;

inline Int ipow(Int base, std::uint64_t exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/// floor(a/b) for b > 0, correct for negative a.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// ceil(a/b) for b > 0.
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i);
    }
    return r;
}

inline std::uint64_t to_u64(const Int& v, const char* what = "value") {
    require(v >= 0 && v <= Int(UINT64_MAX), ErrorKind::BudgetExceeded, std::string(what) + " exceeds 64-bit range");
    return static_cast<std::uint64_t>(v);
}

/// Resource limits for table construction and exhaustive enumeration.
struct Budget {
    std::uint64_t fieldTable = std::uint64_t(1) << 22;   ///< max field size q^m for log tables
    std::uint64_t enumeration = std::uint64_t(1) << 24;  ///< max number of codewords enumerated
};

}  // namespace bchlab
