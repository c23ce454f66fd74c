#pragma once

// Exact arithmetic primitives shared by the whole library: arbitrary-size
// integers, exact rationals, and a couple of combinatorial helpers that are
// used both by the enumeration oracles and by closed-form cross-checks.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace symmetria {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) with the usual convention C(n, k) = 0 for k < 0 or k > n (n >= 0).
inline Int binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

// Catalan number C_n = C(2n, n) / (n + 1).
inline Int catalan(long long n) {
    if (n < 0) throw std::invalid_argument("catalan: negative n");
    return binomial(2 * n, n) / (n + 1);
}

// Catalan numbers C_0 .. C_n as a vector (handy for series recurrences).
inline std::vector<Int> catalan_row(long long n) {
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    for (long long i = 0; i < n; ++i)
        c[static_cast<size_t>(i) + 1] =
            c[static_cast<size_t>(i)] * 2 * (2 * i + 1) / (i + 2);
    return c;
}

inline Int pow2(long long n) {
    Int r = 1;
    return r << n;
}

// Raised when an enumeration would exceed its configured object budget.
// The CLI maps this to its resource-limit exit code.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

struct EnumLimits {
    // Hard cap on the number of generated objects; enumeration throws
    // resource_limit_error beyond it. Enumerations materialize their result,
    // so the cap also bounds peak memory (~1 GB at the default).
    long long max_objects = 10'000'000;
};

}  // namespace symmetria
