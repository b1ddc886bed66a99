#pragma once

// Small numeric helpers shared across the library. Not part of the public
// surface; subject to change.

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tripatch::detail {

// x^e for small non-negative integer e, by running product. ipow(0, 0) == 1.
inline double ipow(double x, int e) {
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= x;
    return r;
}

// Binomial coefficient via the additive Pascal recurrence; exact in integers
// for the small arguments used here (n <= 30).
inline std::int64_t binomial(int n, int k) {
    if (n > 30) throw std::invalid_argument("binomial: n exceeds the exact-integer range");
    if (k < 0 || k > n) return 0;
    std::int64_t row[31] = {1};
    for (int r = 1; r <= n; ++r)
        for (int c = r; c > 0; --c) row[c] += row[c - 1];
    return row[k];
}

// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace tripatch::detail
