#pragma once

// Test-only oracles. Nothing here calls into the library's polynomial or
// partition code: results are plain degree -> coefficient maps.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Hist = std::map<std::uint64_t, mpz_class>;

// Walks every vector in [0, c]^m like an odometer and keeps the weakly
// decreasing ones.
inline Hist box_histogram(std::uint64_t m, std::uint64_t c) {
    Hist h;
    std::vector<std::uint64_t> digits(m, 0);
    while (true) {
        bool decreasing = true;
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            sum += digits[i];
            if (i > 0 && digits[i] > digits[i - 1]) decreasing = false;
        }
        if (decreasing) h[sum] += 1;
        std::size_t pos = 0;
        while (pos < digits.size() && digits[pos] == c) digits[pos++] = 0;
        if (pos == digits.size()) break;
        ++digits[pos];
    }
    return h;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// [d choose k]_q = prod_{i<k} (1 - q^{d-i}) / prod_{i=1..k} (1 - q^i),
// with exact division by each (1 - q^e) through the recurrence
// r[t] = a[t] + r[t-e].
inline Hist gaussian_product_formula(std::uint64_t d, std::uint64_t k) {
    if (k > d) throw std::invalid_argument("k > d");
    std::vector<mpz_class> poly{1};
    for (std::uint64_t i = 0; i < k; ++i) {
        const auto e = d - i;
        std::vector<mpz_class> next(poly.size() + e);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t] += poly[t];
            next[t + e] -= poly[t];
        }
        poly = std::move(next);
    }
    for (std::uint64_t e = 1; e <= k; ++e) {
        std::vector<mpz_class> quot(poly.size() - e);
        for (std::size_t t = 0; t < quot.size(); ++t) quot[t] = poly[t] + (t >= e ? quot[t - e] : mpz_class(0));
        for (std::size_t t = quot.size(); t < poly.size(); ++t)
            if (poly[t] + (t >= e ? quot[t - e] : mpz_class(0)) != 0) throw std::logic_error("inexact division");
        poly = std::move(quot);
    }
    Hist h;
    for (std::size_t t = 0; t < poly.size(); ++t)
        if (poly[t] != 0) h[t] = poly[t];
    return h;
}

}  // namespace oracle
