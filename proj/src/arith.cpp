#include "sbmotive/arith.hpp"

#include <limits>

#include "sbmotive/errors.hpp"

namespace sbm {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in addition");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in multiplication");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    if (exp > std::numeric_limits<unsigned long>::max())
        throw DomainError("exponent too large");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

BigInt parse_decimal(const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw DomainError("empty integer literal");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw DomainError("malformed integer literal '" + s + "'");
    return BigInt(s, 10);
}

}  // namespace sbm
