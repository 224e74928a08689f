#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sbm {

using BigInt = mpz_class;

// Checked 64-bit helpers; overflow raises DomainError.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

bool is_prime(std::uint64_t n);

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Parses an optionally signed decimal string; throws DomainError on junk.
BigInt parse_decimal(const std::string& s);

}  // namespace sbm
