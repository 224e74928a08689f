#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sbmotive/motive.hpp"

namespace sbm {

/// SB_{p^k}(D) for a p-primary division algebra D of degree p^n.
struct SBVariety {
    SBVariety(DivisionContext ctx, std::int64_t level);

    DivisionContext context;
    std::uint64_t k;

    std::uint64_t reduced_dim() const { return context.reduced_dim(k); }
    friend bool operator==(const SBVariety&, const SBVariety&) = default;
};

/// p^k (p^n - p^k).
std::uint64_t sb_dimension(const SBVariety& v);

/**
 * Number of partitions with p^n - p^k entries, each in [0, p^k], of total
 * size p^n + p^k(p^n - p^k) - i. Zero whenever that size is negative or
 * exceeds the box capacity. DomainError unless 0 <= k <= n and p is prime.
 */
BigInt mu(std::int64_t i, std::int64_t k, std::int64_t n, std::int64_t p);

/// Order of the group of rational cycles of dimension i on
/// SB_1(D) x SB_{p^k}(D) (modulo p), as mu(i+1) independent summands of
/// order p. `literal_product` keeps the value mu(i+1) * p alongside.
struct ChowOrderReport {
    std::int64_t i = 0;
    BigInt summand_count;
    BigInt group_order_exponent;
    BigInt literal_product;

    friend bool operator==(const ChowOrderReport&, const ChowOrderReport&) = default;
};

/// Largest admissible i: dim SB_1(D) + dim SB_{p^k}(D).
std::uint64_t chow_degree_bound(const SBVariety& v);

/// DomainError unless 0 <= i <= chow_degree_bound(v).
ChowOrderReport rational_chow_order(const SBVariety& v, std::int64_t i);

/**
 * Decomposition of M(SB_{2^k}(D)) over the function field of
 * SB_{2^{n-1}}(D):
 *
 *   sum over i + j = 2^k of (SB_i(C) x SB_j(C))(i (2^{n-1} - j)),
 *
 * where C has degree 2^{n-1}. Pairs with i or j above 2^{n-1} contribute
 * nothing and are omitted. UnsupportedError for odd p, DomainError for n = 0.
 */
MotiveExpr function_field_decomposition(const SBVariety& v);

struct EndpointPair {
    MotiveTerm upper;
    MotiveTerm lower;
};

/// Upper and lower summands U_{k,C} and U_{k,C}(p^{n+k-1}(p-1)) of
/// (U_{k,D}) over the function field; C has exponent n - 1.
/// DomainError unless n >= 1 and 0 <= k <= n - 1.
EndpointPair sbc_endpoints(const DivisionContext& ctx, std::int64_t k);

/// p^{n+k-1}(p-1) as an exact integer.
BigInt endpoint_twist(std::uint64_t p, std::uint64_t n, std::uint64_t k);

// Classification of SB_k(D) for arbitrary k >= 1 against the squarefree /
// four-times-odd-squarefree criterion.

struct PrimePower {
    std::uint64_t prime;
    std::uint64_t exponent;
    std::uint64_t value;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::vector<PrimePower> factorize(std::uint64_t k);

/// One p-primary sub-case: SB_{reduced_dim}(D) with D p-primary.
struct PrimaryReduction {
    std::uint64_t prime;
    std::vector<std::uint64_t> reduced_dims;
    friend bool operator==(const PrimaryReduction&, const PrimaryReduction&) = default;
};

enum class CoverageReason { Squarefree, FourTimesOddSquarefree };

struct Covered {
    CoverageReason reason;
    std::uint64_t odd_part = 0;  // k' when k = 4k'
    std::vector<PrimaryReduction> reductions;
    friend bool operator==(const Covered&, const Covered&) = default;
};

struct Open {
    PrimePower blocking;
    friend bool operator==(const Open&, const Open&) = default;
};

using Classification = std::variant<Covered, Open>;

/// DomainError for k = 0.
Classification conjecture_case_classifier(std::int64_t k);

std::string to_string(CoverageReason r);

}  // namespace sbm
