#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sbmotive/arith.hpp"

namespace sbm {

/**
 * Graded rank polynomial: a finitely supported map degree -> count.
 *
 * Used as the split-level Poincare polynomial of a geometrically split
 * motive, where the coefficient of q^i is the rank of the degree-i Chow
 * group. Coefficients are exact nonnegative integers, degrees are
 * nonnegative, and zero coefficients are never stored.
 */
class GradedRankPoly {
public:
    using Degree = std::uint64_t;
    using Terms = std::map<Degree, BigInt>;

    GradedRankPoly() = default;

    /// Builds from a signed map; rejects negative degrees or coefficients
    /// and drops zeros.
    static GradedRankPoly from_signed(const std::map<std::int64_t, BigInt>& raw);
    static GradedRankPoly from_terms(Terms terms);
    static GradedRankPoly monomial(Degree degree, BigInt coeff = 1);

    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    BigInt coefficient(Degree degree) const;

    // Both throw DomainError on the zero polynomial.
    Degree bottom_degree() const;
    Degree top_degree() const;

    friend bool operator==(const GradedRankPoly&, const GradedRankPoly&) = default;

private:
    explicit GradedRankPoly(Terms terms) : terms_(std::move(terms)) {}
    Terms terms_;
};

GradedRankPoly poly_add(const GradedRankPoly& a, const GradedRankPoly& b);
GradedRankPoly poly_mul(const GradedRankPoly& a, const GradedRankPoly& b);
GradedRankPoly poly_shift(const GradedRankPoly& a, std::uint64_t t);

/// Top minus bottom degree. DomainError on the zero polynomial.
std::int64_t poly_dim(const GradedRankPoly& a);
/// Sum of coefficients (value at q = 1).
BigInt poly_rank(const GradedRankPoly& a);

/**
 * Gaussian binomial [d choose k]_q, the Poincare polynomial of G(k, d).
 *
 * Computed by the q-Pascal rule [d,k] = [d-1,k-1] + q^k [d-1,k]. Throws
 * DomainError when k > d or either argument is negative.
 */
GradedRankPoly gaussian_binomial(std::int64_t d, std::int64_t k);

/// Box query: weakly decreasing sequences of length `parts` with entries
/// in [0, max_part] summing to `size`.
struct PartitionBoxSpec {
    std::uint64_t parts = 0;
    std::uint64_t max_part = 0;
    std::uint64_t size = 0;
};

/// Dynamic-programming count over part values; 0 outside the box capacity.
BigInt count_partitions_in_box(const PartitionBoxSpec& spec);

/// Exhaustive enumeration of every partition in a parts x max_part box,
/// histogrammed by size. Exponential; intended as a cross-check for small
/// boxes only.
GradedRankPoly enumerate_box_partitions(std::uint64_t parts, std::uint64_t max_part);

}  // namespace sbm
