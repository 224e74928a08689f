#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sbmotive/errors.hpp"
#include "sbmotive/qpoly.hpp"

using namespace sbm;

namespace {

GradedRankPoly from_hist(const oracle::Hist& h) { return GradedRankPoly::from_terms(h); }

GradedRankPoly poly(std::initializer_list<std::pair<const std::uint64_t, int>> kv) {
    GradedRankPoly::Terms t;
    for (const auto& [d, c] : kv) t[d] = c;
    return GradedRankPoly::from_terms(t);
}

}  // namespace

TEST_CASE("gaussian binomial examples") {
    CHECK(gaussian_binomial(4, 2) == poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(gaussian_binomial(4, 2) == from_hist(oracle::box_histogram(2, 2)));
    CHECK(gaussian_binomial(7, 0) == poly({{0, 1}}));
    CHECK(gaussian_binomial(4, 1) == poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    CHECK(gaussian_binomial(4, 1) == from_hist(oracle::box_histogram(1, 3)));
    CHECK(gaussian_binomial(0, 0) == poly({{0, 1}}));
}

TEST_CASE("gaussian binomial rejects k > d and negative input") {
    CHECK_THROWS_AS(gaussian_binomial(2, 3), DomainError);
    CHECK_THROWS_AS(gaussian_binomial(-1, 0), DomainError);
    CHECK_THROWS_AS(gaussian_binomial(3, -1), DomainError);
}

TEST_CASE("gaussian binomial agrees with box enumeration for d <= 12") {
    for (std::int64_t d = 0; d <= 12; ++d)
        for (std::int64_t k = 0; k <= d; ++k) {
            CAPTURE(d);
            CAPTURE(k);
            const auto g = gaussian_binomial(d, k);
            REQUIRE(g == from_hist(oracle::box_histogram(k, d - k)));
            CHECK(g.bottom_degree() == 0);
            CHECK(g.top_degree() == static_cast<std::uint64_t>(k * (d - k)));
            const auto top = g.top_degree();
            for (std::uint64_t j = 0; j <= top; ++j) CHECK(g.coefficient(j) == g.coefficient(top - j));
            CHECK(poly_rank(g) == oracle::binomial(d, k));
        }
}

TEST_CASE("gaussian binomial stays exact past 64 bits") {
    const auto g = gaussian_binomial(100, 50);
    // frozen from the product formula (1-q^100)...(1-q^51)/(1-q)...(1-q^50)
    CHECK(g.coefficient(1250) == BigInt("276219415228877159323187426"));
    CHECK(poly_rank(g) == BigInt("100891344545564193334812497256"));
    CHECK(g == from_hist(oracle::gaussian_product_formula(100, 50)));
    CHECK(gaussian_binomial(64, 32).coefficient(512) == BigInt("9747120868919060"));
}

TEST_CASE("count_partitions_in_box examples") {
    CHECK(count_partitions_in_box({2, 2, 2}) == 2);
    CHECK(count_partitions_in_box({0, 5, 0}) == 1);
    CHECK(count_partitions_in_box({3, 1, 4}) == 0);
    CHECK(count_partitions_in_box({6, 5, 15}) == 32);
    CHECK(count_partitions_in_box({0, 0, 1}) == 0);
    CHECK(count_partitions_in_box({4, 0, 0}) == 1);
}

TEST_CASE("box count equals the matching gaussian coefficient for m, c <= 8") {
    for (std::uint64_t m = 0; m <= 8; ++m)
        for (std::uint64_t c = 0; c <= 8; ++c) {
            const auto g = gaussian_binomial(static_cast<std::int64_t>(m + c), static_cast<std::int64_t>(c));
            const auto h = oracle::box_histogram(m, c);
            for (std::uint64_t s = 0; s <= m * c + 2; ++s) {
                CAPTURE(m);
                CAPTURE(c);
                CAPTURE(s);
                const auto count = count_partitions_in_box({m, c, s});
                CHECK(count == g.coefficient(s));
                CHECK(count == (h.count(s) ? h.at(s) : mpz_class(0)));
            }
        }
}

TEST_CASE("shipped enumerator agrees with the test oracle") {
    for (std::uint64_t m = 0; m <= 6; ++m)
        for (std::uint64_t c = 0; c <= 5; ++c) CHECK(enumerate_box_partitions(m, c) == from_hist(oracle::box_histogram(m, c)));
}

TEST_CASE("add, mul and shift examples") {
    CHECK(poly_shift(poly({{0, 1}}), 4) == poly({{4, 1}}));
    CHECK(poly_mul(poly({{0, 1}, {1, 1}}), poly({{0, 1}, {1, 1}})) == poly({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(poly_add(poly({{0, 1}}), poly({{0, 1}})) == poly({{0, 2}}));
    CHECK(poly_mul(poly({{0, 1}}), GradedRankPoly{}).is_zero());
    CHECK(poly_add(GradedRankPoly{}, GradedRankPoly{}).is_zero());
}

TEST_CASE("dimension and rank") {
    CHECK(poly_dim(gaussian_binomial(4, 2)) == 4);
    CHECK(poly_rank(gaussian_binomial(4, 2)) == 6);
    CHECK(poly_dim(poly({{3, 1}})) == 0);
    CHECK(poly_rank(GradedRankPoly{}) == 0);
    CHECK_THROWS_AS(poly_dim(GradedRankPoly{}), DomainError);
    CHECK_THROWS_AS(GradedRankPoly{}.top_degree(), DomainError);
}

TEST_CASE("construction rejects negative support and drops zeros") {
    CHECK_THROWS_AS(GradedRankPoly::from_signed({{-1, 1}}), DomainError);
    CHECK_THROWS_AS(GradedRankPoly::from_signed({{2, -3}}), DomainError);
    const auto p = GradedRankPoly::from_signed({{0, 0}, {5, 2}});
    CHECK(p.terms().size() == 1);
    CHECK(p.bottom_degree() == 5);
    CHECK(GradedRankPoly::monomial(7, 0).is_zero());
}

TEST_CASE("rank is multiplicative and shift-invariant on random polynomials") {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<int> deg(0, 20), coeff(0, 1000), len(0, 6);
    auto random_poly = [&] {
        std::map<std::int64_t, BigInt> raw;
        for (int i = len(rng); i > 0; --i) raw[deg(rng)] += coeff(rng);
        return GradedRankPoly::from_signed(raw);
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_poly();
        const auto b = random_poly();
        const auto t = static_cast<std::uint64_t>(deg(rng));
        CHECK(poly_rank(poly_mul(a, b)) == poly_rank(a) * poly_rank(b));
        CHECK(poly_rank(poly_shift(a, t)) == poly_rank(a));
        CHECK(poly_rank(poly_add(a, b)) == poly_rank(a) + poly_rank(b));
        CHECK(poly_mul(a, b) == poly_mul(b, a));
    }
}
