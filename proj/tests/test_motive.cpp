#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sbmotive/errors.hpp"
#include "sbmotive/motive.hpp"
#include "sbmotive/severi_brauer.hpp"

using namespace sbm;

namespace {

const DivisionContext kQuat(2, 1);
const DivisionContext kDeg4(2, 2);

MotiveTerm tate(std::uint64_t t) { return {TateObject{}, t}; }
MotiveTerm sb(const DivisionContext& c, std::vector<std::int64_t> dims, std::uint64_t t) {
    return {SBProductObject(c, std::move(dims)), t};
}

}  // namespace

TEST_CASE("division context validation") {
    CHECK_THROWS_AS(DivisionContext(4, 1), DomainError);
    CHECK_THROWS_AS(DivisionContext(1, 1), DomainError);
    CHECK_THROWS_AS(DivisionContext(2, -1), DomainError);
    CHECK_THROWS_AS(DivisionContext(2, 64), DomainError);
    CHECK(DivisionContext(3, 2).degree() == 9);
    CHECK(DivisionContext(5, 0).degree() == 1);
    CHECK_THROWS_AS(UpperObject(kDeg4, 3), DomainError);
    CHECK_THROWS_AS(SBProductObject(kDeg4, {5}), DomainError);
    CHECK_THROWS_AS(SBProductObject(kDeg4, {-1}), DomainError);
}

TEST_CASE("sum and twist") {
    CHECK(expr_twist(MotiveExpr{tate(0)}, 4) == MotiveExpr{tate(4)});
    const auto doubled = expr_sum(MotiveExpr{tate(0)}, MotiveExpr{tate(0)});
    CHECK(doubled.multiplicity(tate(0)) == 2);
    CHECK(doubled.size() == 2);
    CHECK(expr_twist(MotiveExpr{}, 3).is_zero());
}

TEST_CASE("split-level product") {
    CHECK(expr_product(MotiveExpr{sb(kQuat, {1}, 0)}, MotiveExpr{sb(kQuat, {1}, 0)}) ==
          MotiveExpr{sb(kQuat, {1, 1}, 0)});
    CHECK(expr_product(MotiveExpr{tate(2)}, MotiveExpr{sb(kQuat, {2}, 1)}) == MotiveExpr{sb(kQuat, {2}, 3)});
    CHECK(expr_product(MotiveExpr{}, MotiveExpr{tate(0), sb(kQuat, {1}, 2)}).is_zero());

    const MotiveExpr two_tates{tate(0), tate(1)};
    const auto sq = expr_product(two_tates, two_tates);
    CHECK(sq.multiplicity(tate(1)) == 2);
    CHECK(sq.size() == 4);

    CHECK_THROWS_AS(expr_product(MotiveExpr{{UpperObject(kDeg4, 1), 0}}, MotiveExpr{tate(0)}), UnsupportedError);
    CHECK_THROWS_AS(expr_product(MotiveExpr{sb(kQuat, {1}, 0)}, MotiveExpr{sb(kDeg4, {1}, 0)}), DomainError);
}

TEST_CASE("Krull-Schmidt equality") {
    CHECK(krull_schmidt_equal(MotiveExpr{tate(0), tate(4)}, MotiveExpr{tate(4), tate(0)}));
    MotiveExpr two;
    two.add(tate(0), 2);
    CHECK_FALSE(krull_schmidt_equal(MotiveExpr{tate(0)}, two));
    CHECK(krull_schmidt_equal(MotiveExpr{sb(kQuat, {0, 0}, 1)}, MotiveExpr{tate(1)}));
    CHECK(krull_schmidt_equal(MotiveExpr{sb(kDeg4, {0, 2}, 0)}, MotiveExpr{sb(kDeg4, {2, 4}, 0)}));
    CHECK(krull_schmidt_equal(MotiveExpr{sb(kDeg4, {1, 3}, 0)}, MotiveExpr{sb(kDeg4, {3, 1}, 0)}));
    CHECK(krull_schmidt_equal(MotiveExpr{{UpperObject(kDeg4, 2), 5}}, MotiveExpr{tate(5)}));
    CHECK(krull_schmidt_equal(MotiveExpr{{UpperObject(kDeg4, 0), 0}}, MotiveExpr{sb(kDeg4, {1}, 0)}));
    CHECK_FALSE(krull_schmidt_equal(MotiveExpr{{UpperObject(kDeg4, 1), 0}}, MotiveExpr{sb(kDeg4, {2}, 0)}));
    CHECK_FALSE(krull_schmidt_equal(MotiveExpr{tate(0)}, MotiveExpr{tate(1)}));
}

TEST_CASE("split Poincare polynomial") {
    const DivisionContext c(2, 2);
    CHECK(split_poincare(MotiveExpr{sb(c, {2}, 0)}) == gaussian_binomial(4, 2));
    CHECK(split_poincare(MotiveExpr{tate(0), tate(4)}) ==
          poly_add(GradedRankPoly::monomial(0), GradedRankPoly::monomial(4)));
    // SB_1 of a quaternion algebra is a conic
    CHECK(split_poincare(MotiveExpr{{UpperObject(kQuat, 0), 1}}) ==
          poly_add(GradedRankPoly::monomial(1), GradedRankPoly::monomial(2)));
    CHECK(split_poincare(MotiveExpr{{UpperObject(kDeg4, 2), 3}}) == GradedRankPoly::monomial(3));
    CHECK(split_poincare(MotiveExpr{}).is_zero());

    MotiveExpr triple;
    triple.add(tate(2), 3);
    CHECK(split_poincare(triple) == GradedRankPoly::monomial(2, 3));
}

TEST_CASE("opaque upper motives are rejected by name") {
    const MotiveExpr e{tate(0), {UpperObject(DivisionContext(3, 2), 1), 7}};
    try {
        (void)split_poincare(e);
        FAIL("expected UnsupportedError");
    } catch (const UnsupportedError& err) {
        CHECK(std::string(err.what()).find("U(p=3,n=2,k=1)(7)") != std::string::npos);
    }
}

TEST_CASE("SB product rank is a product of binomials") {
    for (std::int64_t p : {2, 3})
        for (std::int64_t n = 0; n <= 2; ++n) {
            const DivisionContext ctx(p, n);
            const auto deg = static_cast<std::int64_t>(ctx.degree());
            for (std::int64_t i = 0; i <= deg; ++i)
                for (std::int64_t j = 0; j <= deg; ++j)
                    CHECK(poly_rank(split_poincare(MotiveExpr{sb(ctx, {i, j}, 0)})) ==
                          oracle::binomial(deg, i) * oracle::binomial(deg, j));
        }
}

TEST_CASE("dim_upper_motive") {
    CHECK(dim_upper_motive(DivisionContext(2, 2), 1) == 4);
    CHECK(dim_upper_motive(DivisionContext(3, 2), 0) == 8);
    CHECK(dim_upper_motive(DivisionContext(2, 3), 3) == 0);
    CHECK_THROWS_AS(dim_upper_motive(DivisionContext(2, 3), 4), DomainError);
    CHECK_THROWS_AS(dim_upper_motive(DivisionContext(2, 3), -1), DomainError);
}

TEST_CASE("identify upper and lower terms") {
    const auto star = function_field_decomposition(SBVariety(kDeg4, 1));
    const auto r = identify_upper_lower(star);
    REQUIRE(r.upper);
    REQUIRE(r.lower);
    CHECK(*r.upper == sb(kQuat, {0, 2}, 0));
    CHECK(*r.lower == sb(kQuat, {2, 0}, 4));
    CHECK(normalize(r.upper->object) == MotiveObject{TateObject{}});

    const auto point = identify_upper_lower(MotiveExpr{tate(0)});
    CHECK(point.upper == tate(0));
    CHECK(point.lower == tate(0));

    MotiveExpr tie;
    tie.add(tate(1), 2);
    const auto t = identify_upper_lower(tie);
    CHECK_FALSE(t.upper);
    CHECK(t.upper_candidates == 2);
    CHECK_FALSE(t.lower);

    CHECK_THROWS_AS(identify_upper_lower(MotiveExpr{}), DomainError);
}

TEST_CASE("single-term expressions are their own upper and lower term") {
    for (std::int64_t i = 0; i <= 4; ++i)
        for (std::uint64_t t : {0u, 3u}) {
            const auto term = sb(kDeg4, {i, 4 - i}, t);
            const auto r = identify_upper_lower(MotiveExpr{term});
            CHECK(r.upper == term);
            CHECK(r.lower == term);
        }
}

TEST_CASE("split_poincare is a monoid homomorphism on random expressions") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(0, 4), twist(0, 6), count(0, 3);
    auto random_expr = [&] {
        MotiveExpr e;
        for (int i = count(rng); i > 0; --i) {
            if (dim(rng) == 0)
                e.add(tate(twist(rng)));
            else
                e.add(sb(kDeg4, {dim(rng), dim(rng)}, twist(rng)));
        }
        return e;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_expr();
        const auto b = random_expr();
        const auto t = static_cast<std::uint64_t>(twist(rng));
        const auto pa = split_poincare(a);
        const auto pb = split_poincare(b);
        CHECK(split_poincare(expr_sum(a, b)) == poly_add(pa, pb));
        CHECK(split_poincare(expr_twist(a, t)) == poly_shift(pa, t));
        CHECK(split_poincare(expr_product(a, b)) == poly_mul(pa, pb));
        CHECK(krull_schmidt_equal(expr_sum(a, b), expr_sum(b, a)));
        if (krull_schmidt_equal(a, b)) CHECK(pa == pb);
    }
}
