#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "sbmotive/qpoly.hpp"

namespace sbm {

/// A p-primary division algebra, remembered only through p and the
/// exponent n of its degree p^n. n = 0 is the split case.
class DivisionContext {
public:
    /// Throws DomainError unless p is prime, n >= 0 and p^n fits in 64 bits.
    DivisionContext(std::int64_t p, std::int64_t n);

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t degree() const noexcept { return degree_; }
    /// p^level, for 0 <= level <= n.
    std::uint64_t reduced_dim(std::uint64_t level) const;

    friend auto operator<=>(const DivisionContext& a, const DivisionContext& b) {
        return std::tie(a.p_, a.n_) <=> std::tie(b.p_, b.n_);
    }
    friend bool operator==(const DivisionContext& a, const DivisionContext& b) {
        return a.p_ == b.p_ && a.n_ == b.n_;
    }

private:
    std::uint64_t p_;
    std::uint64_t n_;
    std::uint64_t degree_;
};

struct TateObject {
    friend auto operator<=>(const TateObject&, const TateObject&) = default;
};

/// U_{level, D}: upper motive of SB_{p^level}(D).
struct UpperObject {
    UpperObject(DivisionContext ctx, std::int64_t level);

    DivisionContext context;
    std::uint64_t level;

    /// Split polynomial is unknown for 0 < level < n.
    bool is_opaque() const noexcept { return level > 0 && level < context.n(); }

    friend auto operator<=>(const UpperObject&, const UpperObject&) = default;
};

/// Motive of SB_{i_1}(D) x ... x SB_{i_r}(D) for reduced dimensions i_j.
struct SBProductObject {
    SBProductObject(DivisionContext ctx, std::vector<std::int64_t> dims);

    DivisionContext context;
    std::vector<std::uint64_t> dims;

    friend auto operator<=>(const SBProductObject&, const SBProductObject&) = default;
};

/// Alternative order fixes the canonical kind order: Tate, Upper, SBProduct.
using MotiveObject = std::variant<TateObject, UpperObject, SBProductObject>;

/**
 * Canonical representative of an object up to isomorphism.
 *
 * Upper(C, n) is a point and becomes Tate; Upper(C, 0) is the whole
 * classical Severi-Brauer motive SB_1. Point factors (reduced dimension 0
 * or deg) are dropped from products, the remaining factors are sorted, and
 * an empty product is Tate.
 */
MotiveObject normalize(const MotiveObject& obj);

std::string describe(const MotiveObject& obj);

struct MotiveTerm {
    MotiveObject object;
    std::uint64_t twist = 0;

    friend auto operator<=>(const MotiveTerm&, const MotiveTerm&) = default;
};

std::string describe(const MotiveTerm& term);

/// Finite direct sum of twisted objects, stored as a multiset keyed by the
/// canonical term order. The empty expression is the zero motive.
class MotiveExpr {
public:
    using Multiset = std::map<MotiveTerm, std::uint64_t>;

    MotiveExpr() = default;
    MotiveExpr(std::initializer_list<MotiveTerm> terms);

    void add(MotiveTerm term, std::uint64_t multiplicity = 1);

    bool is_zero() const noexcept { return terms_.empty(); }
    const Multiset& terms() const noexcept { return terms_; }
    std::uint64_t multiplicity(const MotiveTerm& term) const;
    /// Total number of summands, with multiplicity.
    std::uint64_t size() const;

    /// Same multiset after applying `normalize` to every object.
    MotiveExpr normalized() const;

    friend bool operator==(const MotiveExpr&, const MotiveExpr&) = default;

private:
    Multiset terms_;
};

MotiveExpr expr_sum(const MotiveExpr& a, const MotiveExpr& b);
MotiveExpr expr_twist(const MotiveExpr& a, std::uint64_t t);
/// Split-level Kunneth product. Throws UnsupportedError on Upper objects and
/// DomainError on products of Severi-Brauer factors over different algebras.
MotiveExpr expr_product(const MotiveExpr& a, const MotiveExpr& b);

/// Equality of isomorphism classes in the free monoid of indecomposables.
bool krull_schmidt_equal(const MotiveExpr& a, const MotiveExpr& b);

/// Poincare polynomial over a splitting field. UnsupportedError on opaque
/// upper motives, naming the offending term.
GradedRankPoly split_poincare(const MotiveExpr& a);
GradedRankPoly split_poincare(const MotiveObject& obj);

/// dim SB_{p^k}(D) = p^k (p^n - p^k), the dimension of U_{k,D}.
std::uint64_t dim_upper_motive(const DivisionContext& ctx, std::int64_t k);

struct UpperLowerReport {
    std::optional<MotiveTerm> upper;
    std::optional<MotiveTerm> lower;
    std::uint64_t upper_candidates = 0;  // with multiplicity
    std::uint64_t lower_candidates = 0;
};

/// Upper term: the unique summand reaching the global bottom degree. Lower
/// term: the unique summand reaching the global top degree. Ties leave the
/// slot empty and report the count.
UpperLowerReport identify_upper_lower(const MotiveExpr& a);

}  // namespace sbm
