#include "sbmotive/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sbmotive/errors.hpp"
#include "sbmotive/json_io.hpp"
#include "sbmotive/severi_brauer.hpp"
#include "sbmotive/type_calculus.hpp"

namespace sbm {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& what) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.first_failure = what();
        }
    }

    CheckResult finish() && { return std::move(result_); }

private:
    CheckResult result_;
};

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string args(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        os << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

bool squarefree(std::uint64_t k) {
    for (std::uint64_t d = 2; d * d <= k; ++d)
        if (k % (d * d) == 0) return false;
    return true;
}

CheckResult gaussian_vs_enumeration() {
    Check c("qpoly.gaussian_matches_enumeration");
    for (std::int64_t d = 0; d <= 12; ++d)
        for (std::int64_t k = 0; k <= d; ++k)
            c.expect(gaussian_binomial(d, k) == enumerate_box_partitions(k, d - k),
                     [&] { return args({{"d", d}, {"k", k}}); });
    return std::move(c).finish();
}

CheckResult gaussian_symmetry_and_rank() {
    Check c("qpoly.gaussian_symmetry_and_rank");
    for (std::int64_t d = 0; d <= 12; ++d)
        for (std::int64_t k = 0; k <= d; ++k) {
            const auto g = gaussian_binomial(d, k);
            const auto top = static_cast<std::uint64_t>(k * (d - k));
            bool symmetric = g.bottom_degree() == 0 && g.top_degree() == top;
            for (std::uint64_t j = 0; j <= top; ++j) symmetric = symmetric && g.coefficient(j) == g.coefficient(top - j);
            c.expect(symmetric, [&] { return "symmetry " + args({{"d", d}, {"k", k}}); });
            c.expect(poly_rank(g) == binomial(d, k), [&] { return "rank " + args({{"d", d}, {"k", k}}); });
        }
    return std::move(c).finish();
}

CheckResult count_vs_coefficient() {
    Check c("qpoly.box_count_matches_coefficient");
    for (std::uint64_t m = 0; m <= 8; ++m)
        for (std::uint64_t cap = 0; cap <= 8; ++cap) {
            const auto g = gaussian_binomial(static_cast<std::int64_t>(m + cap), static_cast<std::int64_t>(cap));
            for (std::uint64_t s = 0; s <= m * cap + 1; ++s)
                c.expect(count_partitions_in_box({m, cap, s}) == g.coefficient(s), [&] {
                    return args({{"parts", std::int64_t(m)}, {"max_part", std::int64_t(cap)}, {"size", std::int64_t(s)}});
                });
        }
    return std::move(c).finish();
}

CheckResult rank_laws() {
    Check c("qpoly.rank_multiplicative_and_shift_invariant");
    std::vector<GradedRankPoly> sample;
    for (std::int64_t d = 0; d <= 6; ++d)
        for (std::int64_t k = 0; k <= d; ++k) sample.push_back(gaussian_binomial(d, k));
    for (std::size_t a = 0; a < sample.size(); a += 3)
        for (std::size_t b = 0; b < sample.size(); b += 2) {
            c.expect(poly_rank(poly_mul(sample[a], sample[b])) == poly_rank(sample[a]) * poly_rank(sample[b]),
                     [&] { return "mul pair " + std::to_string(a) + "," + std::to_string(b); });
            c.expect(poly_rank(poly_shift(sample[a], b)) == poly_rank(sample[a]),
                     [&] { return "shift " + std::to_string(a); });
        }
    return std::move(c).finish();
}

std::vector<MotiveExpr> sample_exprs(std::int64_t max_n) {
    std::vector<MotiveExpr> out;
    out.push_back({});
    out.push_back({MotiveTerm{TateObject{}, 0}, MotiveTerm{TateObject{}, 3}});
    for (std::int64_t p : {2, 3})
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 2); ++n) {
            const DivisionContext ctx(p, n);
            const auto deg = static_cast<std::int64_t>(ctx.degree());
            for (std::int64_t i = 0; i <= deg; i += std::max<std::int64_t>(1, deg / 2)) {
                MotiveExpr e{MotiveTerm{SBProductObject(ctx, {i}), static_cast<std::uint64_t>(n)}};
                e.add(MotiveTerm{SBProductObject(ctx, {deg - i, i}), 1});
                out.push_back(e);
            }
        }
    return out;
}

bool same_context_or_tate(const MotiveExpr& a, const MotiveExpr& b) {
    std::vector<DivisionContext> seen;
    for (const auto* e : {&a, &b})
        for (const auto& [t, m] : e->terms())
            if (const auto* s = std::get_if<SBProductObject>(&t.object)) seen.push_back(s->context);
    return std::all_of(seen.begin(), seen.end(), [&](const DivisionContext& c) { return c == seen.front(); });
}

CheckResult poincare_homomorphism(std::int64_t max_n) {
    Check c("motive.poincare_is_homomorphism");
    const auto sample = sample_exprs(max_n);
    for (std::size_t a = 0; a < sample.size(); ++a) {
        const auto pa = split_poincare(sample[a]);
        for (std::uint64_t t : {0, 2, 5})
            c.expect(split_poincare(expr_twist(sample[a], t)) == poly_shift(pa, t),
                     [&] { return "twist " + std::to_string(a); });
        for (std::size_t b = 0; b < sample.size(); ++b) {
            const auto pb = split_poincare(sample[b]);
            c.expect(split_poincare(expr_sum(sample[a], sample[b])) == poly_add(pa, pb),
                     [&] { return "sum " + std::to_string(a) + "," + std::to_string(b); });
            if (same_context_or_tate(sample[a], sample[b]))
                c.expect(split_poincare(expr_product(sample[a], sample[b])) == poly_mul(pa, pb),
                         [&] { return "product " + std::to_string(a) + "," + std::to_string(b); });
        }
    }
    return std::move(c).finish();
}

CheckResult krull_schmidt_laws(std::int64_t max_n) {
    Check c("motive.krull_schmidt_equivalence");
    const auto sample = sample_exprs(max_n);
    for (std::size_t a = 0; a < sample.size(); ++a) {
        c.expect(krull_schmidt_equal(sample[a], sample[a]), [&] { return "reflexive " + std::to_string(a); });
        for (std::size_t b = 0; b < sample.size(); ++b) {
            const bool ab = krull_schmidt_equal(sample[a], sample[b]);
            c.expect(ab == krull_schmidt_equal(sample[b], sample[a]), [&] { return "symmetric"; });
            if (ab)
                c.expect(split_poincare(sample[a]) == split_poincare(sample[b]),
                         [&] { return "poincare " + std::to_string(a) + "," + std::to_string(b); });
        }
        // Reordering product factors and padding with points is invisible.
        MotiveExpr padded;
        for (const auto& [t, m] : sample[a].terms()) {
            auto obj = t.object;
            if (auto* s = std::get_if<SBProductObject>(&obj)) {
                std::reverse(s->dims.begin(), s->dims.end());
                s->dims.push_back(0);
            }
            padded.add(MotiveTerm{obj, t.twist}, m);
        }
        c.expect(krull_schmidt_equal(sample[a], padded), [&] { return "padding " + std::to_string(a); });
    }
    return std::move(c).finish();
}

CheckResult sbproduct_rank(std::int64_t max_n) {
    Check c("motive.sb_product_rank");
    for (std::int64_t p : {2, 3})
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 2); ++n) {
            const DivisionContext ctx(p, n);
            const auto deg = static_cast<std::int64_t>(ctx.degree());
            for (std::int64_t i = 0; i <= deg; ++i)
                for (std::int64_t j = 0; j <= deg; ++j) {
                    const auto poly = split_poincare(MotiveExpr{MotiveTerm{SBProductObject(ctx, {i, j}), 0}});
                    c.expect(poly_rank(poly) == binomial(deg, i) * binomial(deg, j),
                             [&] { return args({{"p", p}, {"n", n}, {"i", i}, {"j", j}}); });
                }
        }
    return std::move(c).finish();
}

CheckResult q_vandermonde(std::int64_t max_n) {
    Check c("severi_brauer.function_field_conservation");
    for (std::int64_t n = 1; n <= max_n; ++n)
        for (std::int64_t k = 1; k <= n; ++k) {
            const SBVariety v(DivisionContext(2, n), k);
            c.expect(split_poincare(function_field_decomposition(v)) ==
                         gaussian_binomial(std::int64_t{1} << n, std::int64_t{1} << k),
                     [&] { return args({{"n", n}, {"k", k}}); });
        }
    return std::move(c).finish();
}

CheckResult upper_lower(std::int64_t max_n) {
    Check c("severi_brauer.upper_lower_endpoints");
    for (std::int64_t n = 2; n <= max_n; ++n)
        for (std::int64_t k = 1; k < n; ++k) {
            const DivisionContext half(2, n - 1);
            const std::int64_t r = std::int64_t{1} << k;
            const auto report = identify_upper_lower(function_field_decomposition(SBVariety(DivisionContext(2, n), k)));
            const MotiveTerm upper{SBProductObject(half, {0, r}), 0};
            const MotiveTerm lower{SBProductObject(half, {r, 0}), std::uint64_t{1} << (n + k - 1)};
            c.expect(report.upper && *report.upper == upper, [&] { return "upper " + args({{"n", n}, {"k", k}}); });
            c.expect(report.lower && *report.lower == lower, [&] { return "lower " + args({{"n", n}, {"k", k}}); });
            const auto ends = sbc_endpoints(DivisionContext(2, n), k);
            c.expect(report.lower && BigInt(std::to_string(report.lower->twist)) == endpoint_twist(2, n, k) &&
                         ends.lower.twist == report.lower->twist,
                     [&] { return "endpoint twist " + args({{"n", n}, {"k", k}}); });
        }
    return std::move(c).finish();
}

CheckResult mu_duality(std::int64_t max_n) {
    Check c("severi_brauer.mu_matches_gaussian_coefficient");
    for (std::int64_t p : {2, 3})
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 3); ++n)
            for (std::int64_t k = 0; k <= n; ++k) {
                const SBVariety v(DivisionContext(p, n), k);
                const auto deg = static_cast<std::int64_t>(v.context.degree());
                const auto r = static_cast<std::int64_t>(v.reduced_dim());
                const auto g = gaussian_binomial(deg, r);
                const std::int64_t shift = deg + r * (deg - r);
                for (std::int64_t i = -1; i <= shift + 1; ++i) {
                    const auto target = shift - i;
                    const BigInt expected = target < 0 ? BigInt(0) : g.coefficient(static_cast<std::uint64_t>(target));
                    c.expect(mu(i, k, n, p) == expected, [&] { return args({{"p", p}, {"n", n}, {"k", k}, {"i", i}}); });
                }
            }
    return std::move(c).finish();
}

CheckResult chow_order_support(std::int64_t max_n) {
    Check c("severi_brauer.chow_order_support");
    for (std::int64_t p : {2, 3})
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 3); ++n)
            for (std::int64_t k = 0; k <= n; ++k) {
                const SBVariety v(DivisionContext(p, n), k);
                const auto deg = static_cast<std::int64_t>(v.context.degree());
                const auto capacity = static_cast<std::int64_t>(sb_dimension(v));
                for (std::int64_t i = 0; i <= static_cast<std::int64_t>(chow_degree_bound(v)); ++i) {
                    const auto rep = rational_chow_order(v, i);
                    const auto target = deg + capacity - (i + 1);
                    const bool inside = target >= 0 && target <= capacity;
                    c.expect((rep.group_order_exponent == 0) == !inside &&
                                 rep.literal_product == rep.summand_count * p &&
                                 rep.group_order_exponent == rep.summand_count,
                             [&] { return args({{"p", p}, {"n", n}, {"k", k}, {"i", i}}); });
                }
            }
    return std::move(c).finish();
}

CheckResult classifier() {
    Check c("severi_brauer.conjecture_classifier");
    for (std::uint64_t k = 1; k <= 30; ++k) {
        const bool four_odd = k % 4 == 0 && (k / 4) % 2 == 1 && squarefree(k / 4);
        const bool expect_covered = squarefree(k) || four_odd;
        const auto cls = conjecture_case_classifier(static_cast<std::int64_t>(k));
        c.expect(std::holds_alternative<Covered>(cls) == expect_covered,
                 [&] { return args({{"k", std::int64_t(k)}}); });
        c.expect(json::decode_classification(json::encode(cls)) == cls,
                 [&] { return "json " + args({{"k", std::int64_t(k)}}); });
    }
    return std::move(c).finish();
}

CheckResult obstruction(std::int64_t max_n) {
    Check c("type_calculus.dimension_obstruction");
    for (std::int64_t n = 1; n <= std::max<std::int64_t>(max_n, 10); ++n)
        for (std::int64_t k = 1; k <= n; ++k) {
            const auto o = dimension_obstruction(n, k);
            const BigInt lhs = big_pow(2, n + k - 1) - big_pow(2, 2 * k - 1);
            const BigInt rhs = big_pow(2, n + k - 1) - big_pow(2, 2 * k - 2);
            c.expect(o.holds && o.lhs == lhs && o.rhs == rhs, [&] { return args({{"n", n}, {"k", k}}); });
        }
    return std::move(c).finish();
}

CheckResult type_bounds(std::int64_t max_n) {
    Check c("type_calculus.type_bounds_and_replay");
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t n = 0; n <= max_n; ++n) {
            if (p == 5 && n > 8) continue;
            for (std::int64_t k = 0; k <= n; ++k) {
                const SBVariety v(DivisionContext(p, n), k);
                const auto tb = type_bound(v);
                const std::int64_t expected = p == 2 ? std::max<std::int64_t>(k - 2, -1) : k - 1;
                c.expect(tb.bound == expected, [&] { return args({{"p", p}, {"n", n}, {"k", k}}); });
                c.expect(replay(tb.trace), [&] { return "replay " + args({{"p", p}, {"n", n}, {"k", k}}); });
                c.expect(json::decode_trace(json::encode(tb.trace)) == tb.trace,
                         [&] { return "json " + args({{"p", p}, {"n", n}, {"k", k}}); });
            }
        }
    return std::move(c).finish();
}

CheckResult indecomposability(std::int64_t max_n) {
    Check c("type_calculus.sb2_indecomposable");
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const auto j = indecomposability_judgment(SBVariety(DivisionContext(2, n), 1));
        const auto* ind = std::get_if<IndecomposableMotive>(&j);
        c.expect(ind && replay(ind->trace), [&] { return args({{"n", n}}); });
    }
    return std::move(c).finish();
}

CheckResult rigidity_agreement(std::int64_t max_n) {
    Check c("type_calculus.rigidity_matches_classifier");
    for (std::uint64_t k = 1; k <= 30; ++k) {
        const bool covered = std::holds_alternative<Covered>(conjecture_case_classifier(static_cast<std::int64_t>(k)));
        for (const auto& f : factorize(k)) {
            // the p-primary part p^e of k is SB_{p^e}(D) with D p-primary, level e
            const auto e = static_cast<std::int64_t>(f.exponent);
            if (e > max_n) continue;
            const auto j = rigidity_judgment(SBVariety(DivisionContext(static_cast<std::int64_t>(f.prime), e), e));
            const bool part_blocks = f.prime == 2 ? f.exponent >= 3 : f.exponent >= 2;
            c.expect(std::holds_alternative<ConjectureHolds>(j) == !part_blocks,
                     [&] { return args({{"k", std::int64_t(k)}, {"p", std::int64_t(f.prime)}}); });
            if (covered) c.expect(std::holds_alternative<ConjectureHolds>(j), [&] { return "covered " + std::to_string(k); });
            if (const auto* h = std::get_if<ConjectureHolds>(&j))
                c.expect(replay(h->trace), [&] { return "replay " + std::to_string(k); });
        }
    }
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t n = 1; n <= max_n; ++n)
            for (std::int64_t k : {0, 1}) {
                const auto j = rigidity_judgment(SBVariety(DivisionContext(p, n), k));
                c.expect(std::holds_alternative<ConjectureHolds>(j), [&] { return args({{"p", p}, {"n", n}, {"k", k}}); });
            }
    return std::move(c).finish();
}

}  // namespace

VerifyReport run_identity_suite(std::int64_t max_n) {
    if (max_n < 1) throw DomainError("verify requires max_n >= 1");
    if (max_n > 7) throw DomainError("verify supports max_n <= 7");
    VerifyReport report;
    report.max_n = max_n;
    report.checks.push_back(gaussian_vs_enumeration());
    report.checks.push_back(gaussian_symmetry_and_rank());
    report.checks.push_back(count_vs_coefficient());
    report.checks.push_back(rank_laws());
    report.checks.push_back(poincare_homomorphism(max_n));
    report.checks.push_back(krull_schmidt_laws(max_n));
    report.checks.push_back(sbproduct_rank(max_n));
    report.checks.push_back(q_vandermonde(max_n));
    report.checks.push_back(upper_lower(max_n));
    report.checks.push_back(mu_duality(max_n));
    report.checks.push_back(chow_order_support(max_n));
    report.checks.push_back(classifier());
    report.checks.push_back(obstruction(max_n));
    report.checks.push_back(type_bounds(max_n));
    report.checks.push_back(indecomposability(max_n));
    report.checks.push_back(rigidity_agreement(max_n));
    return report;
}

}  // namespace sbm
