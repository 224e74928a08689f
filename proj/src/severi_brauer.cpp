#include "sbmotive/severi_brauer.hpp"

#include "sbmotive/errors.hpp"

namespace sbm {

SBVariety::SBVariety(DivisionContext ctx, std::int64_t level) : context(ctx), k(0) {
    if (level < 0 || static_cast<std::uint64_t>(level) > ctx.n())
        throw DomainError("level k = " + std::to_string(level) + " outside [0, " + std::to_string(ctx.n()) + "]");
    k = static_cast<std::uint64_t>(level);
}

std::uint64_t sb_dimension(const SBVariety& v) {
    const auto r = v.reduced_dim();
    return checked_mul(r, v.context.degree() - r);
}

BigInt mu(std::int64_t i, std::int64_t k, std::int64_t n, std::int64_t p) {
    const SBVariety v(DivisionContext(p, n), k);
    const auto max_part = v.reduced_dim();
    const auto parts = v.context.degree() - max_part;
    const auto capacity = checked_mul(parts, max_part);
    const auto shifted = checked_add(v.context.degree(), capacity);
    // target = shifted - i; shifted > capacity, so i <= 0 lands outside the box
    if (i <= 0 || static_cast<std::uint64_t>(i) > shifted) return 0;
    const auto target = shifted - static_cast<std::uint64_t>(i);
    if (target > capacity) return 0;
    return count_partitions_in_box({parts, max_part, target});
}

std::uint64_t chow_degree_bound(const SBVariety& v) {
    return checked_add(v.context.degree() - 1, sb_dimension(v));
}

ChowOrderReport rational_chow_order(const SBVariety& v, std::int64_t i) {
    const auto bound = chow_degree_bound(v);
    if (i < 0 || static_cast<std::uint64_t>(i) > bound)
        throw DomainError("degree i = " + std::to_string(i) + " outside [0, " + std::to_string(bound) + "]");
    ChowOrderReport r;
    r.i = i;
    r.summand_count = mu(i + 1, static_cast<std::int64_t>(v.k), static_cast<std::int64_t>(v.context.n()),
                         static_cast<std::int64_t>(v.context.p()));
    r.group_order_exponent = r.summand_count;
    r.literal_product = r.summand_count * BigInt(std::to_string(v.context.p()));
    return r;
}

MotiveExpr function_field_decomposition(const SBVariety& v) {
    if (v.context.p() != 2)
        throw UnsupportedError("function-field twists are only available for p = 2 (got p = " +
                               std::to_string(v.context.p()) + ")");
    if (v.context.n() == 0) throw DomainError("function_field_decomposition requires n >= 1");
    const DivisionContext half(2, static_cast<std::int64_t>(v.context.n() - 1));
    const std::uint64_t c_deg = half.degree();
    const std::uint64_t total = v.reduced_dim();

    MotiveExpr out;
    for (std::uint64_t i = 0; i <= total; ++i) {
        const std::uint64_t j = total - i;
        if (i > c_deg || j > c_deg) continue;
        SBProductObject obj(half, {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
        out.add(MotiveTerm{std::move(obj), checked_mul(i, c_deg - j)});
    }
    return out;
}

BigInt endpoint_twist(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
    return big_pow(p, n + k - 1) * BigInt(std::to_string(p - 1));
}

EndpointPair sbc_endpoints(const DivisionContext& ctx, std::int64_t k) {
    if (ctx.n() < 1) throw DomainError("sbc_endpoints requires n >= 1");
    if (k < 0 || static_cast<std::uint64_t>(k) >= ctx.n())
        throw DomainError("level k = " + std::to_string(k) + " outside [0, " + std::to_string(ctx.n() - 1) + "]");
    const DivisionContext half(static_cast<std::int64_t>(ctx.p()), static_cast<std::int64_t>(ctx.n() - 1));
    const auto twist = endpoint_twist(ctx.p(), ctx.n(), static_cast<std::uint64_t>(k));
    if (!twist.fits_ulong_p()) throw DomainError("endpoint twist exceeds 64 bits");
    return EndpointPair{MotiveTerm{UpperObject(half, k), 0},
                        MotiveTerm{UpperObject(half, k), twist.get_ui()}};
}

std::vector<PrimePower> factorize(std::uint64_t k) {
    std::vector<PrimePower> out;
    for (std::uint64_t q = 2; q <= k / q; ++q) {
        if (k % q) continue;
        PrimePower pp{q, 0, 1};
        while (k % q == 0) {
            k /= q;
            ++pp.exponent;
            pp.value *= q;
        }
        out.push_back(pp);
    }
    if (k > 1) out.push_back({k, 1, k});
    return out;
}

Classification conjecture_case_classifier(std::int64_t k) {
    if (k < 1) throw DomainError("conjecture_case_classifier requires k >= 1");
    const auto factors = factorize(static_cast<std::uint64_t>(k));

    const PrimePower* blocking = nullptr;
    bool squarefree = true;
    for (const auto& f : factors) {
        if (f.exponent > 1) squarefree = false;
        const bool blocks = f.prime == 2 ? f.exponent >= 3 : f.exponent >= 2;
        if (blocks && (!blocking || f.value < blocking->value)) blocking = &f;
    }
    if (blocking) return Open{*blocking};

    Covered c;
    c.reason = squarefree ? CoverageReason::Squarefree : CoverageReason::FourTimesOddSquarefree;
    if (!squarefree) c.odd_part = static_cast<std::uint64_t>(k) / 4;
    for (const auto& f : factors) {
        if (f.prime == 2 && f.exponent == 2)
            c.reductions.push_back({2, {4}});
        else
            c.reductions.push_back({f.prime, {1, f.prime}});
    }
    return c;
}

std::string to_string(CoverageReason r) {
    switch (r) {
        case CoverageReason::Squarefree: return "squarefree";
        case CoverageReason::FourTimesOddSquarefree: return "four_times_odd_squarefree";
    }
    return "unknown";
}

}  // namespace sbm
