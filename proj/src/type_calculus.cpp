#include "sbmotive/type_calculus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sbmotive/errors.hpp"

namespace sbm {

namespace {

// Citations state the rule being applied; they are fixed strings and the
// only citation text a trace may carry.
const std::vector<RuleInfo> kCatalog = {
    {Rule::CoefficientReduction, "coefficient-reduction",
     "Decompositions with coefficients in a field of characteristic p are determined by those with "
     "F_p coefficients; all judgments below are over F_p."},
    {Rule::UpperMotiveBound, "upper-motive-type-bound",
     "Upper motive theory: summands of M(SB_{p^k}(D)) are twists of U_{l,D} with l <= k, and U_{k,D} "
     "has maximal dimension and occurs only untwisted, once (Ch^0 has rank one); hence type k-1."},
    {Rule::InductionBase, "induction-base",
     "Base of the induction on the degree exponent: SB_{2^k} of an algebra of degree 2^k is a "
     "rational point, so the bound holds trivially."},
    {Rule::FunctionFieldSplit, "function-field-split",
     "Over the function field of SB_{2^{n-1}}(D), M(SB_{2^k}(D)) refines the sum over i+j=2^k of "
     "(SB_i(C) x SB_j(C))(i(2^{n-1}-j)), C of degree 2^{n-1}."},
    {Rule::EndpointTwist, "endpoint-twist",
     "Over that function field, U_{l,D} contains U_{l,C} + U_{l,C}(p^{n+l-1}(p-1)) as a summand "
     "(its upper and lower parts)."},
    {Rule::InductionHypothesis, "induction-hypothesis",
     "Induction hypothesis: SB_{2^k}(C) for the degree-2^{n-1} algebra C is of type k-2."},
    {Rule::KrullSchmidtCases, "krull-schmidt-cases",
     "Summands of SB_i(C) x SB_j(C) are twists of U_{l,C} with l <= v_2(gcd(i,j)); by Krull-Schmidt a "
     "twist of U_{k-1,C} lies in N(2^k,0), N(0,2^k) or N(2^{k-1},2^{k-1})."},
    {Rule::DimensionObstruction, "dimension-obstruction",
     "dim(SB_{2^{k-1}}(C) x SB_{2^{k-1}}(C)) = 2^{n+k-1}-2^{2k-1} is smaller than "
     "dim(U_{k-1,C} + U_{k-1,C}(2^{n+k-2})) = 2^{n+k-1}-2^{2k-2}, so the middle product cannot "
     "contain that summand."},
    {Rule::InductionStep, "induction-step",
     "No twist of U_{k-1,D} occurs in M(SB_{2^k}(D)); SB_{2^k}(D) is of type k-2."},
    {Rule::FloorAtMinusOne, "floor-at-minus-one",
     "Types below -1 carry no information: there is no U_l with l < 0."},
    {Rule::Indecomposable, "indecomposable",
     "Type -1 leaves only the upper motive; Ch^0 of rank one allows a single copy, so the motive is "
     "indecomposable (over any field of coefficients of characteristic p)."},
    {Rule::ClassicalCase, "classical-case",
     "The motive of SB_1(D) of a division algebra is indecomposable and stays so over every "
     "extension keeping D division."},
    {Rule::TypeZeroCriterion, "type-zero-criterion",
     "If X_E is of type 0 for every extension E with D_E division, decompositions of X lift over E."},
    {Rule::NoClassicalTwist, "no-classical-twist",
     "For 0 < k <= n, (U_{k,D})_E has no summand isomorphic to a twist of M(SB_1(D_E)) when D_E "
     "stays division."},
    {Rule::RationalityPersistence, "rationality-persistence",
     "E-rational cycles on SB_1(D) x SB_{p^k}(D) are F-rational when D_E stays division; the bounds "
     "depend only on (p, n, k), which E preserves."},
};

BigInt big(std::int64_t v) { return BigInt(std::to_string(v)); }
BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

BigInt pow2(const BigInt& e) {
    if (e < 0 || !e.fits_ulong_p()) throw DomainError("exponent out of range");
    return big_pow(2, e.get_ui());
}

ProofStep step(Rule r, std::vector<SideCondition> sc, std::string conclusion) {
    return ProofStep{r, std::move(sc), std::move(conclusion)};
}

std::string sb_name(const std::string& reduced, const std::string& exponent) {
    return "SB_" + reduced + " over an algebra of degree 2^" + exponent;
}

// 2-adic valuation of gcd(a, b), with gcd(0, b) = b.
std::uint64_t v2_gcd(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t v = 0;
    while (g && g % 2 == 0) {
        g /= 2;
        ++v;
    }
    return v;
}

bool small_nonneg(const BigInt& v, unsigned long limit) { return v >= 0 && v.fits_ulong_p() && v.get_ui() <= limit; }

}  // namespace

const std::vector<RuleInfo>& rule_catalog() { return kCatalog; }

const RuleInfo& rule_info(Rule r) {
    for (const auto& info : kCatalog)
        if (info.rule == r) return info;
    throw std::logic_error("rule missing from catalog");
}

Rule rule_from_id(std::string_view id) {
    for (const auto& info : kCatalog)
        if (info.id == id) return info.rule;
    throw DomainError("unknown rule id '" + std::string(id) + "'");
}

const BigInt& ProofStep::value(std::string_view name) const {
    for (const auto& [key, v] : side_conditions)
        if (key == name) return v;
    throw DomainError("side condition '" + std::string(name) + "' missing from step " +
                      std::string(rule_info(rule).id));
}

bool replay_step(const ProofStep& s) {
    try {
        switch (s.rule) {
            case Rule::CoefficientReduction: {
                const auto& p = s.value("p");
                return p.fits_ulong_p() && is_prime(p.get_ui());
            }
            case Rule::UpperMotiveBound: {
                const auto &p = s.value("p"), &n = s.value("n"), &k = s.value("k");
                return p.fits_ulong_p() && is_prime(p.get_ui()) && k >= 0 && k <= n &&
                       s.value("bound") == k - 1;
            }
            case Rule::InductionBase: {
                const auto &m = s.value("n"), &k = s.value("k");
                if (!small_nonneg(k, 62) || m != k) return false;
                const BigInt r = pow2(k);
                return s.value("dim") == r * (pow2(m) - r) && s.value("dim") == 0;
            }
            case Rule::FunctionFieldSplit: {
                const auto &m = s.value("n"), &k = s.value("k");
                if (!small_nonneg(m, 62) || k < 1 || k > m - 1) return false;
                if (s.value("c_exponent") != m - 1) return false;
                const BigInt half = pow2(m - 1);
                const BigInt total = pow2(k);
                auto twist = [&](const BigInt& i, const BigInt& j) -> BigInt { return i * (half - j); };
                // every pair i + j = 2^k fits when 2^k <= 2^{n-1}
                return s.value("terms") == total + 1 && s.value("twist_0_2k") == twist(0, total) &&
                       s.value("twist_2k_0") == twist(total, 0) &&
                       s.value("twist_mid") == twist(total / 2, total / 2) &&
                       s.value("twist_2k_0") == pow2(m + k - 1);
            }
            case Rule::EndpointTwist: {
                const auto &p = s.value("p"), &m = s.value("n"), &l = s.value("level");
                if (!p.fits_ulong_p() || !is_prime(p.get_ui()) || l < 0 || l > m - 1) return false;
                if (!small_nonneg(m + l - 1, 1u << 20)) return false;
                BigInt expected = big_pow(p.get_ui(), BigInt(m + l - 1).get_ui()) * (p - 1);
                return s.value("lower_twist") == expected;
            }
            case Rule::InductionHypothesis: {
                const auto &c = s.value("c_exponent"), &k = s.value("k");
                return k >= 1 && k <= c && s.value("bound") == k - 2;
            }
            case Rule::KrullSchmidtCases: {
                const auto& k = s.value("k");
                if (!small_nonneg(k, 20) || k < 1) return false;
                const std::uint64_t kk = k.get_ui();
                const std::uint64_t total = std::uint64_t{1} << kk;
                std::uint64_t candidates = 0;
                for (std::uint64_t i = 0; i <= total; ++i)
                    if (v2_gcd(i, total - i) >= kk - 1) ++candidates;
                return s.value("candidates") == big(candidates) && candidates == 3;
            }
            case Rule::DimensionObstruction: {
                const auto &m = s.value("n"), &k = s.value("k");
                if (!small_nonneg(m, 1u << 16) || k < 1 || k > m) return false;
                const auto &lhs = s.value("lhs"), &rhs = s.value("rhs");
                return lhs == pow2(m + k - 1) - pow2(2 * k - 1) && rhs == pow2(m + k - 1) - pow2(2 * k - 2) &&
                       lhs < rhs;
            }
            case Rule::InductionStep: {
                const auto &m = s.value("n"), &k = s.value("k");
                return k >= 1 && k <= m && s.value("bound") == k - 2;
            }
            case Rule::FloorAtMinusOne: {
                const auto &raw = s.value("raw_bound"), &b = s.value("bound");
                return b == (raw < -1 ? BigInt(-1) : raw);
            }
            case Rule::Indecomposable:
                return s.value("bound") <= -1 && s.value("ch0_rank") == 1;
            case Rule::ClassicalCase:
                return s.value("k") == 0;
            case Rule::TypeZeroCriterion:
                return s.value("bound") <= 0;
            case Rule::NoClassicalTwist: {
                const auto &n = s.value("n"), &k = s.value("k");
                return k > 0 && k <= n;
            }
            case Rule::RationalityPersistence: {
                const auto &p = s.value("p"), &n = s.value("n"), &k = s.value("k");
                return p.fits_ulong_p() && is_prime(p.get_ui()) && k >= 0 && k <= n;
            }
        }
    } catch (const DomainError&) {
        return false;
    }
    return false;
}

bool replay(const ProofTrace& trace) {
    return std::all_of(trace.steps.begin(), trace.steps.end(), replay_step);
}

std::string render_trace(const ProofTrace& trace) {
    std::ostringstream os;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        os << "[" << (i + 1) << "] " << rule_info(s.rule).id;
        if (!s.side_conditions.empty()) {
            os << " {";
            for (std::size_t j = 0; j < s.side_conditions.size(); ++j)
                os << (j ? ", " : "") << s.side_conditions[j].first << "=" << to_decimal(s.side_conditions[j].second);
            os << "}";
        }
        os << "\n    " << s.conclusion << "\n    by: " << rule_info(s.rule).citation << "\n";
    }
    return os.str();
}

ObstructionCheck dimension_obstruction(std::int64_t n, std::int64_t k) {
    if (k < 1 || k > n)
        throw DomainError("dimension_obstruction requires 1 <= k <= n (got n = " + std::to_string(n) +
                          ", k = " + std::to_string(k) + ")");
    ObstructionCheck c;
    c.lhs = pow2(big(n + k - 1)) - pow2(big(2 * k - 1));
    c.rhs = pow2(big(n + k - 1)) - pow2(big(2 * k - 2));
    c.holds = c.lhs < c.rhs;
    return c;
}

namespace {

// Replays the induction on the degree exponent for SB_{2^k}, from the
// degree-2^k algebra (a point) up to degree 2^n.
void append_two_primary_induction(std::uint64_t n, std::uint64_t k, ProofTrace& trace) {
    const auto ks = std::to_string(k);
    trace.steps.push_back(step(Rule::InductionBase, {{"n", big(k)}, {"k", big(k)}, {"dim", 0}},
                               sb_name("{2^" + ks + "}", ks) + " is a point: clear"));

    for (std::uint64_t m = k + 1; m <= n; ++m) {
        const auto ms = std::to_string(m);
        const auto ml = std::to_string(m - 1);
        const SBVariety current(DivisionContext(2, static_cast<std::int64_t>(m)), static_cast<std::int64_t>(k));
        const auto split = function_field_decomposition(current);
        const BigInt half = pow2(big(m - 1));
        const BigInt total = pow2(big(k));
        trace.steps.push_back(step(Rule::FunctionFieldSplit,
                                   {{"n", big(m)},
                                    {"k", big(k)},
                                    {"c_exponent", big(m - 1)},
                                    {"terms", big(split.size())},
                                    {"twist_0_2k", 0},
                                    {"twist_2k_0", total * half},
                                    {"twist_mid", (total / 2) * (half - total / 2)}},
                                   "M(" + sb_name("{2^" + ks + "}", ms) + ") splits into " +
                                       std::to_string(split.size()) + " twisted products over C of degree 2^" + ml));

        const auto lower = endpoint_twist(2, m, k - 1);
        trace.steps.push_back(step(Rule::EndpointTwist,
                                   {{"p", 2}, {"n", big(m)}, {"level", big(k - 1)}, {"lower_twist", lower}},
                                   "a twist of U_{" + std::to_string(k - 1) + ",D} would give U_{" +
                                       std::to_string(k - 1) + ",C} + U_{" + std::to_string(k - 1) + ",C}(" +
                                       to_decimal(lower) + ")"));

        trace.steps.push_back(step(Rule::InductionHypothesis,
                                   {{"c_exponent", big(m - 1)}, {"k", big(k)}, {"bound", big(std::int64_t(k) - 2)}},
                                   sb_name("{2^" + ks + "}", ml) + " is of type " + std::to_string(std::int64_t(k) - 2) +
                                       ", so N(2^k,0) = N(0,2^k) contain no twist of U_{k-1,C}"));

        trace.steps.push_back(step(Rule::KrullSchmidtCases, {{"k", big(k)}, {"candidates", 3}},
                                   "the summand must lie in N(" + std::to_string(total.get_ui() / 2) + "," +
                                       std::to_string(total.get_ui() / 2) + ")"));

        const auto obs = dimension_obstruction(static_cast<std::int64_t>(m), static_cast<std::int64_t>(k));
        trace.steps.push_back(step(Rule::DimensionObstruction,
                                   {{"n", big(m)}, {"k", big(k)}, {"lhs", obs.lhs}, {"rhs", obs.rhs}},
                                   to_decimal(obs.lhs) + " < " + to_decimal(obs.rhs) + ": contradiction"));

        trace.steps.push_back(step(Rule::InductionStep,
                                   {{"n", big(m)}, {"k", big(k)}, {"bound", big(std::int64_t(k) - 2)}},
                                   sb_name("{2^" + ks + "}", ms) + " is of type " + std::to_string(std::int64_t(k) - 2)));
    }
}

}  // namespace

TypeBound type_bound(const SBVariety& v) {
    const auto p = v.context.p();
    const auto n = v.context.n();
    const auto k = v.k;
    const auto ki = static_cast<std::int64_t>(k);

    ProofTrace trace;
    trace.steps.push_back(step(Rule::CoefficientReduction, {{"p", big(p)}}, "work in CM(F; F_" + std::to_string(p) + ")"));
    trace.steps.push_back(step(Rule::UpperMotiveBound,
                               {{"p", big(p)}, {"n", big(n)}, {"k", big(k)}, {"bound", big(ki - 1)}},
                               "SB_{" + std::to_string(p) + "^" + std::to_string(k) + "}(D) is of type " +
                                   std::to_string(ki - 1)));
    std::int64_t bound = ki - 1;

    if (p == 2 && k >= 1) {
        append_two_primary_induction(n, k, trace);
        const std::int64_t raw = ki - 2;
        bound = std::max<std::int64_t>(raw, -1);
        trace.steps.push_back(step(Rule::FloorAtMinusOne, {{"k", big(k)}, {"raw_bound", big(raw)}, {"bound", big(bound)}},
                                   "type bound " + std::to_string(bound)));
    }
    return TypeBound{v, bound, std::move(trace)};
}

IndecomposabilityJudgment indecomposability_judgment(const SBVariety& v) {
    auto tb = type_bound(v);
    if (tb.bound > -1) return Unknown{tb.bound};
    tb.trace.steps.push_back(step(Rule::Indecomposable, {{"bound", big(tb.bound)}, {"ch0_rank", 1}},
                                  "M(SB_{" + std::to_string(v.context.p()) + "^" + std::to_string(v.k) +
                                      "}(D)) is indecomposable"));
    return IndecomposableMotive{std::move(tb.trace)};
}

RigidityJudgment rigidity_judgment(const SBVariety& v) {
    auto tb = type_bound(v);
    if (tb.bound > 0) return Unknown{tb.bound};
    const auto p = big(v.context.p());
    const auto n = big(v.context.n());
    const auto k = big(v.k);
    auto& steps = tb.trace.steps;
    steps.push_back(step(Rule::RationalityPersistence, {{"p", p}, {"n", n}, {"k", k}},
                         "the bound " + std::to_string(tb.bound) + " holds over every E with D_E division"));
    if (v.k == 0)
        steps.push_back(step(Rule::ClassicalCase, {{"k", 0}}, "M(SB_1(D_E)) is indecomposable"));
    else
        steps.push_back(step(Rule::NoClassicalTwist, {{"n", n}, {"k", k}},
                             "(U_{" + to_decimal(k) + ",D})_E contains no twist of M(SB_1(D_E))"));
    steps.push_back(step(Rule::TypeZeroCriterion, {{"bound", big(tb.bound)}},
                         "motivic decompositions of SB_{" + to_decimal(p) + "^" + to_decimal(k) + "}(D) lift"));
    return ConjectureHolds{std::move(tb.trace)};
}

std::string summarize(const IndecomposabilityJudgment& j) {
    if (std::holds_alternative<IndecomposableMotive>(j)) return "INDECOMPOSABLE";
    return "UNKNOWN (type bound " + std::to_string(std::get<Unknown>(j).bound) + ")";
}

std::string summarize(const RigidityJudgment& j) {
    if (std::holds_alternative<ConjectureHolds>(j)) return "RIGID (decompositions lift)";
    return "UNKNOWN (type bound " + std::to_string(std::get<Unknown>(j).bound) + ")";
}

}  // namespace sbm
