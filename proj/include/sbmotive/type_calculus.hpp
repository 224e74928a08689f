#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sbmotive/severi_brauer.hpp"

namespace sbm {

/**
 * Fixed catalog of inference rules used by the type calculus.
 *
 * A Severi-Brauer variety X = SB_{p^k}(D) is of type t when every
 * indecomposable summand of M(X) with F_p coefficients is either the upper
 * motive of X or a twist of some U_{l,D} with l <= t. Type -1 means only
 * the upper motive occurs.
 */
enum class Rule {
    CoefficientReduction,
    UpperMotiveBound,
    InductionBase,
    FunctionFieldSplit,
    EndpointTwist,
    InductionHypothesis,
    KrullSchmidtCases,
    DimensionObstruction,
    InductionStep,
    FloorAtMinusOne,
    Indecomposable,
    ClassicalCase,
    TypeZeroCriterion,
    NoClassicalTwist,
    RationalityPersistence,
};

struct RuleInfo {
    Rule rule;
    std::string_view id;
    std::string_view citation;
};

const std::vector<RuleInfo>& rule_catalog();
const RuleInfo& rule_info(Rule r);
/// DomainError on an id outside the catalog.
Rule rule_from_id(std::string_view id);

using SideCondition = std::pair<std::string, BigInt>;

struct ProofStep {
    Rule rule;
    std::vector<SideCondition> side_conditions;
    std::string conclusion;

    /// DomainError if the condition is absent.
    const BigInt& value(std::string_view name) const;

    friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct ProofTrace {
    std::vector<ProofStep> steps;
    friend bool operator==(const ProofTrace&, const ProofTrace&) = default;
};

/// Re-checks a step's numeric side conditions from the recorded values alone.
bool replay_step(const ProofStep& step);
bool replay(const ProofTrace& trace);

std::string render_trace(const ProofTrace& trace);

struct ObstructionCheck {
    BigInt lhs;  // dim SB_{2^{k-1}}(C) x SB_{2^{k-1}}(C) = 2^{n+k-1} - 2^{2k-1}
    BigInt rhs;  // dim U_{k-1,C} + U_{k-1,C}(2^{n+k-2}) = 2^{n+k-1} - 2^{2k-2}
    bool holds = false;
};

/// DomainError unless 1 <= k <= n.
ObstructionCheck dimension_obstruction(std::int64_t n, std::int64_t k);

struct TypeBound {
    SBVariety variety;
    std::int64_t bound;
    ProofTrace trace;
};

/// Best derivable upper bound on the type of v: k - 1 for every p, and
/// max(k - 2, -1) at p = 2 via induction on the degree exponent.
TypeBound type_bound(const SBVariety& v);

struct Unknown {
    std::int64_t bound;
    friend bool operator==(const Unknown&, const Unknown&) = default;
};

struct IndecomposableMotive {
    ProofTrace trace;
    friend bool operator==(const IndecomposableMotive&, const IndecomposableMotive&) = default;
};

struct ConjectureHolds {
    ProofTrace trace;
    friend bool operator==(const ConjectureHolds&, const ConjectureHolds&) = default;
};

using IndecomposabilityJudgment = std::variant<IndecomposableMotive, Unknown>;
using RigidityJudgment = std::variant<ConjectureHolds, Unknown>;

IndecomposabilityJudgment indecomposability_judgment(const SBVariety& v);
RigidityJudgment rigidity_judgment(const SBVariety& v);

std::string summarize(const IndecomposabilityJudgment& j);
std::string summarize(const RigidityJudgment& j);

}  // namespace sbm
