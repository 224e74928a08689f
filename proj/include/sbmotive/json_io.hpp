#pragma once

#include <json.hpp>

#include "sbmotive/motive.hpp"
#include "sbmotive/severi_brauer.hpp"
#include "sbmotive/type_calculus.hpp"

namespace sbm::json {

// Wire formats. Every integer is a decimal string so values beyond 2^53
// survive JSON consumers; object key order is fixed for byte-stable output.
// Decoders throw DomainError on malformed input.

using Json = nlohmann::ordered_json;

/// {"<degree>": "<coefficient>", ...} in increasing degree.
Json encode(const GradedRankPoly& poly);
GradedRankPoly decode_poly(const Json& j);

Json encode(const MotiveObject& obj);
MotiveObject decode_object(const Json& j);

/// {"object": {...}, "twist": "t"}
Json encode(const MotiveTerm& term);
MotiveTerm decode_term(const Json& j);

/// [{"object": {...}, "twist": "t", "multiplicity": "m"}, ...] in canonical
/// term order (object kind, payload, twist).
Json encode(const MotiveExpr& expr);
MotiveExpr decode_expr(const Json& j);

/// {"i", "mu", "order_exponent", "paper_literal"}
Json encode(const ChowOrderReport& report);
ChowOrderReport decode_chow_report(const Json& j);

/// [{"rule_id", "citation", "side_conditions": {...}, "conclusion"}, ...]
Json encode(const ProofTrace& trace);
/// Rejects rule ids outside the catalog and citations that do not match it.
ProofTrace decode_trace(const Json& j);

Json encode(const Classification& c);
Classification decode_classification(const Json& j);

}  // namespace sbm::json
