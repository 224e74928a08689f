#include "sbmotive/json_io.hpp"

#include "sbmotive/errors.hpp"

namespace sbm::json {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
    return j.at(key);
}

BigInt big_of(const Json& j) {
    if (!j.is_string()) throw DomainError("expected a decimal string, got " + j.dump());
    return parse_decimal(j.get<std::string>());
}

std::int64_t i64_of(const Json& j) {
    const auto v = big_of(j);
    if (!v.fits_slong_p()) throw DomainError("integer out of range: " + to_decimal(v));
    return v.get_si();
}

std::uint64_t u64_of(const Json& j) {
    const auto v = big_of(j);
    if (v < 0 || !v.fits_ulong_p()) throw DomainError("expected a nonnegative 64-bit integer: " + to_decimal(v));
    return v.get_ui();
}

struct ObjectEncoder {
    Json operator()(const TateObject&) const { return Json{{"kind", "tate"}}; }
    Json operator()(const UpperObject& u) const {
        return Json{{"kind", "upper"}, {"p", str(u.context.p())}, {"n", str(u.context.n())}, {"level", str(u.level)}};
    }
    Json operator()(const SBProductObject& s) const {
        Json dims = Json::array();
        for (auto d : s.dims) dims.push_back(str(d));
        return Json{{"kind", "sb_product"}, {"p", str(s.context.p())}, {"n", str(s.context.n())}, {"dims", dims}};
    }
};

}  // namespace

Json encode(const GradedRankPoly& poly) {
    Json j = Json::object();
    for (const auto& [deg, c] : poly.terms()) j[str(deg)] = to_decimal(c);
    return j;
}

GradedRankPoly decode_poly(const Json& j) {
    if (!j.is_object()) throw DomainError("polynomial must be a JSON object");
    std::map<std::int64_t, BigInt> raw;
    for (const auto& [key, value] : j.items()) {
        const auto deg = parse_decimal(key);
        if (!deg.fits_slong_p()) throw DomainError("degree out of range: " + key);
        if (!raw.emplace(deg.get_si(), big_of(value)).second) throw DomainError("duplicate degree " + key);
    }
    return GradedRankPoly::from_signed(raw);
}

Json encode(const MotiveObject& obj) { return std::visit(ObjectEncoder{}, obj); }

MotiveObject decode_object(const Json& j) {
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "tate") return TateObject{};
    const DivisionContext ctx(i64_of(field(j, "p")), i64_of(field(j, "n")));
    if (kind == "upper") return UpperObject(ctx, i64_of(field(j, "level")));
    if (kind == "sb_product") {
        const auto& dims = field(j, "dims");
        if (!dims.is_array()) throw DomainError("'dims' must be an array");
        std::vector<std::int64_t> raw;
        for (const auto& d : dims) raw.push_back(i64_of(d));
        return SBProductObject(ctx, std::move(raw));
    }
    throw DomainError("unknown object kind '" + kind + "'");
}

Json encode(const MotiveTerm& term) {
    return Json{{"object", encode(term.object)}, {"twist", str(term.twist)}};
}

MotiveTerm decode_term(const Json& j) {
    return MotiveTerm{decode_object(field(j, "object")), u64_of(field(j, "twist"))};
}

Json encode(const MotiveExpr& expr) {
    Json arr = Json::array();
    for (const auto& [term, m] : expr.terms())
        arr.push_back(Json{{"object", encode(term.object)}, {"twist", str(term.twist)}, {"multiplicity", str(m)}});
    return arr;
}

MotiveExpr decode_expr(const Json& j) {
    if (!j.is_array()) throw DomainError("motive expression must be a JSON array");
    MotiveExpr out;
    for (const auto& t : j) {
        const auto mult = u64_of(field(t, "multiplicity"));
        if (mult == 0) throw DomainError("multiplicity must be positive");
        out.add(MotiveTerm{decode_object(field(t, "object")), u64_of(field(t, "twist"))}, mult);
    }
    return out;
}

Json encode(const ChowOrderReport& r) {
    return Json{{"i", str(r.i)},
                {"mu", to_decimal(r.summand_count)},
                {"order_exponent", to_decimal(r.group_order_exponent)},
                {"paper_literal", to_decimal(r.literal_product)}};
}

ChowOrderReport decode_chow_report(const Json& j) {
    ChowOrderReport r;
    r.i = i64_of(field(j, "i"));
    r.summand_count = big_of(field(j, "mu"));
    r.group_order_exponent = big_of(field(j, "order_exponent"));
    r.literal_product = big_of(field(j, "paper_literal"));
    return r;
}

Json encode(const ProofTrace& trace) {
    Json arr = Json::array();
    for (const auto& s : trace.steps) {
        Json sc = Json::object();
        for (const auto& [name, v] : s.side_conditions) sc[name] = to_decimal(v);
        const auto& info = rule_info(s.rule);
        arr.push_back(Json{{"rule_id", std::string(info.id)},
                           {"citation", std::string(info.citation)},
                           {"side_conditions", sc},
                           {"conclusion", s.conclusion}});
    }
    return arr;
}

ProofTrace decode_trace(const Json& j) {
    if (!j.is_array()) throw DomainError("proof trace must be a JSON array");
    ProofTrace trace;
    for (const auto& s : j) {
        ProofStep st;
        st.rule = rule_from_id(field(s, "rule_id").get<std::string>());
        if (field(s, "citation").get<std::string>() != rule_info(st.rule).citation)
            throw DomainError("citation does not match the catalog entry for " + std::string(rule_info(st.rule).id));
        const auto& sc = field(s, "side_conditions");
        if (!sc.is_object()) throw DomainError("'side_conditions' must be an object");
        for (const auto& [name, v] : sc.items()) st.side_conditions.emplace_back(name, big_of(v));
        st.conclusion = field(s, "conclusion").get<std::string>();
        trace.steps.push_back(std::move(st));
    }
    return trace;
}

Json encode(const Classification& c) {
    if (const auto* open = std::get_if<Open>(&c)) {
        return Json{{"status", "open"},
                    {"blocking_factor", str(open->blocking.value)},
                    {"prime", str(open->blocking.prime)},
                    {"exponent", str(open->blocking.exponent)}};
    }
    const auto& cov = std::get<Covered>(c);
    Json j{{"status", "covered"}, {"reason", to_string(cov.reason)}};
    if (cov.reason == CoverageReason::FourTimesOddSquarefree) j["k_prime"] = str(cov.odd_part);
    Json reds = Json::array();
    for (const auto& r : cov.reductions) {
        Json dims = Json::array();
        for (auto d : r.reduced_dims) dims.push_back(str(d));
        reds.push_back(Json{{"prime", str(r.prime)}, {"reduced_dims", dims}});
    }
    j["reductions"] = reds;
    return j;
}

Classification decode_classification(const Json& j) {
    const auto status = field(j, "status").get<std::string>();
    if (status == "open") {
        return Open{PrimePower{u64_of(field(j, "prime")), u64_of(field(j, "exponent")),
                               u64_of(field(j, "blocking_factor"))}};
    }
    if (status != "covered") throw DomainError("unknown classification status '" + status + "'");
    Covered c;
    const auto reason = field(j, "reason").get<std::string>();
    if (reason == to_string(CoverageReason::Squarefree)) {
        c.reason = CoverageReason::Squarefree;
    } else if (reason == to_string(CoverageReason::FourTimesOddSquarefree)) {
        c.reason = CoverageReason::FourTimesOddSquarefree;
        c.odd_part = u64_of(field(j, "k_prime"));
    } else {
        throw DomainError("unknown coverage reason '" + reason + "'");
    }
    for (const auto& r : field(j, "reductions")) {
        PrimaryReduction red{u64_of(field(r, "prime")), {}};
        for (const auto& d : field(r, "reduced_dims")) red.reduced_dims.push_back(u64_of(d));
        c.reductions.push_back(std::move(red));
    }
    return c;
}

}  // namespace sbm::json
