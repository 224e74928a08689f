#include "sbmotive/motive.hpp"

#include <algorithm>
#include <sstream>

#include "sbmotive/errors.hpp"

namespace sbm {

DivisionContext::DivisionContext(std::int64_t p, std::int64_t n) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (n < 0) throw DomainError("exponent n = " + std::to_string(n) + " is negative");
    p_ = static_cast<std::uint64_t>(p);
    n_ = static_cast<std::uint64_t>(n);
    degree_ = checked_pow(p_, n_);
}

std::uint64_t DivisionContext::reduced_dim(std::uint64_t level) const {
    if (level > n_)
        throw DomainError("level " + std::to_string(level) + " exceeds exponent " + std::to_string(n_));
    return checked_pow(p_, level);
}

UpperObject::UpperObject(DivisionContext ctx, std::int64_t lvl) : context(ctx), level(0) {
    if (lvl < 0 || static_cast<std::uint64_t>(lvl) > ctx.n())
        throw DomainError("upper motive level " + std::to_string(lvl) + " outside [0, " +
                          std::to_string(ctx.n()) + "]");
    level = static_cast<std::uint64_t>(lvl);
}

SBProductObject::SBProductObject(DivisionContext ctx, std::vector<std::int64_t> raw) : context(ctx) {
    dims.reserve(raw.size());
    for (auto d : raw) {
        if (d < 0 || static_cast<std::uint64_t>(d) > ctx.degree())
            throw DomainError("reduced dimension " + std::to_string(d) + " outside [0, " +
                              std::to_string(ctx.degree()) + "]");
        dims.push_back(static_cast<std::uint64_t>(d));
    }
}

namespace {

struct Normalizer {
    MotiveObject operator()(const TateObject& t) const { return t; }

    MotiveObject operator()(const UpperObject& u) const {
        if (u.level == u.context.n()) return TateObject{};
        if (u.level == 0) return (*this)(SBProductObject(u.context, {1}));
        return u;
    }

    MotiveObject operator()(const SBProductObject& s) const {
        SBProductObject out = s;
        std::erase_if(out.dims, [&](std::uint64_t d) { return d == 0 || d == s.context.degree(); });
        if (out.dims.empty()) return TateObject{};
        std::sort(out.dims.begin(), out.dims.end());
        return out;
    }
};

struct Describer {
    std::string operator()(const TateObject&) const { return "Tate"; }
    std::string operator()(const UpperObject& u) const {
        std::ostringstream os;
        os << "U(p=" << u.context.p() << ",n=" << u.context.n() << ",k=" << u.level << ")";
        return os.str();
    }
    std::string operator()(const SBProductObject& s) const {
        std::ostringstream os;
        os << "SB(p=" << s.context.p() << ",n=" << s.context.n() << ",[";
        for (std::size_t i = 0; i < s.dims.size(); ++i) os << (i ? "," : "") << s.dims[i];
        os << "])";
        return os.str();
    }
};

}  // namespace

MotiveObject normalize(const MotiveObject& obj) { return std::visit(Normalizer{}, obj); }

std::string describe(const MotiveObject& obj) { return std::visit(Describer{}, obj); }

std::string describe(const MotiveTerm& term) {
    return describe(term.object) + "(" + std::to_string(term.twist) + ")";
}

MotiveExpr::MotiveExpr(std::initializer_list<MotiveTerm> terms) {
    for (const auto& t : terms) add(t);
}

void MotiveExpr::add(MotiveTerm term, std::uint64_t multiplicity) {
    if (multiplicity == 0) return;
    auto& slot = terms_[std::move(term)];
    slot = checked_add(slot, multiplicity);
}

std::uint64_t MotiveExpr::multiplicity(const MotiveTerm& term) const {
    auto it = terms_.find(term);
    return it == terms_.end() ? 0 : it->second;
}

std::uint64_t MotiveExpr::size() const {
    std::uint64_t total = 0;
    for (const auto& [t, m] : terms_) total = checked_add(total, m);
    return total;
}

MotiveExpr MotiveExpr::normalized() const {
    MotiveExpr out;
    for (const auto& [t, m] : terms_) out.add(MotiveTerm{normalize(t.object), t.twist}, m);
    return out;
}

MotiveExpr expr_sum(const MotiveExpr& a, const MotiveExpr& b) {
    MotiveExpr out = a;
    for (const auto& [t, m] : b.terms()) out.add(t, m);
    return out;
}

MotiveExpr expr_twist(const MotiveExpr& a, std::uint64_t t) {
    MotiveExpr out;
    for (const auto& [term, m] : a.terms()) out.add(MotiveTerm{term.object, checked_add(term.twist, t)}, m);
    return out;
}

namespace {

MotiveObject object_product(const MotiveObject& x, const MotiveObject& y) {
    for (const auto* o : {&x, &y})
        if (std::holds_alternative<UpperObject>(*o))
            throw UnsupportedError("product with upper motive " + describe(*o) +
                                   " is not defined at the split level");
    if (std::holds_alternative<TateObject>(x)) return y;
    if (std::holds_alternative<TateObject>(y)) return x;
    const auto& sx = std::get<SBProductObject>(x);
    const auto& sy = std::get<SBProductObject>(y);
    if (!(sx.context == sy.context))
        throw DomainError("product of " + describe(x) + " and " + describe(y) +
                          " mixes different algebras");
    SBProductObject out = sx;
    out.dims.insert(out.dims.end(), sy.dims.begin(), sy.dims.end());
    return out;
}

}  // namespace

MotiveExpr expr_product(const MotiveExpr& a, const MotiveExpr& b) {
    MotiveExpr out;
    for (const auto& [ta, ma] : a.terms())
        for (const auto& [tb, mb] : b.terms())
            out.add(MotiveTerm{object_product(ta.object, tb.object), checked_add(ta.twist, tb.twist)},
                    checked_mul(ma, mb));
    return out;
}

bool krull_schmidt_equal(const MotiveExpr& a, const MotiveExpr& b) {
    return a.normalized() == b.normalized();
}

namespace {

class PoincareEvaluator {
public:
    GradedRankPoly operator()(const MotiveObject& obj) {
        const auto norm = normalize(obj);
        if (std::holds_alternative<TateObject>(norm)) return GradedRankPoly::monomial(0);
        if (const auto* u = std::get_if<UpperObject>(&norm))
            throw UnsupportedError("split Poincare polynomial of opaque upper motive " + describe(*u) +
                                   " is not determined");
        const auto& s = std::get<SBProductObject>(norm);
        auto result = GradedRankPoly::monomial(0);
        for (auto d : s.dims) result = poly_mul(result, gaussian(s.context.degree(), d));
        return result;
    }

private:
    const GradedRankPoly& gaussian(std::uint64_t deg, std::uint64_t k) {
        auto key = std::pair{deg, k};
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, gaussian_binomial(static_cast<std::int64_t>(deg),
                                                       static_cast<std::int64_t>(k))).first;
        return it->second;
    }

    std::map<std::pair<std::uint64_t, std::uint64_t>, GradedRankPoly> cache_;
};

}  // namespace

GradedRankPoly split_poincare(const MotiveObject& obj) { return PoincareEvaluator{}(obj); }

GradedRankPoly split_poincare(const MotiveExpr& a) {
    PoincareEvaluator eval;
    GradedRankPoly total;
    for (const auto& [term, m] : a.terms()) {
        GradedRankPoly piece;
        try {
            piece = eval(term.object);
        } catch (const UnsupportedError&) {
            throw UnsupportedError("split Poincare polynomial undefined for term " + describe(term) +
                                   ": upper motive is opaque");
        }
        piece = poly_shift(piece, term.twist);
        if (m != 1) piece = poly_mul(piece, GradedRankPoly::monomial(0, BigInt(std::to_string(m))));
        total = poly_add(total, piece);
    }
    return total;
}

std::uint64_t dim_upper_motive(const DivisionContext& ctx, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > ctx.n())
        throw DomainError("level k = " + std::to_string(k) + " outside [0, " + std::to_string(ctx.n()) + "]");
    const auto r = ctx.reduced_dim(static_cast<std::uint64_t>(k));
    return checked_mul(r, ctx.degree() - r);
}

UpperLowerReport identify_upper_lower(const MotiveExpr& a) {
    if (a.is_zero()) throw DomainError("identify_upper_lower: zero motive has no summands");
    struct Span {
        const MotiveTerm* term;
        std::uint64_t mult;
        std::uint64_t bottom;
        std::uint64_t top;
    };
    std::vector<Span> spans;
    for (const auto& [term, m] : a.terms()) {
        const auto poly = poly_shift(split_poincare(term.object), term.twist);
        spans.push_back({&term, m, poly.bottom_degree(), poly.top_degree()});
    }
    std::uint64_t global_bottom = spans.front().bottom;
    std::uint64_t global_top = spans.front().top;
    for (const auto& s : spans) {
        global_bottom = std::min(global_bottom, s.bottom);
        global_top = std::max(global_top, s.top);
    }

    UpperLowerReport report;
    const MotiveTerm* upper = nullptr;
    const MotiveTerm* lower = nullptr;
    for (const auto& s : spans) {
        if (s.bottom == global_bottom) {
            report.upper_candidates += s.mult;
            upper = s.term;
        }
        if (s.top == global_top) {
            report.lower_candidates += s.mult;
            lower = s.term;
        }
    }
    if (report.upper_candidates == 1) report.upper = *upper;
    if (report.lower_candidates == 1) report.lower = *lower;
    return report;
}

}  // namespace sbm
