#include "sbmotive/qpoly.hpp"

#include <algorithm>
#include <string>

#include "sbmotive/errors.hpp"

namespace sbm {

GradedRankPoly GradedRankPoly::from_signed(const std::map<std::int64_t, BigInt>& raw) {
    Terms terms;
    for (const auto& [deg, c] : raw) {
        if (deg < 0) throw DomainError("negative degree " + std::to_string(deg));
        if (c < 0) throw DomainError("negative coefficient at degree " + std::to_string(deg));
        if (c != 0) terms.emplace(static_cast<Degree>(deg), c);
    }
    return GradedRankPoly(std::move(terms));
}

GradedRankPoly GradedRankPoly::from_terms(Terms terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second < 0) throw DomainError("negative coefficient at degree " + std::to_string(it->first));
        it = (it->second == 0) ? terms.erase(it) : std::next(it);
    }
    return GradedRankPoly(std::move(terms));
}

GradedRankPoly GradedRankPoly::monomial(Degree degree, BigInt coeff) {
    Terms t;
    t.emplace(degree, std::move(coeff));
    return from_terms(std::move(t));
}

BigInt GradedRankPoly::coefficient(Degree degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? BigInt(0) : it->second;
}

GradedRankPoly::Degree GradedRankPoly::bottom_degree() const {
    if (is_zero()) throw DomainError("zero polynomial has no bottom degree");
    return terms_.begin()->first;
}

GradedRankPoly::Degree GradedRankPoly::top_degree() const {
    if (is_zero()) throw DomainError("zero polynomial has no top degree");
    return terms_.rbegin()->first;
}

GradedRankPoly poly_add(const GradedRankPoly& a, const GradedRankPoly& b) {
    auto terms = a.terms();
    for (const auto& [deg, c] : b.terms()) terms[deg] += c;
    return GradedRankPoly::from_terms(std::move(terms));
}

GradedRankPoly poly_mul(const GradedRankPoly& a, const GradedRankPoly& b) {
    GradedRankPoly::Terms terms;
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) terms[checked_add(da, db)] += ca * cb;
    return GradedRankPoly::from_terms(std::move(terms));
}

GradedRankPoly poly_shift(const GradedRankPoly& a, std::uint64_t t) {
    GradedRankPoly::Terms terms;
    for (const auto& [deg, c] : a.terms()) terms.emplace_hint(terms.end(), checked_add(deg, t), c);
    return GradedRankPoly::from_terms(std::move(terms));
}

std::int64_t poly_dim(const GradedRankPoly& a) {
    if (a.is_zero()) throw DomainError("dimension of the zero polynomial is undefined");
    return static_cast<std::int64_t>(a.top_degree() - a.bottom_degree());
}

BigInt poly_rank(const GradedRankPoly& a) {
    BigInt r = 0;
    for (const auto& [deg, c] : a.terms()) r += c;
    return r;
}

GradedRankPoly gaussian_binomial(std::int64_t d, std::int64_t k) {
    if (d < 0 || k < 0) throw DomainError("gaussian_binomial: negative argument");
    if (k > d) throw DomainError("gaussian_binomial: k = " + std::to_string(k) +
                                 " exceeds d = " + std::to_string(d));
    const auto kk = static_cast<std::size_t>(std::min(k, d - k));
    const auto top = checked_mul(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(d - k));

    // row[j] holds the dense coefficients of [m choose j] for the current m.
    std::vector<std::vector<BigInt>> row(kk + 1);
    row[0] = {1};
    for (std::int64_t m = 1; m <= d; ++m) {
        const auto jmax = std::min<std::size_t>(kk, static_cast<std::size_t>(m));
        for (std::size_t j = jmax; j >= 1; --j) {
            // [m, j] = [m-1, j-1] + q^j [m-1, j]
            auto& cur = row[j];
            const auto& prev = row[j - 1];
            std::vector<BigInt> next(std::max(prev.size(), cur.empty() ? 0 : cur.size() + j));
            for (std::size_t e = 0; e < prev.size(); ++e) next[e] += prev[e];
            for (std::size_t e = 0; e < cur.size(); ++e) next[e + j] += cur[e];
            cur = std::move(next);
        }
    }

    GradedRankPoly::Terms terms;
    const auto& dense = row[kk];
    for (std::size_t e = 0; e < dense.size(); ++e)
        if (dense[e] != 0) terms.emplace_hint(terms.end(), e, dense[e]);
    auto result = GradedRankPoly::from_terms(std::move(terms));
    if (result.top_degree() != top) throw std::logic_error("gaussian_binomial: degree mismatch");
    return result;
}

BigInt count_partitions_in_box(const PartitionBoxSpec& spec) {
    const std::uint64_t m = spec.parts;
    const std::uint64_t c = spec.max_part;
    const std::uint64_t capacity = checked_mul(m, c);
    if (spec.size > capacity) return 0;
    // Complementing each entry (x -> c - x, reversed) is a bijection onto
    // size capacity - s, so count the smaller side.
    const std::uint64_t s = std::min(spec.size, capacity - spec.size);
    if (s == 0) return 1;

    // ways[j][t]: partitions into exactly j nonzero parts (values 1..v seen
    // so far) of total t. Part values are added one at a time with
    // unbounded multiplicity.
    const std::uint64_t jmax = std::min(m, s);
    std::vector<std::vector<BigInt>> ways(jmax + 1, std::vector<BigInt>(s + 1));
    ways[0][0] = 1;
    for (std::uint64_t v = 1; v <= std::min(c, s); ++v)
        for (std::uint64_t j = 1; j <= jmax; ++j)
            for (std::uint64_t t = v; t <= s; ++t) ways[j][t] += ways[j - 1][t - v];

    BigInt total = 0;
    for (std::uint64_t j = 0; j <= jmax; ++j) total += ways[j][s];
    return total;
}

namespace {

void enumerate_rec(std::uint64_t remaining, std::uint64_t bound, std::uint64_t sum,
                   std::map<std::uint64_t, BigInt>& hist) {
    if (remaining == 0) {
        hist[sum] += 1;
        return;
    }
    for (std::uint64_t x = 0; x <= bound; ++x) enumerate_rec(remaining - 1, x, sum + x, hist);
}

}  // namespace

GradedRankPoly enumerate_box_partitions(std::uint64_t parts, std::uint64_t max_part) {
    std::map<std::uint64_t, BigInt> hist;
    enumerate_rec(parts, max_part, 0, hist);
    return GradedRankPoly::from_terms(std::move(hist));
}

}  // namespace sbm
