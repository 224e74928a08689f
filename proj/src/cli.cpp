#include "sbmotive/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "sbmotive/errors.hpp"
#include "sbmotive/json_io.hpp"
#include "sbmotive/severi_brauer.hpp"
#include "sbmotive/type_calculus.hpp"
#include "sbmotive/verify.hpp"

namespace sbm::cli {

namespace {

using json::Json;

enum class Format { Text, Json, Csv };

struct OutputConfig {
    Format format = Format::Text;
    bool trace = false;
    std::string out_path;
};

// Raised for argument problems detected after parsing (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
    std::string line;
    bool first = true;
    for (const auto& f : fields) {
        line += (first ? "" : ",") + csv_field(f);
        first = false;
    }
    return line + "\n";
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string str(std::int64_t v) { return std::to_string(v); }

std::string poly_text(const GradedRankPoly& poly) {
    if (poly.is_zero()) return "0";
    std::string s;
    for (const auto& [deg, c] : poly.terms()) {
        if (!s.empty()) s += " + ";
        const bool unit = c == 1 && deg != 0;
        if (!unit) s += to_decimal(c);
        if (deg == 1) s += "q";
        if (deg > 1) s += "q^" + std::to_string(deg);
    }
    return s;
}

std::string order_text(std::uint64_t p, const BigInt& exponent) {
    if (exponent == 0) return "1";
    return std::to_string(p) + "^" + to_decimal(exponent);
}

void require_prime(std::int64_t p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw UsageError("--p " + std::to_string(p) + " is not a prime");
}

void require_nonneg(std::int64_t v, const char* name) {
    if (v < 0) throw UsageError(std::string(name) + " must be nonnegative");
}

std::string cmd_gaussian(std::int64_t d, std::int64_t k, const OutputConfig& cfg) {
    const auto g = gaussian_binomial(d, k);
    switch (cfg.format) {
        case Format::Json: return dump(json::encode(g));
        case Format::Csv: {
            std::string s = csv_row({"degree", "coefficient"});
            for (const auto& [deg, c] : g.terms()) s += csv_row({std::to_string(deg), to_decimal(c)});
            return s;
        }
        case Format::Text: break;
    }
    std::ostringstream os;
    os << "[" << d << " choose " << k << "]_q = " << poly_text(g) << "\n";
    os << "dim " << poly_dim(g) << ", rank " << to_decimal(poly_rank(g)) << "\n";
    return os.str();
}

std::string cmd_mu(std::int64_t p, std::int64_t n, std::int64_t k, std::optional<std::int64_t> only_i,
                   const OutputConfig& cfg) {
    const SBVariety v(DivisionContext(p, n), k);
    std::vector<std::pair<std::int64_t, BigInt>> rows;
    if (only_i) {
        rows.emplace_back(*only_i, mu(*only_i, k, n, p));
    } else {
        // mu^i vanishes outside [p^n, p^n + capacity]
        const auto lo = static_cast<std::int64_t>(v.context.degree());
        const auto hi = lo + static_cast<std::int64_t>(sb_dimension(v));
        for (std::int64_t i = lo; i <= hi; ++i) rows.emplace_back(i, mu(i, k, n, p));
    }
    switch (cfg.format) {
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& [i, m] : rows) arr.push_back(Json{{"i", str(i)}, {"mu", to_decimal(m)}});
            return dump(Json{{"p", str(p)}, {"n", str(n)}, {"k", str(k)}, {"rows", arr}});
        }
        case Format::Csv: {
            std::string s = csv_row({"i", "mu"});
            for (const auto& [i, m] : rows) s += csv_row({str(i), to_decimal(m)});
            return s;
        }
        case Format::Text: break;
    }
    std::ostringstream os;
    os << "mu^i_{k,n} for p=" << p << " n=" << n << " k=" << k << " (" << (v.context.degree() - v.reduced_dim())
       << " parts <= " << v.reduced_dim() << ")\n";
    for (const auto& [i, m] : rows) os << "  i=" << i << "  mu=" << to_decimal(m) << "\n";
    return os.str();
}

std::string cmd_chow_order(std::int64_t p, std::int64_t n, std::int64_t k, const OutputConfig& cfg) {
    const SBVariety v(DivisionContext(p, n), k);
    std::vector<ChowOrderReport> rows;
    for (std::int64_t i = 0; i <= static_cast<std::int64_t>(chow_degree_bound(v)); ++i)
        rows.push_back(rational_chow_order(v, i));
    switch (cfg.format) {
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& r : rows) arr.push_back(json::encode(r));
            return dump(Json{{"p", str(p)}, {"n", str(n)}, {"k", str(k)}, {"rows", arr}});
        }
        case Format::Csv: {
            std::string s = csv_row({"i", "mu", "order_exponent", "paper_literal"});
            for (const auto& r : rows)
                s += csv_row({str(r.i), to_decimal(r.summand_count), to_decimal(r.group_order_exponent),
                              to_decimal(r.literal_product)});
            return s;
        }
        case Format::Text: break;
    }
    std::ostringstream os;
    os << "rational cycles on SB_1(D) x SB_" << v.reduced_dim() << "(D), deg D = " << v.context.degree() << "\n";
    os << "  i  mu(i+1)  order  mu(i+1)*p\n";
    for (const auto& r : rows)
        os << "  " << r.i << "  " << to_decimal(r.summand_count) << "  "
           << order_text(v.context.p(), r.group_order_exponent) << "  " << to_decimal(r.literal_product) << "\n";
    return os.str();
}

std::string cmd_decompose(std::int64_t p, std::int64_t n, std::int64_t k, const OutputConfig& cfg) {
    const SBVariety v(DivisionContext(p, n), k);
    const auto expr = function_field_decomposition(v);
    const auto poincare = split_poincare(expr);
    const auto expected = gaussian_binomial(static_cast<std::int64_t>(v.context.degree()),
                                            static_cast<std::int64_t>(v.reduced_dim()));
    const bool conserved = poincare == expected;
    const auto ends = identify_upper_lower(expr);
    switch (cfg.format) {
        case Format::Json: {
            Json j{{"p", str(p)}, {"n", str(n)}, {"k", str(k)}, {"terms", json::encode(expr)}};
            j["upper"] = ends.upper ? json::encode(*ends.upper) : Json(nullptr);
            j["lower"] = ends.lower ? json::encode(*ends.lower) : Json(nullptr);
            j["poincare"] = json::encode(poincare);
            j["conservation"] = conserved ? "OK" : "FAILED";
            return dump(j);
        }
        case Format::Csv: {
            std::string s = csv_row({"kind", "p", "n", "dims", "twist", "multiplicity"});
            for (const auto& [term, m] : expr.terms()) {
                const auto& obj = std::get<SBProductObject>(term.object);
                std::string dims;
                for (std::size_t i = 0; i < obj.dims.size(); ++i) dims += (i ? ";" : "") + std::to_string(obj.dims[i]);
                s += csv_row({"sb_product", std::to_string(obj.context.p()), std::to_string(obj.context.n()), dims,
                              std::to_string(term.twist), std::to_string(m)});
            }
            return s;
        }
        case Format::Text: break;
    }
    std::ostringstream os;
    os << "M(SB_" << v.reduced_dim() << "(D)) over F(SB_" << v.context.degree() / 2 << "(D)), deg D = "
       << v.context.degree() << ", deg C = " << v.context.degree() / 2 << "\n";
    for (const auto& [term, m] : expr.terms()) {
        os << "  " << describe(term);
        if (m != 1) os << " x" << m;
        os << "\n";
    }
    os << "upper: " << (ends.upper ? describe(*ends.upper) : "ambiguous") << "\n";
    os << "lower: " << (ends.lower ? describe(*ends.lower) : "ambiguous") << "\n";
    os << "conservation: " << (conserved ? "OK" : "FAILED") << "\n";
    return os.str();
}

std::string cmd_endpoints(std::int64_t p, std::int64_t n, std::int64_t k, const OutputConfig& cfg) {
    const auto ends = sbc_endpoints(DivisionContext(p, n), k);
    switch (cfg.format) {
        case Format::Json:
            return dump(Json{{"p", str(p)}, {"n", str(n)}, {"k", str(k)},
                             {"upper", json::encode(ends.upper)}, {"lower", json::encode(ends.lower)}});
        case Format::Csv:
            return csv_row({"role", "level", "twist"}) + csv_row({"upper", str(k), std::to_string(ends.upper.twist)}) +
                   csv_row({"lower", str(k), std::to_string(ends.lower.twist)});
        case Format::Text: break;
    }
    return "upper: " + describe(ends.upper) + "\nlower: " + describe(ends.lower) + "\n";
}

std::string cmd_type_bound(std::int64_t p, std::int64_t n, std::int64_t k, const OutputConfig& cfg) {
    const SBVariety v(DivisionContext(p, n), k);
    const auto tb = type_bound(v);
    const auto ind = indecomposability_judgment(v);
    const auto rig = rigidity_judgment(v);
    switch (cfg.format) {
        case Format::Json: {
            Json j{{"p", str(p)}, {"n", str(n)}, {"k", str(k)}, {"bound", str(tb.bound)},
                   {"indecomposability", summarize(ind)}, {"rigidity", summarize(rig)}};
            if (cfg.trace) j["trace"] = json::encode(tb.trace);
            return dump(j);
        }
        case Format::Csv: {
            if (!cfg.trace)
                return csv_row({"p", "n", "k", "bound", "indecomposability", "rigidity"}) +
                       csv_row({str(p), str(n), str(k), str(tb.bound), summarize(ind), summarize(rig)});
            std::string s = csv_row({"step", "rule_id", "side_conditions", "conclusion"});
            for (std::size_t i = 0; i < tb.trace.steps.size(); ++i) {
                const auto& st = tb.trace.steps[i];
                std::string sc;
                for (const auto& [name, val] : st.side_conditions) sc += (sc.empty() ? "" : ";") + name + "=" + to_decimal(val);
                s += csv_row({std::to_string(i + 1), std::string(rule_info(st.rule).id), sc, st.conclusion});
            }
            return s;
        }
        case Format::Text: break;
    }
    std::ostringstream os;
    os << "SB_" << v.reduced_dim() << "(D), deg D = " << v.context.degree() << ": type bound " << tb.bound << "\n";
    os << "indecomposability: " << summarize(ind) << "\n";
    os << "rigidity: " << summarize(rig) << "\n";
    if (cfg.trace) os << render_trace(tb.trace);
    return os.str();
}

std::string cmd_conjecture(std::int64_t k, const OutputConfig& cfg) {
    const auto cls = conjecture_case_classifier(k);
    std::string status;
    std::string detail;
    if (const auto* open = std::get_if<Open>(&cls)) {
        status = "OPEN";
        detail = "blocking factor " + std::to_string(open->blocking.value);
    } else {
        const auto& cov = std::get<Covered>(cls);
        status = "COVERED";
        detail = to_string(cov.reason);
        if (cov.reason == CoverageReason::FourTimesOddSquarefree) detail += ", k'=" + std::to_string(cov.odd_part);
    }
    switch (cfg.format) {
        case Format::Json: {
            Json j{{"k", str(k)}};
            const auto body = json::encode(cls);
            for (const auto& [key, val] : body.items()) j[key] = val;
            return dump(j);
        }
        case Format::Csv: return csv_row({"k", "status", "detail"}) + csv_row({str(k), status, detail});
        case Format::Text: break;
    }
    std::ostringstream os;
    os << "k=" << k << ": " << status << " (" << detail << ")\n";
    if (const auto* cov = std::get_if<Covered>(&cls)) {
        for (const auto& r : cov->reductions) {
            os << "  p=" << r.prime << ":";
            for (auto d : r.reduced_dims) os << " SB_" << d;
            os << "\n";
        }
    }
    return os.str();
}

std::string cmd_verify(std::int64_t max_n, const OutputConfig& cfg, bool& passed) {
    const auto report = run_identity_suite(max_n);
    passed = report.passed();
    switch (cfg.format) {
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& c : report.checks) {
                Json j{{"name", c.name}, {"cases", std::to_string(c.cases)}, {"passed", c.passed}};
                if (!c.passed) j["first_failure"] = c.first_failure;
                arr.push_back(j);
            }
            return dump(Json{{"max_n", str(max_n)}, {"checks", arr}, {"passed", passed}});
        }
        case Format::Csv: {
            std::string s = csv_row({"check", "cases", "passed"});
            for (const auto& c : report.checks) s += csv_row({c.name, std::to_string(c.cases), c.passed ? "true" : "false"});
            return s;
        }
        case Format::Text: break;
    }
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
        if (!c.passed) {
            os << ": " << c.first_failure;
            ++failed;
        }
        os << "\n";
    }
    os << "verify: " << (passed ? "OK" : "FAILED (" + std::to_string(failed) + " identities)") << "\n";
    return os.str();
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw UsageError("unknown format '" + s + "' (expected text, json or csv)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorics of motivic decompositions of Severi-Brauer varieties", "sbmotive"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name;
    OutputConfig cfg;
    app.add_option("--format", format_name, "Output format: text, json or csv");
    app.add_flag("--trace", cfg.trace, "Include proof traces");
    app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");

    std::int64_t d = 0, p = 0, n = 0, k = 0, i = 0, max_n = 5;

    auto* gauss = app.add_subcommand("gaussian", "Gaussian binomial [d choose k]_q");
    gauss->add_option("d", d)->required();
    gauss->add_option("k", k)->required();

    auto add_pnk = [&](CLI::App* sub) {
        sub->add_option("--p", p, "Prime p")->required();
        sub->add_option("--n", n, "Exponent n, deg D = p^n")->required();
        sub->add_option("--k", k, "Level k, variety SB_{p^k}(D)")->required();
    };

    auto* mu_cmd = app.add_subcommand("mu", "Box-partition counts mu^i_{k,n}");
    add_pnk(mu_cmd);
    auto* i_opt = mu_cmd->add_option("--i", i, "Single index i");
    auto* all_flag = mu_cmd->add_flag("--all", "All i with nonzero count");
    i_opt->excludes(all_flag);

    auto* chow = app.add_subcommand("chow-order", "Orders of rational Chow groups of SB_1(D) x SB_{p^k}(D)");
    add_pnk(chow);
    auto* dec = app.add_subcommand("decompose", "Function-field decomposition (p = 2)");
    add_pnk(dec);
    auto* ends = app.add_subcommand("endpoints", "Upper and lower summands over the function field");
    add_pnk(ends);
    auto* tb = app.add_subcommand("type-bound", "Type bound with indecomposability and rigidity judgments");
    add_pnk(tb);

    auto* conj = app.add_subcommand("conjecture", "Classify SB_k(D) against the rigidity criterion");
    conj->add_option("--k", k, "Reduced dimension k >= 1")->required();

    auto* ver = app.add_subcommand("verify", "Run the full identity suite");
    ver->add_option("--max-n", max_n, "Largest degree exponent checked (1..7)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsageError;
    }

    std::string output;
    int code = kOk;
    try {
        if (format_name.empty()) {
            const char* env = std::getenv(kFormatEnv);
            format_name = (env && *env) ? env : "text";
        }
        cfg.format = parse_format(format_name);

        if (*gauss) {
            output = cmd_gaussian(d, k, cfg);
        } else if (*conj) {
            if (k < 1) throw UsageError("--k must be at least 1");
            output = cmd_conjecture(k, cfg);
        } else if (*ver) {
            if (max_n < 1 || max_n > 7) throw UsageError("--max-n must be in 1..7");
            bool passed = false;
            output = cmd_verify(max_n, cfg, passed);
            if (!passed) code = kVerifyFailed;
        } else {
            require_prime(p);
            require_nonneg(n, "--n");
            require_nonneg(k, "--k");
            if (*mu_cmd) {
                if (!*i_opt && !*all_flag) throw UsageError("mu needs either --i or --all");
                output = cmd_mu(p, n, k, *i_opt ? std::optional<std::int64_t>(i) : std::nullopt, cfg);
            } else if (*chow) {
                output = cmd_chow_order(p, n, k, cfg);
            } else if (*dec) {
                output = cmd_decompose(p, n, k, cfg);
            } else if (*ends) {
                output = cmd_endpoints(p, n, k, cfg);
            } else if (*tb) {
                output = cmd_type_bound(p, n, k, cfg);
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kEngineError;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << "\n";
        return kEngineError;
    }

    if (cfg.out_path.empty()) {
        out << output;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file || !(file << output)) {
            err << "error: cannot write " << cfg.out_path << "\n";
            return kEngineError;
        }
    }
    if (code == kVerifyFailed) err << "error: identity suite failed\n";
    return code;
}

}  // namespace sbm::cli
