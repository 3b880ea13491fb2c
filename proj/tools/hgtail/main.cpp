// hgtail: command-line front end for the hypergeo C API.
//
// Exit codes: 0 success, 2 invalid parameters or usage, 3 verification
// violations.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypergeo/hypergeo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitViolations = 3;

constexpr std::uint64_t kExactPopulationLimit = 10000;

const char* const kNotation = R"(Notation (urn with N balls, M white, n drawn; i = whites among the draws):
                          hgtail   Chvatal   MathWorld   Wikipedia
  balls in urn              -N        N        n+m          N
  balls that count          -M        M        n            m
  balls that don't count   N-M       N-M       m           N-m
  balls you draw            -n        n        N            n
  drawn balls that count    -i        i        i            k
Tail threshold -k: upper side Pr[i >= k], lower side Pr[i <= k].
Exit codes: 0 ok, 2 invalid parameters, 3 verification violations.)";

// Thrown by any failing C call; carries the library's message.
struct ApiError {
    hg_status status;
    std::string message;
};

void check(hg_status status) {
    if (status != HG_OK) throw ApiError{status, hg_last_error()};
}

struct ParamsDeleter {
    void operator()(hg_params* p) const { hg_params_destroy(p); }
};
struct RationalDeleter {
    void operator()(hg_rational* r) const { hg_rational_destroy(r); }
};
struct ReportDeleter {
    void operator()(hg_report* r) const { hg_report_destroy(r); }
};
using ParamsPtr = std::unique_ptr<hg_params, ParamsDeleter>;
using RationalPtr = std::unique_ptr<hg_rational, RationalDeleter>;
using ReportPtr = std::unique_ptr<hg_report, ReportDeleter>;

std::string take_string(char* s) {
    std::string out(s);
    hg_string_free(s);
    return out;
}

std::string fmt(double v) {
    char* s = nullptr;
    check(hg_format_double(v, &s));
    return take_string(s);
}

struct Exact {
    std::string fraction;
    double value;
};

Exact describe(const RationalPtr& r) {
    char* s = nullptr;
    check(hg_rational_to_string(r.get(), &s));
    double v = 0.0;
    check(hg_rational_to_double(r.get(), &v));
    return {take_string(s), v};
}

RationalPtr parse_rational(const std::string& text) {
    hg_rational* r = nullptr;
    check(hg_rational_parse(text.c_str(), &r));
    return RationalPtr(r);
}

// Flat key/value result rendered as text, JSON or a one-row CSV.
using Value = std::variant<std::string, double, std::int64_t, std::uint64_t, bool>;

class Record {
public:
    Record& add(std::string key, Value value) {
        fields_.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    void set_headline(std::string line) { headline_ = std::move(line); }

    void print(const std::string& format) const {
        if (format == "json") {
            nlohmann::ordered_json doc;
            for (const auto& [key, value] : fields_) {
                std::visit([&, k = key](const auto& v) { doc[k] = v; }, value);
            }
            std::cout << doc.dump(2) << '\n';
        } else if (format == "csv") {
            std::string header;
            std::string row;
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                if (i != 0) {
                    header += ',';
                    row += ',';
                }
                header += fields_[i].first;
                row += csv(to_text(fields_[i].second));
            }
            std::cout << header << "\r\n" << row << "\r\n";
        } else {
            std::cout << headline_ << '\n';
        }
    }

private:
    static std::string to_text(const Value& value) {
        return std::visit(
            [](const auto& v) -> std::string {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::string>) return v;
                else if constexpr (std::is_same_v<T, double>) return fmt(v);
                else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
                else return std::to_string(v);
            },
            value);
    }
    static std::string csv(const std::string& s) {
        if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + '"';
    }

    std::vector<std::pair<std::string, Value>> fields_;
    std::string headline_;
};

std::string exact_line(const Exact& e) {
    if (e.fraction.find('/') == std::string::npos) return e.fraction;
    return e.fraction + " (" + fmt(e.value) + ")";
}

struct Urn {
    std::uint64_t population = 0;
    std::uint64_t whites = 0;
    std::uint64_t draws = 0;
};

void add_urn_options(CLI::App& cmd, Urn& urn) {
    cmd.add_option("-N", urn.population, "Balls in the urn")->required();
    cmd.add_option("-M", urn.whites, "Balls that count (white)")->required();
    cmd.add_option("-n", urn.draws, "Balls drawn without replacement")->required();
}

ParamsPtr make_params(const Urn& urn) {
    hg_params* p = nullptr;
    check(hg_params_create(urn.population, urn.whites, urn.draws, &p));
    return ParamsPtr(p);
}

Record& add_urn(Record& rec, const Urn& urn) {
    return rec.add("N", urn.population).add("M", urn.whites).add("n", urn.draws);
}

bool use_log_backend(const std::string& backend, const Urn& urn) {
    if (backend == "log") return true;
    if (backend == "exact") return false;
    return urn.population > kExactPopulationLimit;
}

hg_side parse_side(const std::string& s) { return s == "lower" ? HG_SIDE_LOWER : HG_SIDE_UPPER; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact hypergeometric probabilities and Chvatal-Hoeffding tail bounds"};
    app.footer(kNotation);
    app.require_subcommand(1);

    std::string format = "text";
    std::string backend = "auto";
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--backend", backend, "exact, log, or auto (exact for N <= 10000)")
            ->check(CLI::IsMember({"auto", "exact", "log"}));
    };

    Urn urn;
    std::int64_t count_i = 0;
    std::int64_t threshold = 0;
    std::string side = "upper";
    std::string form = "hoeffding";
    std::string deviation;

    auto* pmf_cmd = app.add_subcommand("pmf", "Probability of exactly i whites");
    add_urn_options(*pmf_cmd, urn);
    pmf_cmd->add_option("-i", count_i, "White count")->required();
    add_common(pmf_cmd);

    auto* mean_cmd = app.add_subcommand("mean", "Expected white count nM/N");
    add_urn_options(*mean_cmd, urn);
    add_common(mean_cmd);

    auto* var_cmd = app.add_subcommand("var", "Variance nM(N-M)(N-n)/(N^2(N-1))");
    add_urn_options(*var_cmd, urn);
    add_common(var_cmd);

    auto* tail_cmd = app.add_subcommand("tail", "Tail probability Pr[i >= k] or Pr[i <= k]");
    add_urn_options(*tail_cmd, urn);
    tail_cmd->add_option("-k", threshold, "Threshold")->required();
    tail_cmd->add_option("--side", side)->check(CLI::IsMember({"upper", "lower"}));
    add_common(tail_cmd);

    auto* bound_cmd = app.add_subcommand("bound", "Hoeffding bound or its exp(-2t^2n) relaxation");
    add_urn_options(*bound_cmd, urn);
    auto* t_opt = bound_cmd->add_option("--t", deviation, "Deviation t (decimal or a/b)");
    auto* k_opt = bound_cmd->add_option("-k", threshold, "Integer threshold; t is derived from it");
    t_opt->excludes(k_opt);
    bound_cmd->add_option("--form", form)->check(CLI::IsMember({"hoeffding", "relaxed"}));
    bound_cmd->add_option("--side", side)->check(CLI::IsMember({"upper", "lower"}));
    add_common(bound_cmd);

    std::uint64_t n_min = 2;
    std::uint64_t n_max = 10;
    std::vector<std::uint64_t> whites_list;
    std::vector<std::uint64_t> draws_list;
    std::vector<std::int64_t> k_list;
    std::string out_path;
    unsigned threads = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Check exact tail <= Hoeffding <= relaxed over a grid");
    verify_cmd->add_option("--N-min", n_min, "Smallest population");
    verify_cmd->add_option("--N-max", n_max, "Largest population");
    verify_cmd->add_option("-M", whites_list, "Restrict whites (repeatable)");
    verify_cmd->add_option("-n", draws_list, "Restrict draws (repeatable)");
    verify_cmd->add_option("-k", k_list, "Restrict thresholds (repeatable; default: all with t >= 0)");
    verify_cmd->add_option("--side", side)->check(CLI::IsMember({"upper", "lower"}));
    verify_cmd->add_option("--out", out_path, "Also write the report to this file");
    verify_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    add_common(verify_cmd);

    std::uint64_t seed = 0;
    std::uint64_t reps = 100000;
    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo estimate of Pr[i >= k]");
    add_urn_options(*sample_cmd, urn);
    sample_cmd->add_option("-k", threshold, "Threshold")->required();
    sample_cmd->add_option("--seed", seed, "Generator seed");
    sample_cmd->add_option("--reps", reps, "Replicates")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    add_common(sample_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        Record rec;
        if (pmf_cmd->parsed()) {
            const ParamsPtr params = make_params(urn);
            add_urn(rec, urn).add("i", count_i);
            if (use_log_backend(backend, urn)) {
                double lp = 0.0;
                check(hg_pmf_log(params.get(), count_i, &lp));
                rec.add("backend", std::string("log")).add("log_pmf", fmt(lp)).add("pmf_float", std::exp(lp));
                rec.set_headline("ln pmf = " + fmt(lp) + " (" + fmt(std::exp(lp)) + ")");
            } else {
                hg_rational* r = nullptr;
                check(hg_pmf(params.get(), count_i, &r));
                const RationalPtr value(r);
                const Exact e = describe(value);
                rec.add("backend", std::string("exact")).add("pmf", e.fraction).add("pmf_float", e.value);
                rec.set_headline(exact_line(e));
            }
        } else if (mean_cmd->parsed() || var_cmd->parsed()) {
            const ParamsPtr params = make_params(urn);
            const bool is_mean = mean_cmd->parsed();
            hg_rational* r = nullptr;
            check(is_mean ? hg_mean(params.get(), &r) : hg_variance(params.get(), &r));
            const RationalPtr value(r);
            const Exact e = describe(value);
            const std::string key = is_mean ? "mean" : "variance";
            add_urn(rec, urn).add(key, e.fraction).add(key + "_float", e.value);
            rec.set_headline(exact_line(e));
        } else if (tail_cmd->parsed()) {
            const ParamsPtr params = make_params(urn);
            add_urn(rec, urn).add("side", side).add("k", threshold);
            if (use_log_backend(backend, urn)) {
                double lp = 0.0;
                check(hg_tail_log(params.get(), parse_side(side), threshold, &lp));
                rec.add("backend", std::string("log")).add("log_tail", fmt(lp)).add("tail_float", std::exp(lp));
                rec.set_headline("ln tail = " + fmt(lp) + " (" + fmt(std::exp(lp)) + ")");
            } else {
                hg_rational* r = nullptr;
                check(hg_tail(params.get(), parse_side(side), threshold, &r));
                const RationalPtr value(r);
                const Exact e = describe(value);
                rec.add("backend", std::string("exact")).add("tail", e.fraction).add("tail_float", e.value);
                rec.set_headline(exact_line(e));
            }
        } else if (bound_cmd->parsed()) {
            if (t_opt->count() == 0 && k_opt->count() == 0) {
                throw ApiError{HG_ERR_DOMAIN, "bound needs either --t or -k"};
            }
            const ParamsPtr params = make_params(urn);
            RationalPtr t;
            if (t_opt->count() != 0) {
                t = parse_rational(deviation);
            } else {
                hg_rational* r = nullptr;
                check(hg_deviation_from_threshold(params.get(), parse_side(side), threshold, &r));
                t.reset(r);
            }
            hg_bound bound{};
            check(hg_deviation_bound(params.get(), parse_side(side), form == "relaxed" ? HG_FORM_RELAXED
                                                                                      : HG_FORM_HOEFFDING,
                                     t.get(), &bound));
            const Exact te = describe(t);
            add_urn(rec, urn).add("side", side).add("form", form);
            if (k_opt->count() != 0) rec.add("k", threshold);
            rec.add("t", te.fraction).add("t_float", te.value).add("bound", bound.value)
                .add("vacuous", bound.vacuous != 0);
            rec.set_headline(fmt(bound.value) + (bound.vacuous != 0 ? " (vacuous: t < 0)" : ""));
        } else if (verify_cmd->parsed()) {
            hg_grid_spec spec{};
            spec.population_min = n_min;
            spec.population_max = n_max;
            spec.whites = whites_list.data();
            spec.whites_count = whites_list.size();
            spec.draws = draws_list.data();
            spec.draws_count = draws_list.size();
            spec.thresholds = k_list.data();
            spec.thresholds_count = k_list.size();
            spec.side = parse_side(side);
            spec.threads = threads;
            hg_report* raw = nullptr;
            check(hg_grid_verify(&spec, &raw));
            const ReportPtr report(raw);
            const hg_format out_format =
                format == "json" ? HG_FORMAT_JSON : (format == "csv" ? HG_FORMAT_CSV : HG_FORMAT_TEXT);
            if (!out_path.empty()) {
                check(hg_report_write(report.get(), out_format == HG_FORMAT_TEXT ? HG_FORMAT_CSV : out_format,
                                      out_path.c_str()));
            }
            char* text = nullptr;
            check(hg_report_render(report.get(), out_path.empty() ? out_format : HG_FORMAT_TEXT, &text));
            std::cout << take_string(text);
            hg_report_summary summary{};
            check(hg_report_summary_get(report.get(), &summary));
            std::cout.flush();
            return summary.violations == 0 ? kExitOk : kExitViolations;
        } else if (sample_cmd->parsed()) {
            const ParamsPtr params = make_params(urn);
            hg_tail_estimate est{};
            check(hg_estimate_upper_tail(params.get(), threshold, seed, reps, threads, &est));
            add_urn(rec, urn).add("k", threshold).add("seed", seed).add("replicates", est.replicates);
            rec.add("hits", est.hits).add("estimate", est.point_estimate).add("std_error", est.std_error);
            std::string headline = fmt(est.point_estimate) + " +/- " + fmt(est.std_error);
            if (!use_log_backend(backend, urn)) {
                hg_rational* r = nullptr;
                check(hg_tail(params.get(), HG_SIDE_UPPER, threshold, &r));
                const RationalPtr value(r);
                const Exact e = describe(value);
                rec.add("exact_tail", e.fraction).add("exact_tail_float", e.value);
                headline += " (exact " + exact_line(e) + ")";
            }
            rec.set_headline(headline);
        }
        rec.print(format);
        return kExitOk;
    } catch (const ApiError& e) {
        std::cerr << "error: " << hg_status_string(e.status) << ": " << e.message << '\n';
        return e.status == HG_ERR_INTERNAL || e.status == HG_ERR_IO ? 1 : kExitInvalid;
    }
}
