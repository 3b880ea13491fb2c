#include "hypergeo/hypergeo.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "hypergeo/bounds.hpp"
#include "hypergeo/distribution.hpp"
#include "hypergeo/error.hpp"
#include "hypergeo/report.hpp"
#include "hypergeo/sampler.hpp"
#include "hypergeo/symmetry.hpp"
#include "hypergeo/verify.hpp"

struct hg_params {
    hypergeo::Params value;
};

struct hg_rational {
    hypergeo::Rational value;
};

struct hg_report {
    hypergeo::VerifyReport value;
};

namespace {

thread_local std::string g_last_error;

hg_status fail(hg_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
hg_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return HG_OK;
    } catch (const hypergeo::ParseError& e) {
        return fail(HG_ERR_PARSE, e.what());
    } catch (const hypergeo::DomainError& e) {
        return fail(HG_ERR_DOMAIN, e.what());
    } catch (const hypergeo::DegenerateError& e) {
        return fail(HG_ERR_DEGENERATE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HG_ERR_INTERNAL, "unknown error");
    }
}

char* duplicate(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hypergeo::TailSide to_side(hg_side side) {
    switch (side) {
        case HG_SIDE_UPPER: return hypergeo::TailSide::upper;
        case HG_SIDE_LOWER: return hypergeo::TailSide::lower;
    }
    throw hypergeo::DomainError("unknown tail side");
}

hypergeo::BoundForm to_form(hg_form form) {
    switch (form) {
        case HG_FORM_HOEFFDING: return hypergeo::BoundForm::hoeffding;
        case HG_FORM_RELAXED: return hypergeo::BoundForm::relaxed;
    }
    throw hypergeo::DomainError("unknown bound form");
}

hg_bound to_c(const hypergeo::BoundValue& b) { return {b.value, b.vacuous ? 1 : 0}; }

hg_rational* make_rational(hypergeo::Rational r) { return new hg_rational{std::move(r)}; }

std::string render(const hypergeo::VerifyReport& report, hg_format format) {
    switch (format) {
        case HG_FORMAT_TEXT: return hypergeo::render_summary_text(report);
        case HG_FORMAT_JSON: return hypergeo::render_json(report);
        case HG_FORMAT_CSV: return hypergeo::render_csv(report);
    }
    throw hypergeo::DomainError("unknown output format");
}

#define HG_REQUIRE(ptr)                                                       \
    do {                                                                      \
        if ((ptr) == nullptr) return fail(HG_ERR_NULL_ARGUMENT, #ptr " is NULL"); \
    } while (0)

}  // namespace

extern "C" {

const char* hg_version(void) { return "0.1.0"; }

const char* hg_status_string(hg_status status) {
    switch (status) {
        case HG_OK: return "ok";
        case HG_ERR_NULL_ARGUMENT: return "null argument";
        case HG_ERR_DOMAIN: return "parameter outside domain";
        case HG_ERR_DEGENERATE: return "degenerate parameters";
        case HG_ERR_PARSE: return "parse error";
        case HG_ERR_IO: return "i/o error";
        case HG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* hg_last_error(void) { return g_last_error.c_str(); }

void hg_string_free(char* text) { std::free(text); }

hg_status hg_format_double(double value, char** out) {
    HG_REQUIRE(out);
    return guarded([&] { *out = duplicate(hypergeo::format_double(value)); });
}

hg_status hg_params_create(uint64_t population, uint64_t whites, uint64_t draws, hg_params** out) {
    HG_REQUIRE(out);
    return guarded([&] { *out = new hg_params{hypergeo::Params(population, whites, draws)}; });
}

void hg_params_destroy(hg_params* params) { delete params; }

hg_status hg_params_get(const hg_params* params, uint64_t* population, uint64_t* whites, uint64_t* draws) {
    HG_REQUIRE(params);
    if (population != nullptr) *population = params->value.population();
    if (whites != nullptr) *whites = params->value.whites();
    if (draws != nullptr) *draws = params->value.draws();
    return HG_OK;
}

hg_status hg_support(const hg_params* params, int64_t* lo, int64_t* hi) {
    HG_REQUIRE(params);
    HG_REQUIRE(lo);
    HG_REQUIRE(hi);
    const auto s = hypergeo::support(params->value);
    *lo = s.lo;
    *hi = s.hi;
    return HG_OK;
}

hg_status hg_rational_parse(const char* text, hg_rational** out) {
    HG_REQUIRE(text);
    HG_REQUIRE(out);
    return guarded([&] { *out = make_rational(hypergeo::Rational::parse(text)); });
}

void hg_rational_destroy(hg_rational* value) { delete value; }

hg_status hg_rational_to_string(const hg_rational* value, char** out) {
    HG_REQUIRE(value);
    HG_REQUIRE(out);
    return guarded([&] { *out = duplicate(value->value.str()); });
}

hg_status hg_rational_to_double(const hg_rational* value, double* out) {
    HG_REQUIRE(value);
    HG_REQUIRE(out);
    *out = value->value.to_double();
    return HG_OK;
}

hg_status hg_rational_log(const hg_rational* value, double* out) {
    HG_REQUIRE(value);
    HG_REQUIRE(out);
    if (value->value.is_zero()) {
        *out = -std::numeric_limits<double>::infinity();
        return HG_OK;
    }
    return guarded([&] { *out = value->value.log(); });
}

hg_status hg_rational_compare(const hg_rational* a, const hg_rational* b, int* out) {
    HG_REQUIRE(a);
    HG_REQUIRE(b);
    HG_REQUIRE(out);
    const auto c = a->value <=> b->value;
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
    return HG_OK;
}

hg_status hg_pmf(const hg_params* params, int64_t i, hg_rational** out) {
    HG_REQUIRE(params);
    HG_REQUIRE(out);
    return guarded([&] { *out = make_rational(hypergeo::pmf(params->value, i).rational()); });
}

hg_status hg_pmf_log(const hg_params* params, int64_t i, double* out) {
    HG_REQUIRE(params);
    HG_REQUIRE(out);
    return guarded([&] { *out = hypergeo::pmf_log(params->value, i).value(); });
}

hg_status hg_mean(const hg_params* params, hg_rational** out) {
    HG_REQUIRE(params);
    HG_REQUIRE(out);
    return guarded([&] { *out = make_rational(hypergeo::mean(params->value)); });
}

hg_status hg_variance(const hg_params* params, hg_rational** out) {
    HG_REQUIRE(params);
    HG_REQUIRE(out);
    return guarded([&] { *out = make_rational(hypergeo::variance(params->value)); });
}

hg_status hg_tail(const hg_params* params, hg_side side, int64_t threshold, hg_rational** out) {
    HG_REQUIRE(params);
    HG_REQUIRE(out);
    return guarded([&] {
        const auto p = to_side(side) == hypergeo::TailSide::upper ? hypergeo::upper_tail(params->value, threshold)
                                                                 : hypergeo::lower_tail(params->value, threshold);
        *out = make_rational(p.rational());
    });
}

hg_status hg_tail_log(const hg_params* params, hg_side side, int64_t threshold, double* out) {
    HG_REQUIRE(params);
    HG_REQUIRE(out);
    return guarded([&] {
        const auto p = to_side(side) == hypergeo::TailSide::upper
                           ? hypergeo::upper_tail_log(params->value, threshold)
                           : hypergeo::lower_tail_log(params->value, threshold);
        *out = p.value();
    });
}

hg_status hg_symmetry_apply(hg_symmetry symmetry, const hg_point* in, hg_point* out) {
    HG_REQUIRE(in);
    HG_REQUIRE(out);
    return guarded([&] {
        const hypergeo::PmfPoint point{hypergeo::Params(in->population, in->whites, in->draws), in->i};
        hypergeo::PmfPoint image = point;
        switch (symmetry) {
            case HG_SYMMETRY_COLOR_FLIP: image = hypergeo::color_flip(point); break;
            case HG_SYMMETRY_DRAWN_SWAP: image = hypergeo::drawn_swap(point); break;
            case HG_SYMMETRY_ROLE_SWAP: image = hypergeo::role_swap(point); break;
            default: throw hypergeo::DomainError("unknown symmetry");
        }
        *out = {image.params.population(), image.params.whites(), image.params.draws(), image.i};
    });
}

hg_status hg_deviation_from_threshold(const hg_params* params, hg_side side, int64_t threshold, hg_rational** t) {
    HG_REQUIRE(params);
    HG_REQUIRE(t);
    return guarded([&] {
        *t = make_rational(to_side(side) == hypergeo::TailSide::upper
                               ? hypergeo::t_from_k(params->value, threshold)
                               : hypergeo::t_from_k_prime(params->value, threshold));
    });
}

hg_status hg_threshold_from_deviation(const hg_params* params, hg_side side, const hg_rational* t,
                                      int64_t* threshold) {
    HG_REQUIRE(params);
    HG_REQUIRE(t);
    HG_REQUIRE(threshold);
    return guarded([&] { *threshold = hypergeo::threshold_from_t(params->value, t->value, to_side(side)); });
}

hg_status hg_deviation_bound(const hg_params* params, hg_side side, hg_form form, const hg_rational* t,
                             hg_bound* out) {
    HG_REQUIRE(params);
    HG_REQUIRE(t);
    HG_REQUIRE(out);
    return guarded([&] {
        *out = to_c(hypergeo::deviation_bound(params->value, t->value, to_form(form), to_side(side)));
    });
}

hg_status hg_hoeffding_bound(const hg_rational* p, const hg_rational* t, uint64_t n, hg_bound* out) {
    HG_REQUIRE(p);
    HG_REQUIRE(t);
    HG_REQUIRE(out);
    return guarded([&] { *out = to_c(hypergeo::hoeffding_bound(p->value, t->value, n)); });
}

hg_status hg_relaxed_bound(const hg_rational* t, uint64_t n, hg_bound* out) {
    HG_REQUIRE(t);
    HG_REQUIRE(out);
    return guarded([&] { *out = to_c(hypergeo::relaxed_bound(t->value, n)); });
}

hg_status hg_estimate_upper_tail(const hg_params* params, int64_t k, uint64_t seed, uint64_t replicates,
                                 unsigned threads, hg_tail_estimate* out) {
    HG_REQUIRE(params);
    HG_REQUIRE(out);
    return guarded([&] {
        const auto est = hypergeo::estimate_upper_tail(params->value, k, {seed, replicates, threads});
        *out = {est.point_estimate, est.std_error, est.replicates, est.hits};
    });
}

hg_status hg_grid_verify(const hg_grid_spec* spec, hg_report** out) {
    HG_REQUIRE(spec);
    HG_REQUIRE(out);
    if ((spec->whites_count != 0 && spec->whites == nullptr) || (spec->draws_count != 0 && spec->draws == nullptr) ||
        (spec->thresholds_count != 0 && spec->thresholds == nullptr)) {
        return fail(HG_ERR_NULL_ARGUMENT, "grid list pointer is NULL but its count is nonzero");
    }
    return guarded([&] {
        hypergeo::GridSpec grid;
        grid.population_min = spec->population_min;
        grid.population_max = spec->population_max;
        grid.whites.assign(spec->whites, spec->whites + spec->whites_count);
        grid.draws.assign(spec->draws, spec->draws + spec->draws_count);
        grid.thresholds.assign(spec->thresholds, spec->thresholds + spec->thresholds_count);
        grid.side = to_side(spec->side);
        grid.threads = spec->threads;
        *out = new hg_report{hypergeo::grid_verify(grid)};
    });
}

void hg_report_destroy(hg_report* report) { delete report; }

hg_status hg_report_summary_get(const hg_report* report, hg_report_summary* out) {
    HG_REQUIRE(report);
    HG_REQUIRE(out);
    const auto& s = report->value.summary;
    *out = {s.rows, s.violations, s.vacuous, s.max_slack_hoeffding, s.min_slack_hoeffding, s.max_slack_relaxed};
    return HG_OK;
}

hg_status hg_report_render(const hg_report* report, hg_format format, char** out) {
    HG_REQUIRE(report);
    HG_REQUIRE(out);
    return guarded([&] { *out = duplicate(render(report->value, format)); });
}

hg_status hg_report_write(const hg_report* report, hg_format format, const char* path) {
    HG_REQUIRE(report);
    HG_REQUIRE(path);
    std::string text;
    if (const hg_status s = guarded([&] { text = render(report->value, format); }); s != HG_OK) return s;
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) return fail(HG_ERR_IO, "cannot open report file for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file) return fail(HG_ERR_IO, "failed writing report file");
    return HG_OK;
}

}  // extern "C"
