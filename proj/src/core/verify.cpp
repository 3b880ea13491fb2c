#include "hypergeo/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hypergeo/error.hpp"

namespace hypergeo {

namespace {

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct Task {
    std::uint64_t population;
    std::uint64_t whites;
};

// Every k with t >= 0 on the requested side.
std::vector<std::int64_t> default_thresholds(const Params& params, TailSide side) {
    const Rational m = mean(params);
    const auto n = static_cast<std::int64_t>(params.draws());
    std::vector<std::int64_t> ks;
    if (side == TailSide::upper) {
        for (auto k = static_cast<std::int64_t>(m.ceil().get_si()); k <= n; ++k) ks.push_back(k);
    } else {
        for (std::int64_t k = 0, last = m.floor().get_si(); k <= last; ++k) ks.push_back(k);
    }
    return ks;
}

std::vector<VerifyRow> run_task(const Task& task, const GridSpec& spec, const std::vector<std::uint64_t>& draws,
                                const std::vector<std::int64_t>& thresholds) {
    std::vector<VerifyRow> rows;
    auto each_draw = [&](std::uint64_t n) {
        if (n == 0 || n > task.population) return;
        const Params params(task.population, task.whites, n);
        const auto ks = thresholds.empty() ? default_thresholds(params, spec.side) : thresholds;
        for (const std::int64_t k : ks) rows.push_back(verify_point(params, spec.side, k));
    };
    if (draws.empty()) {
        for (std::uint64_t n = 1; n <= task.population; ++n) each_draw(n);
    } else {
        for (const std::uint64_t n : draws) each_draw(n);
    }
    return rows;
}

}  // namespace

VerifyRow verify_point(const Params& params, TailSide side, std::int64_t k) {
    const bool upper = side == TailSide::upper;
    Rational t = upper ? t_from_k(params, k) : t_from_k_prime(params, k);
    ExactProb exact = upper ? upper_tail(params, k) : lower_tail(params, k);
    const BoundValue hoeffding = deviation_bound(params, t, BoundForm::hoeffding, side);
    const BoundValue relaxed = deviation_bound(params, t, BoundForm::relaxed, side);

    const Rational tolerance = Rational::from_double(kSoundnessTolerance);
    const bool sound = exact.rational() <= Rational::from_double(hoeffding.value) + tolerance &&
                       Rational::from_double(hoeffding.value) <= Rational::from_double(relaxed.value) + tolerance;
    const double exact_float = exact.to_double();
    return VerifyRow{params,
                     side,
                     k,
                     std::move(t),
                     hoeffding.vacuous,
                     std::move(exact),
                     exact_float,
                     hoeffding.value,
                     relaxed.value,
                     hoeffding.value - exact_float,
                     relaxed.value - exact_float,
                     sound};
}

VerifyReport grid_verify(const GridSpec& spec) {
    if (spec.population_min > spec.population_max) throw DomainError("empty population range");

    const auto whites = sorted_unique(spec.whites);
    const auto draws = sorted_unique(spec.draws);
    const auto thresholds = sorted_unique(spec.thresholds);

    std::vector<Task> tasks;
    for (std::uint64_t big_n = spec.population_min;; ++big_n) {
        if (whites.empty()) {
            for (std::uint64_t m = 0; m <= big_n; ++m) tasks.push_back({big_n, m});
        } else {
            for (const std::uint64_t m : whites) {
                if (m <= big_n) tasks.push_back({big_n, m});
            }
        }
        if (big_n == spec.population_max) break;
    }

    std::vector<std::vector<VerifyRow>> results(tasks.size());
    unsigned workers = spec.threads != 0 ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_task(tasks[i], spec, draws, thresholds);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    results[i] = run_task(tasks[i], spec, draws, thresholds);
                }
            });
        }
    }

    VerifyReport report;
    report.side = spec.side;
    VerifySummary& s = report.summary;
    bool first = true;
    for (auto& chunk : results) {
        for (auto& row : chunk) {
            ++s.rows;
            if (!row.sound) ++s.violations;
            if (row.vacuous) ++s.vacuous;
            if (first) {
                s.max_slack_hoeffding = s.min_slack_hoeffding = row.slack_hoeffding;
                s.max_slack_relaxed = row.slack_relaxed;
                first = false;
            } else {
                s.max_slack_hoeffding = std::max(s.max_slack_hoeffding, row.slack_hoeffding);
                s.min_slack_hoeffding = std::min(s.min_slack_hoeffding, row.slack_hoeffding);
                s.max_slack_relaxed = std::max(s.max_slack_relaxed, row.slack_relaxed);
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace hypergeo
