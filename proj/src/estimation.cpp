// Copyright 2026 The Catmet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catmet/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "catmet/analytic.hpp"
#include "catmet/kernels.hpp"

namespace catmet::estimation {

namespace {

constexpr double kSensitivityFloor = 1e-3;

double sample_mean(std::span<const double> xs) {
    double s = 0.0;
    for (const double x : xs) {
        s += x;
    }
    return s / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs, double mean) {
    if (xs.size() < 2) {
        return 0.0;
    }
    double s = 0.0;
    for (const double x : xs) {
        s += (x - mean) * (x - mean);
    }
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

}  // namespace

const char* model_name(Model m) {
    switch (m) {
        case Model::smallg_cos2: return "smallg_cos2";
        case Model::exact: return "exact";
    }
    return "unknown";
}

double model_p_plus(Model model, double n_photons, double g) {
    return model == Model::smallg_cos2
               ? analytic::postselect_prob_smallg(n_photons, g)
               : analytic::postselect_probs(n_photons, g).p_plus;
}

double model_dp_dg(Model model, double n_photons, double g) {
    if (model == Model::smallg_cos2) {
        return -n_photons * std::sin(2.0 * g * n_photons);
    }
    return analytic::postselect_prob_derivative(n_photons, g);
}

void EstimationRun::validate() const {
    if (!(n_photons > 0.0) || !std::isfinite(n_photons)) {
        throw InvalidArgument("estimation: N must be finite and positive");
    }
    const double g_max = std::acos(-1.0) / (2.0 * n_photons);
    if (!(g_true > 0.0) || !(g_true < g_max)) {
        throw InvalidArgument(
            "estimation: g must lie strictly inside (0, pi/(2N)) = (0, " +
            std::to_string(g_max) + "); the estimator inverts only the "
            "principal branch");
    }
    if (trials < 1) {
        throw InvalidArgument("estimation: need at least one trial");
    }
    if (repetitions < 1) {
        throw InvalidArgument("estimation: need at least one repetition");
    }
}

std::vector<double> simulate_trials(const EstimationRun& run,
                                    unsigned workers) {
    run.validate();
    const double p = model_p_plus(run.model, run.n_photons, run.g_true);
    const std::uint64_t threshold = kernels::bernoulli_threshold(p);
    const std::uint64_t reps = run.repetitions;
    std::vector<double> p_hats(reps);

    const auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t r = lo; r < hi; ++r) {
            const std::uint64_t key = kernels::stream_key(run.seed, r);
            const std::uint64_t hits =
                kernels::bernoulli_count(key, run.trials, threshold);
            p_hats[r] = static_cast<double>(hits) /
                        static_cast<double>(run.trials);
        }
    };

    std::uint64_t n_workers =
        workers > 0 ? workers
                    : std::max(1u, std::thread::hardware_concurrency());
    n_workers = std::min<std::uint64_t>(n_workers, reps);
    if (n_workers <= 1) {
        chunk(0, reps);
        return p_hats;
    }
    // Contiguous blocks over disjoint indices; repetition r always draws
    // from stream_key(seed, r), so the partition cannot affect values.
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    const std::uint64_t per = (reps + n_workers - 1) / n_workers;
    for (std::uint64_t w = 0; w < n_workers; ++w) {
        const std::uint64_t lo = w * per;
        const std::uint64_t hi = std::min(reps, lo + per);
        if (lo >= hi) {
            break;
        }
        pool.emplace_back(chunk, lo, hi);
    }
    for (auto& t : pool) {
        t.join();
    }
    return p_hats;
}

double invert_estimator(double p_hat, double n_photons) {
    if (!(n_photons > 0.0)) {
        throw InvalidArgument("invert_estimator: N must be positive");
    }
    const double p = std::clamp(p_hat, 0.0, 1.0);
    return std::acos(std::sqrt(p)) / n_photons;
}

double predicted_sigma_g(double p_plus, double n_photons,
                         std::uint64_t trials) {
    if (!(p_plus >= 0.0 && p_plus <= 1.0)) {
        throw InvalidArgument("predicted_sigma_g: p_plus must be in [0, 1]");
    }
    if (!(n_photons > 0.0) || trials < 1) {
        throw InvalidArgument("predicted_sigma_g: need N > 0 and trials >= 1");
    }
    const double a = std::sin(2.0 * std::acos(std::sqrt(p_plus)));
    if (a <= kSensitivityFloor) {
        throw SensitivityVanishing(
            "|dp/dg| sensitivity factor " + std::to_string(a) +
            " is below the floor; the operating point sits at an extremum "
            "of the fringe");
    }
    return 1.0 / (a * n_photons * std::sqrt(static_cast<double>(trials)));
}

EstimationReport summarize(const EstimationRun& run,
                           std::span<const double> p_hats) {
    run.validate();
    if (p_hats.empty()) {
        throw InvalidArgument("summarize: no repetitions given");
    }
    EstimationReport rep{};
    rep.p_plus_model = model_p_plus(run.model, run.n_photons, run.g_true);
    rep.p_hat_mean = sample_mean(p_hats);
    rep.p_hat_std = sample_std(p_hats, rep.p_hat_mean);

    std::vector<double> g_hats;
    g_hats.reserve(p_hats.size());
    rep.edge_count = 0;
    for (const double p : p_hats) {
        if (p == 0.0 || p == 1.0) {
            ++rep.edge_count;  // arccos slope diverges; excluded from g stats
        } else {
            g_hats.push_back(invert_estimator(p, run.n_photons));
        }
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (g_hats.empty()) {
        rep.g_hat_mean = nan;
        rep.g_hat_std = nan;
    } else {
        rep.g_hat_mean = sample_mean(g_hats);
        rep.g_hat_std =
            g_hats.size() < 2 ? nan : sample_std(g_hats, rep.g_hat_mean);
    }

    rep.sigma_g_predicted =
        predicted_sigma_g(rep.p_plus_model, run.n_photons, run.trials);
    const double dp = model_dp_dg(run.model, run.n_photons, run.g_true);
    const double sigma_p = std::sqrt(rep.p_plus_model *
                                     (1.0 - rep.p_plus_model) /
                                     static_cast<double>(run.trials));
    rep.sigma_g_predicted_binomial = sigma_p / std::abs(dp);
    return rep;
}

EstimationReport run_estimation(const EstimationRun& run, unsigned workers) {
    const std::vector<double> p_hats = simulate_trials(run, workers);
    return summarize(run, p_hats);
}

ScalingSweep scaling_sweep(std::span<const double> n_grid, double gn_fixed,
                           std::uint64_t trials, std::uint64_t repetitions,
                           std::uint64_t seed, Model model, unsigned workers) {
    if (n_grid.size() < 2) {
        throw InvalidArgument("scaling_sweep: need at least two N values");
    }
    if (!(gn_fixed > 0.0) || !(gn_fixed < std::acos(-1.0) / 2.0)) {
        throw InvalidArgument(
            "scaling_sweep: g N must lie strictly inside (0, pi/2)");
    }
    ScalingSweep sweep;
    sweep.points.reserve(n_grid.size());
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        EstimationRun run;
        run.n_photons = n_grid[i];
        run.g_true = gn_fixed / n_grid[i];
        run.trials = trials;
        run.repetitions = repetitions;
        // Independent substream per row; otherwise every row at the same
        // g N would replay the same Bernoulli counts.
        run.seed = kernels::stream_key(seed, i);
        run.model = model;
        const EstimationReport rep = run_estimation(run, workers);
        if (!std::isfinite(rep.g_hat_std) || rep.g_hat_std <= 0.0) {
            throw Error(
                "scaling_sweep: empirical spread degenerate at N = " +
                std::to_string(run.n_photons) +
                "; increase repetitions or trials");
        }
        sweep.points.push_back({run.n_photons, run.g_true, rep.g_hat_std,
                                rep.sigma_g_predicted_binomial});
    }
    // Least-squares slope of log(std) against log(N).
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double m = static_cast<double>(sweep.points.size());
    for (const auto& pt : sweep.points) {
        const double x = std::log(pt.n_photons);
        const double y = std::log(pt.g_hat_std);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    sweep.loglog_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return sweep;
}

}  // namespace catmet::estimation
