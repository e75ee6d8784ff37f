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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "catmet/errors.hpp"

// Monte Carlo single-parameter estimation of the interaction strength g
// from binary post-selection counts. Sampling is counter-based: repetition
// r of seed s draws from stream_key(s, r), so results are bit-identical for
// any worker count and for the scalar and SIMD samplers.

namespace catmet::estimation {

// Probability model for a single post-selection outcome.
enum class Model {
    smallg_cos2,  // p_plus = cos^2(g N)
    exact,        // p_plus = 1/2 + 1/2 e^{N(cos 2g - 1)} cos(N sin 2g)
};

const char* model_name(Model m);

// True p_plus under the model.
double model_p_plus(Model model, double n_photons, double g);

// d p_plus / d g under the model, analytic.
double model_dp_dg(Model model, double n_photons, double g);

struct EstimationRun {
    double n_photons;
    double g_true;          // must lie strictly inside (0, pi / (2N))
    std::uint64_t trials;   // post-selection shots per repetition
    std::uint64_t repetitions;
    std::uint64_t seed;
    Model model = Model::smallg_cos2;

    void validate() const;  // throws InvalidArgument
};

// One p_hat per repetition. `workers` 0 means one thread per hardware
// core; the result does not depend on the worker count.
std::vector<double> simulate_trials(const EstimationRun& run,
                                    unsigned workers = 0);

// Inverts p_hat = cos^2(g N) on the principal branch [0, pi/(2N)].
// p_hat is clamped to [0, 1] first.
double invert_estimator(double p_hat, double n_photons);

// Linearized prediction sigma_g = 1 / (a N sqrt(trials)) with
// a = sin(2 arccos(sqrt(p_plus))). Throws SensitivityVanishing when
// a <= 1e-3 (operating point too close to an extremum of p).
double predicted_sigma_g(double p_plus, double n_photons,
                         std::uint64_t trials);

struct EstimationReport {
    double p_plus_model;       // true p_plus the draws used
    double p_hat_mean;
    double p_hat_std;          // sample std over repetitions
    double g_hat_mean;         // over non-edge repetitions; NaN if none
    double g_hat_std;          // sample std over non-edge reps; NaN if < 2
    double sigma_g_predicted;  // 1 / (a N sqrt(trials))
    // Same propagation with the exact binomial sigma_p and the model's own
    // derivative: sqrt(p(1-p)/trials) / |dp/dg|.
    double sigma_g_predicted_binomial;
    std::uint64_t edge_count;  // repetitions with p_hat exactly 0 or 1
};

// Statistics of a batch of p_hat values under the run's model.
EstimationReport summarize(const EstimationRun& run,
                           std::span<const double> p_hats);

// simulate_trials + summarize.
EstimationReport run_estimation(const EstimationRun& run,
                                unsigned workers = 0);

struct ScalingPoint {
    double n_photons;
    double g_true;
    double g_hat_std;
    double sigma_predicted;  // binomial prediction at this N
};

struct ScalingSweep {
    std::vector<ScalingPoint> points;
    double loglog_slope;  // least-squares slope of log(g_hat_std) vs log(N)
};

// Repeats the estimation across `n_grid` at fixed g N = gn_fixed (so every
// row operates at the same point of the fringe) and fits the log-log slope
// of the empirical spread; Heisenberg scaling shows up as slope -1. Each
// row draws from an independent substream of `seed`.
ScalingSweep scaling_sweep(std::span<const double> n_grid, double gn_fixed,
                           std::uint64_t trials, std::uint64_t repetitions,
                           std::uint64_t seed, Model model = Model::smallg_cos2,
                           unsigned workers = 0);

}  // namespace catmet::estimation
