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

#include "catmet/analytic.hpp"

#include <cmath>

namespace catmet::analytic {

namespace {

void check_n(double n_photons) {
    if (!(n_photons >= 0.0) || !std::isfinite(n_photons)) {
        throw InvalidArgument("mean photon number must be finite and >= 0");
    }
}

}  // namespace

cdouble coherent_self_overlap(double n_photons, double g) {
    check_n(n_photons);
    const cdouble expo =
        n_photons * (std::polar(1.0, g) - cdouble{1.0, 0.0});
    return std::exp(expo);
}

double overlap_exact(double n_photons, double g) {
    check_n(n_photons);
    return std::exp(n_photons * (std::cos(g) - 1.0)) *
           std::cos(n_photons * std::sin(g));
}

double overlap_leading(double n_photons, double g) {
    check_n(n_photons);
    return std::exp(-0.5 * n_photons * g * g) * std::cos(g * n_photons);
}

OverlapResult overlap(double n_photons, double g, OverlapRegime regime) {
    const double value = regime == OverlapRegime::exact
                             ? overlap_exact(n_photons, g)
                             : overlap_leading(n_photons, g);
    return {value, regime};
}

PostselectionProbs postselect_probs(double n_photons, double g) {
    check_n(n_photons);
    const double p_plus =
        0.5 + 0.5 * std::exp(n_photons * (std::cos(2.0 * g) - 1.0)) *
                  std::cos(n_photons * std::sin(2.0 * g));
    return {p_plus, 1.0 - p_plus};
}

double postselect_prob_smallg(double n_photons, double g) {
    check_n(n_photons);
    const double c = std::cos(g * n_photons);
    return c * c;
}

double postselect_prob_derivative(double n_photons, double g) {
    check_n(n_photons);
    // d/dg of 1/2 (1 + Re exp(N(e^{2ig} - 1))): both envelope and phase
    // contribute, collapsing to a single shifted sine.
    return -n_photons * std::exp(n_photons * (std::cos(2.0 * g) - 1.0)) *
           std::sin(n_photons * std::sin(2.0 * g) + 2.0 * g);
}

double postselect_first_zero(double n_photons) {
    const double pi = std::acos(-1.0);
    if (!(n_photons > pi)) {
        throw InvalidArgument(
            "postselect_first_zero: needs N > pi for the phase condition "
            "N sin(2g) = pi to have a solution");
    }
    return 0.5 * std::asin(pi / n_photons);
}

double overlap_first_zero(double n_photons) {
    const double pi = std::acos(-1.0);
    if (!(n_photons > 0.5 * pi)) {
        throw InvalidArgument(
            "overlap_first_zero: needs N > pi/2 for the phase condition "
            "N sin(g) = pi/2 to have a solution");
    }
    return std::asin(0.5 * pi / n_photons);
}

cdouble overlap_general(const states::QubitState& qubit, cdouble alpha,
                        double g, std::size_t dim) {
    const states::JointPureState initial =
        states::make_initial_joint(qubit, alpha, dim);
    const states::JointPureState evolved = states::apply_interaction(initial, g);
    return states::inner(initial, evolved);
}

}  // namespace catmet::analytic
