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

#include "catmet/states.hpp"

#include <cmath>
#include <string>

#include "catmet/kernels.hpp"

namespace catmet::states {

double poisson_tail(double mean, std::size_t from) {
    if (!(mean >= 0.0)) {
        throw InvalidArgument("poisson_tail: mean must be >= 0");
    }
    if (mean == 0.0) {
        return from == 0 ? 1.0 : 0.0;
    }
    if (from == 0) {
        return 1.0;
    }
    // Forward recurrence from the first neglected term. Every term is
    // positive, so there is no cancellation; the sum converges once terms
    // pass the mode near n = mean.
    const double nf = static_cast<double>(from);
    double term =
        std::exp(-mean + nf * std::log(mean) - std::lgamma(nf + 1.0));
    double sum = 0.0;
    for (std::size_t n = from;; ++n) {
        sum += term;
        term *= mean / static_cast<double>(n + 1);
        if (term < sum * 1e-18 + 1e-300) {
            break;
        }
    }
    return sum;
}

std::size_t default_fock_dim(double mean_photons) {
    if (!(mean_photons >= 0.0)) {
        throw InvalidArgument("default_fock_dim: mean photon number must be >= 0");
    }
    return static_cast<std::size_t>(
        std::ceil(mean_photons + 12.0 * std::sqrt(mean_photons) + 20.0));
}

double TruncatedFockVector::norm_sq() const { return kernels::norm_sq(amps); }

TruncatedFockVector make_coherent(cdouble alpha, std::size_t dim) {
    if (dim < 1) {
        throw InvalidArgument("make_coherent: dim must be >= 1");
    }
    const double mean = std::norm(alpha);
    const double tail = poisson_tail(mean, dim);
    if (!(tail < kTailTolerance)) {
        throw TruncationInsufficient(
            "make_coherent: dim " + std::to_string(dim) +
            " leaves probability " + std::to_string(tail) +
            " above the cutoff for mean photon number " +
            std::to_string(mean) + " (need dim >= " +
            std::to_string(default_fock_dim(mean)) + ")");
    }
    TruncatedFockVector v;
    v.amps.resize(dim);
    if (mean == 0.0) {
        v.amps[0] = 1.0;
        return v;
    }
    // Magnitudes evaluated in the log domain; the naive recurrence from
    // amps[0] = e^{-mean/2} underflows once mean exceeds ~1400.
    const double log_r = 0.5 * std::log(mean);
    const double chi = std::arg(alpha);
    for (std::size_t n = 0; n < dim; ++n) {
        const double nf = static_cast<double>(n);
        const double log_mag =
            -0.5 * mean + nf * log_r - 0.5 * std::lgamma(nf + 1.0);
        v.amps[n] = std::polar(std::exp(log_mag), chi * nf);
    }
    return v;
}

JointPureState::JointPureState(std::size_t dim) : dim_(dim), amps_(2 * dim) {
    if (dim < 1) {
        throw InvalidArgument("JointPureState: dim must be >= 1");
    }
}

std::span<cdouble> JointPureState::sector(int s) {
    return std::span<cdouble>(amps_.data() + static_cast<std::size_t>(s) * dim_,
                              dim_);
}

std::span<const cdouble> JointPureState::sector(int s) const {
    return std::span<const cdouble>(
        amps_.data() + static_cast<std::size_t>(s) * dim_, dim_);
}

double JointPureState::norm_sq() const { return kernels::norm_sq(amps_); }

JointPureState make_initial_joint(const QubitState& qubit, cdouble alpha,
                                  std::size_t dim) {
    const TruncatedFockVector field = make_coherent(alpha, dim);
    const cdouble a_minus = qubit.amp_minus();
    const cdouble a_plus = qubit.amp_plus();
    JointPureState state(dim);
    auto lower = state.sector(0);
    auto upper = state.sector(1);
    for (std::size_t n = 0; n < dim; ++n) {
        lower[n] = a_minus * field.amps[n];
        upper[n] = a_plus * field.amps[n];
    }
    return state;
}

JointPureState apply_interaction(JointPureState state, double g) {
    kernels::phase_ramp(state.sector(0), +g);
    kernels::phase_ramp(state.sector(1), -g);
    return state;
}

cdouble inner(const JointPureState& a, const JointPureState& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("inner: joint states of dim " +
                                std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    }
    return kernels::cdot(a.amplitudes(), b.amplitudes());
}

Projection project_qubit(const JointPureState& state,
                         const QubitState& target) {
    // <target| acts on the qubit alone:
    // m = conj(a_minus) * sector0 + conj(a_plus) * sector1.
    const cdouble c_minus = std::conj(target.amp_minus());
    const cdouble c_plus = std::conj(target.amp_plus());
    TruncatedFockVector m;
    m.amps.resize(state.dim());
    kernels::lincomb2(m.amps, c_minus, state.sector(0), c_plus,
                      state.sector(1));
    const double p = kernels::norm_sq(m.amps);
    Projection out;
    out.probability = p;
    if (p < kProbabilityFloor) {
        return out;
    }
    const double inv = 1.0 / std::sqrt(p);
    for (auto& a : m.amps) {
        a *= inv;
    }
    out.meter_state = std::move(m);
    return out;
}

}  // namespace catmet::states
