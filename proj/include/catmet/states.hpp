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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "catmet/errors.hpp"

// Truncated Fock-space state algebra for one qubit coupled to one field
// mode. Conventions, fixed for the whole library:
//   * hbar = 1, all angles in radians.
//   * Qubit basis |+>, |->; a general pure qubit state is
//     cos(theta/2)|-> + sin(theta/2) e^{i phi}|+>.
//   * The interaction exp(i g sigma_z n) acts with sigma_z|+/-> = -/+|+/->,
//     so the |-> sector picks up e^{+ign} and the |+> sector e^{-ign}.

namespace catmet::states {

using cdouble = std::complex<double>;

// Probability mass allowed above the Fock cutoff.
inline constexpr double kTailTolerance = 1e-12;

// Below this outcome probability a conditional state is unreliable.
inline constexpr double kProbabilityFloor = 1e-12;

struct QubitState {
    double theta = 0.0;  // polar angle in [0, pi]
    double phi = 0.0;    // azimuthal phase

    cdouble amp_plus() const { return std::polar(std::sin(theta / 2.0), phi); }
    cdouble amp_minus() const { return {std::cos(theta / 2.0), 0.0}; }
};

// The symmetric superposition (|+> + |->)/sqrt(2) used as pre- and
// post-selection throughout.
inline QubitState symmetric_qubit() {
    return QubitState{std::acos(-1.0) / 2.0, 0.0};
}

// sum_{n >= from} e^{-mean} mean^n / n!.
double poisson_tail(double mean, std::size_t from);

// Smallest cutoff whose Poisson tail is comfortably below kTailTolerance
// for a coherent state of this mean photon number.
std::size_t default_fock_dim(double mean_photons);

// Amplitudes over number states 0..dim-1.
struct TruncatedFockVector {
    std::vector<cdouble> amps;

    std::size_t dim() const { return amps.size(); }
    double norm_sq() const;
};

// Coherent state |alpha> truncated to `dim` number states. Throws
// TruncationInsufficient if the neglected tail exceeds kTailTolerance.
TruncatedFockVector make_coherent(cdouble alpha, std::size_t dim);

// Qubit (x) field pure state. Sector 0 holds the |-> field amplitudes,
// sector 1 the |+> ones, contiguously.
class JointPureState {
  public:
    explicit JointPureState(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::span<cdouble> sector(int s);
    std::span<const cdouble> sector(int s) const;
    std::span<const cdouble> amplitudes() const { return amps_; }
    double norm_sq() const;

  private:
    std::size_t dim_;
    std::vector<cdouble> amps_;
};

// |qubit> (x) |alpha>, truncated to `dim`.
JointPureState make_initial_joint(const QubitState& qubit, cdouble alpha,
                                  std::size_t dim);

// Applies exp(i g sigma_z n): phase ramp e^{+ign} on the |-> sector and
// e^{-ign} on the |+> sector.
JointPureState apply_interaction(JointPureState state, double g);

// <a|b>. Dimensions must match.
cdouble inner(const JointPureState& a, const JointPureState& b);

// Outcome of projecting the qubit of a joint state onto `target`.
struct Projection {
    double probability = 0.0;
    // Normalized field state conditioned on the outcome; empty when the
    // probability is below kProbabilityFloor.
    std::optional<TruncatedFockVector> meter_state;

    const TruncatedFockVector& meter() const {
        if (!meter_state) {
            throw DegenerateProjection(
                "conditional state requested for an outcome below the "
                "probability floor");
        }
        return *meter_state;
    }
};

Projection project_qubit(const JointPureState& state,
                         const QubitState& target);

}  // namespace catmet::states
