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

#include "catmet/fisher.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "catmet/analytic.hpp"
#include "catmet/kernels.hpp"

namespace catmet::fisher {

namespace {

constexpr double kNormTolerance = 1e-8;
constexpr double kStepAgreement = 1e-2;
constexpr double kEigenvalueFloor = 1e-12;
constexpr double kProbFloor = 1e-12;

void check_step(double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw InvalidArgument("finite-difference step must be positive");
    }
}

// 4 (<d|d> - |<d|psi0>|^2) with d the central difference at step h.
double pure_fd_once(const AmplitudeFamily& family,
                    const std::vector<cdouble>& psi0, double g, double h) {
    const std::vector<cdouble> plus = family(g + h);
    const std::vector<cdouble> minus = family(g - h);
    if (plus.size() != psi0.size() || minus.size() != psi0.size()) {
        throw DimensionMismatch(
            "state family changed dimension across the difference stencil");
    }
    std::vector<cdouble> d(psi0.size());
    const double inv = 1.0 / (2.0 * h);
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = (plus[i] - minus[i]) * inv;
    }
    const double dd = kernels::norm_sq(d);
    const cdouble overlap = kernels::cdot(d, psi0);
    return 4.0 * (dd - std::norm(overlap));
}

// Two evaluations at h and h/2 must agree to kStepAgreement (relative,
// with an absolute floor so flat families at F ~ 0 pass).
double with_step_check(double at_h, double at_half, double h) {
    const double scale = std::max(std::abs(at_half), 1.0);
    if (std::abs(at_h - at_half) > kStepAgreement * scale) {
        throw StepTooLarge(
            "finite-difference step " + std::to_string(h) +
            " fails the step-halving check; the family varies too fast");
    }
    return at_half;
}

double clamp_fisher(double f) {
    // Cauchy-Schwarz keeps the exact value nonnegative; only rounding can
    // push it below zero.
    return f < 0.0 ? 0.0 : f;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::pure_fd: return "pure_fd";
        case Method::sld: return "sld";
        case Method::classical_binary: return "classical_binary";
        case Method::closed_form: return "closed_form";
    }
    return "unknown";
}

FisherReport make_report(double fisher, Method method) {
    const double crb = fisher > 0.0
                           ? 1.0 / std::sqrt(fisher)
                           : std::numeric_limits<double>::infinity();
    return {fisher, crb, method};
}

double qfi_step_for(double n_photons) {
    return 1e-3 / std::max(1.0, n_photons);
}

FisherReport qfi_pure(const AmplitudeFamily& family, double g, double step) {
    check_step(step);
    const std::vector<cdouble> psi0 = family(g);
    const double nrm = kernels::norm_sq(psi0);
    if (std::abs(nrm - 1.0) > kNormTolerance) {
        throw NotAState("state family output has norm^2 " +
                        std::to_string(nrm) + "; must be normalized");
    }
    const double f_h = pure_fd_once(family, psi0, g, step);
    const double f_half = pure_fd_once(family, psi0, g, 0.5 * step);
    const double f = with_step_check(f_h, f_half, step);
    return make_report(clamp_fisher(f), Method::pure_fd);
}

FisherReport qfi_pure(const StateFamily& family, double g, double step) {
    AmplitudeFamily amps = [&family](double x) {
        const states::JointPureState s = family(x);
        const auto span = s.amplitudes();
        return std::vector<cdouble>(span.begin(), span.end());
    };
    return qfi_pure(amps, g, step);
}

FisherReport qfi_mixed_sld(const DensityFamily& family, double g,
                           double step) {
    check_step(step);
    const dephasing::QubitDensityMatrix rho = family(g);
    const dephasing::QubitDensityMatrix plus = family(g + step);
    const dephasing::QubitDensityMatrix minus = family(g - step);

    const auto sld_once = [&rho](const dephasing::QubitDensityMatrix& p,
                                 const dephasing::QubitDensityMatrix& m,
                                 double h) {
        cdouble drho[2][2];
        const double inv = 1.0 / (2.0 * h);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                drho[r][c] = (p(r, c) - m(r, c)) * inv;
            }
        }
        const auto eig = rho.eigensystem();
        double f = 0.0;
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                const double denom = eig.lambda[j] + eig.lambda[k];
                if (denom <= kEigenvalueFloor) {
                    continue;
                }
                cdouble elem = 0.0;
                for (int r = 0; r < 2; ++r) {
                    for (int c = 0; c < 2; ++c) {
                        elem += std::conj(eig.vec[j][r]) * drho[r][c] *
                                eig.vec[k][c];
                    }
                }
                f += 2.0 * std::norm(elem) / denom;
            }
        }
        return f;
    };

    const double f_h = sld_once(plus, minus, step);
    const dephasing::QubitDensityMatrix plus_h = family(g + 0.5 * step);
    const dephasing::QubitDensityMatrix minus_h = family(g - 0.5 * step);
    const double f_half = sld_once(plus_h, minus_h, 0.5 * step);
    const double f = with_step_check(f_h, f_half, step);
    return make_report(clamp_fisher(f), Method::sld);
}

FisherReport qfi_gaussian_meter(double n_photons, double sigma) {
    if (!(n_photons >= 0.0)) {
        throw InvalidArgument("mean photon number must be >= 0");
    }
    if (!(sigma > 0.0)) {
        throw InvalidArgument("Gaussian meter width must be positive");
    }
    return make_report(n_photons / (4.0 * sigma * sigma),
                       Method::closed_form);
}

FisherReport cfi_postselection(double n_photons, double g) {
    const auto [p_plus, p_minus] = analytic::postselect_probs(n_photons, g);
    if (p_plus < kProbFloor || p_minus < kProbFloor) {
        throw DeterministicOutcome(
            "post-selection outcome is essentially deterministic; the "
            "binary Fisher information is undefined");
    }
    const double dp = analytic::postselect_prob_derivative(n_photons, g);
    return make_report(dp * dp / (p_plus * p_minus),
                       Method::classical_binary);
}

StateFamily cat_state_family(const states::QubitState& qubit, cdouble alpha,
                             std::size_t dim) {
    const states::JointPureState initial =
        states::make_initial_joint(qubit, alpha, dim);
    return [initial](double g) {
        return states::apply_interaction(initial, g);
    };
}

AmplitudeFamily coherent_rotation_family(cdouble alpha, std::size_t dim) {
    const states::TruncatedFockVector base = states::make_coherent(alpha, dim);
    // |alpha e^{ig}> differs from |alpha> by the phase ramp e^{ign}.
    return [base](double g) {
        std::vector<cdouble> amps = base.amps;
        kernels::phase_ramp(amps, g);
        return amps;
    };
}

AmplitudeFamily conditional_meter_family(const states::QubitState& pre,
                                         const states::QubitState& post,
                                         cdouble alpha, std::size_t dim) {
    const states::JointPureState initial =
        states::make_initial_joint(pre, alpha, dim);
    return [initial, post](double g) {
        const states::JointPureState evolved =
            states::apply_interaction(initial, g);
        states::Projection proj = states::project_qubit(evolved, post);
        if (!proj.meter_state) {
            throw DegenerateProjection(
                "post-selection probability below the floor; no conditional "
                "meter state");
        }
        return std::move(proj.meter_state->amps);
    };
}

DensityFamily dephased_qubit_family(double n_photons, double phi2) {
    return [n_photons, phi2](double g) {
        return dephasing::dephased_qubit(n_photons, g, phi2);
    };
}

}  // namespace catmet::fisher
