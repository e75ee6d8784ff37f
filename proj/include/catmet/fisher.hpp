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
#include <functional>
#include <vector>

#include "catmet/dephasing.hpp"
#include "catmet/states.hpp"

// Quantum and classical Fisher information in the interaction strength g.
// Pure-state and mixed-state QFI are evaluated by central finite
// differences with a built-in step-halving consistency check; closed forms
// exist only where stated.

namespace catmet::fisher {

using cdouble = std::complex<double>;

enum class Method { pure_fd, sld, classical_binary, closed_form };

const char* method_name(Method m);

struct FisherReport {
    double fisher;
    double crb;  // 1/sqrt(fisher); +inf when fisher == 0
    Method method;
};

FisherReport make_report(double fisher, Method method);

// g -> normalized amplitude vector (any fixed length).
using AmplitudeFamily = std::function<std::vector<cdouble>(double)>;
// g -> joint qubit (x) field state.
using StateFamily = std::function<states::JointPureState(double)>;
// g -> reduced qubit density matrix.
using DensityFamily = std::function<dephasing::QubitDensityMatrix(double)>;

// Default central-difference step, 1e-3 / max(1, N): phases grow like N*g,
// so the step must shrink with N to stay in the quadratic regime.
double qfi_step_for(double n_photons);

// Pure-state QFI 4 (<d psi|d psi> - |<d psi|psi>|^2) by central differences
// at the given step, cross-checked against step/2 (results must agree to
// 1%; otherwise StepTooLarge). Family outputs must stay normalized to 1e-8
// or NotAState is thrown.
FisherReport qfi_pure(const AmplitudeFamily& family, double g, double step);
FisherReport qfi_pure(const StateFamily& family, double g, double step);

// Mixed-state QFI via the symmetric logarithmic derivative:
// F = sum_{jk} 2 |<j|d rho|k>|^2 / (lambda_j + lambda_k), pairs with
// lambda_j + lambda_k below 1e-12 dropped. Same step-halving check.
FisherReport qfi_mixed_sld(const DensityFamily& family, double g, double step);

// Closed-form QFI N / (4 sigma^2) for a Gaussian meter of width sigma whose
// pointer is displaced by +/- d(g) with d'(g) = 1 per photon.
FisherReport qfi_gaussian_meter(double n_photons, double sigma);

// Classical Fisher information (dp/dg)^2 / (p_plus p_minus) of the binary
// post-selection outcome, with the exact p_plus and its analytic
// derivative. Throws DeterministicOutcome when either outcome probability
// is below 1e-12.
FisherReport cfi_postselection(double n_photons, double g);

// --- parameterized families -------------------------------------------------

// Qubit-field cat family: qubit prepared in `qubit`, field coherent alpha,
// entangled by the interaction at strength g. QFI 4(N^2 + N) for the
// symmetric qubit.
StateFamily cat_state_family(const states::QubitState& qubit, cdouble alpha,
                             std::size_t dim);

// Field-only family |alpha e^{ig}>: what the field alone can resolve,
// QFI 4N.
AmplitudeFamily coherent_rotation_family(cdouble alpha, std::size_t dim);

// Normalized field state conditioned on post-selecting `post` after the
// interaction. Throws DegenerateProjection through qfi_pure if the
// post-selection probability collapses under the floor.
AmplitudeFamily conditional_meter_family(const states::QubitState& pre,
                                         const states::QubitState& post,
                                         cdouble alpha, std::size_t dim);

// Reduced qubit family at fixed phase-noise variance phi2; QFI closed form
// 4 N^2 e^{-4 N^2 phi2}.
DensityFamily dephased_qubit_family(double n_photons, double phi2);

}  // namespace catmet::fisher
