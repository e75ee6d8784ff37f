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

#include "catmet/states.hpp"

// Closed forms for the symmetric pre/post-selection configuration
// (qubit prepared and read out in (|+> + |->)/sqrt(2), field coherent with
// mean photon number N). Each one is validated against the truncated
// Fock-space algebra in the tests; general Bloch angles go through
// overlap_general, which routes through that algebra directly.

namespace catmet::analytic {

using cdouble = std::complex<double>;

// <alpha | alpha e^{ig}> = exp(N (e^{ig} - 1)).
cdouble coherent_self_overlap(double n_photons, double g);

// Exact survival amplitude <Psi(0)|Psi(g)>:
// e^{N(cos g - 1)} cos(N sin g). Real by symmetry.
double overlap_exact(double n_photons, double g);

// Leading small-g form e^{-N g^2 / 2} cos(g N).
double overlap_leading(double n_photons, double g);

enum class OverlapRegime { exact, leading_order };

struct OverlapResult {
    double value;
    OverlapRegime regime;
};

OverlapResult overlap(double n_photons, double g, OverlapRegime regime);

// Post-selection probabilities after the interaction:
// p_plus = 1/2 + 1/2 e^{N(cos 2g - 1)} cos(N sin 2g), p_minus = 1 - p_plus.
struct PostselectionProbs {
    double p_plus;
    double p_minus;
};

PostselectionProbs postselect_probs(double n_photons, double g);

// Small-g limit cos^2(g N) of p_plus.
double postselect_prob_smallg(double n_photons, double g);

// d p_plus / d g, exact:
// -N e^{N(cos 2g - 1)} sin(N sin 2g + 2g).
double postselect_prob_derivative(double n_photons, double g);

// g solving N sin(2g) = pi: the phase condition placing the oscillatory
// factor of p_plus at its first minimum, the exact analog of the first zero
// of the small-g form cos^2(gN) at 2gN = pi. Sits within O(1/N^3) of
// pi/(2N). Requires N > pi. (The global minimum of p_plus itself is pulled
// to smaller g by the decaying envelope, by an offset of order 1/N^2.)
double postselect_first_zero(double n_photons);

// g solving N sin(g) = pi/2, the first zero of the exact survival
// amplitude. Sits within O(1/N^3) of pi/(2N). Requires N > pi/2.
double overlap_first_zero(double n_photons);

// <Psi(0)|Psi(g)> for arbitrary pre-selection, evaluated in the truncated
// Fock basis (the oracle path; no closed form assumed).
cdouble overlap_general(const states::QubitState& qubit, cdouble alpha,
                        double g, std::size_t dim);

}  // namespace catmet::analytic
