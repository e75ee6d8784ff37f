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

#include "catmet/errors.hpp"

// Concrete pointer-state meters read out through the same binary
// post-selection. A Gaussian pointer of width sigma picks up a conditional
// displacement d; a plane-wave pointer picks up momentum kicks instead,
// turning displacement into pure phase. All photon counts are N >= 1.

namespace catmet::meters {

// Pointer wave packet of width sigma with conditional shift d.
struct GaussianMeter {
    double sigma;  // > 0
    double d;
};

// Monochromatic pointer e^{i p0 x} with p0 = 2 pi / wavelength.
struct PlaneWaveMeter {
    double wavelength;  // > 0

    double momentum() const;
};

// Overlap between the N-photon entangled state and the original separable
// one: exp(-N d^2 / (32 sigma^2)), the single-photon overlap raised to the
// N-th power.
double gaussian_overlap(const GaussianMeter& meter, double n_photons);

enum class DminCriterion {
    overlap,  // collective overlap fallen to e^{-1/2}: d_min = 4 sigma / sqrt(N)
    crb,      // Cramer-Rao bound 1/sqrt(N / 4 sigma^2): d_min = 2 sigma / sqrt(N)
};

// Smallest resolvable displacement under the chosen criterion. The overlap
// criterion is exactly twice the CRB one.
double gaussian_dmin(double sigma, double n_photons, DminCriterion criterion);

// Phase acquired per photon by the post-selected qubit: d * p0.
double planewave_phase(const PlaneWaveMeter& meter, double d);

// Survival probability after N photons: cos^2(2 pi d N / wavelength).
// Phases add across photons, so (d, N) and (N d, 1) agree.
double planewave_postselect(const PlaneWaveMeter& meter, double d,
                            double n_photons);

// Smallest displacement extinguishing the survival probability:
// wavelength / (4 N).
double planewave_first_zero(const PlaneWaveMeter& meter, double n_photons);

}  // namespace catmet::meters
