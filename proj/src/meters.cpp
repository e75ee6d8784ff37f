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

#include "catmet/meters.hpp"

#include <cmath>

namespace catmet::meters {

namespace {

void check_photons(double n_photons) {
    if (!(n_photons >= 1.0) || !std::isfinite(n_photons)) {
        throw InvalidArgument("photon number must be finite and >= 1");
    }
}

void check_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidArgument("Gaussian meter width must be finite and positive");
    }
}

void check_plane(const PlaneWaveMeter& meter) {
    if (!(meter.wavelength > 0.0) || !std::isfinite(meter.wavelength)) {
        throw InvalidArgument("wavelength must be finite and positive");
    }
}

}  // namespace

double PlaneWaveMeter::momentum() const {
    check_plane(*this);
    return 2.0 * std::acos(-1.0) / wavelength;
}

double gaussian_overlap(const GaussianMeter& meter, double n_photons) {
    check_sigma(meter.sigma);
    check_photons(n_photons);
    return std::exp(-n_photons * meter.d * meter.d /
                    (32.0 * meter.sigma * meter.sigma));
}

double gaussian_dmin(double sigma, double n_photons, DminCriterion criterion) {
    check_sigma(sigma);
    check_photons(n_photons);
    const double base = sigma / std::sqrt(n_photons);
    return criterion == DminCriterion::overlap ? 4.0 * base : 2.0 * base;
}

double planewave_phase(const PlaneWaveMeter& meter, double d) {
    return d * meter.momentum();
}

double planewave_postselect(const PlaneWaveMeter& meter, double d,
                            double n_photons) {
    check_photons(n_photons);
    const double c = std::cos(planewave_phase(meter, d) * n_photons);
    return c * c;
}

double planewave_first_zero(const PlaneWaveMeter& meter, double n_photons) {
    check_plane(meter);
    check_photons(n_photons);
    return meter.wavelength / (4.0 * n_photons);
}

}  // namespace catmet::meters
