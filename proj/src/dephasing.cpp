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

#include "catmet/dephasing.hpp"

#include <cmath>

namespace catmet::dephasing {

namespace {

constexpr double kStateTolerance = 1e-10;

void check_params(double n_photons, double phi2) {
    if (!(n_photons >= 0.0) || !std::isfinite(n_photons)) {
        throw InvalidArgument("mean photon number must be finite and >= 0");
    }
    if (!(phi2 >= 0.0) || !std::isfinite(phi2)) {
        throw InvalidArgument("phase-noise variance phi2 must be finite and >= 0");
    }
}

}  // namespace

QubitDensityMatrix QubitDensityMatrix::from_entries(cdouble pp, cdouble pm,
                                                    cdouble mp, cdouble mm) {
    if (std::abs(pp.imag()) > kStateTolerance ||
        std::abs(mm.imag()) > kStateTolerance ||
        std::abs(pm - std::conj(mp)) > kStateTolerance) {
        throw NotAState("density matrix is not Hermitian");
    }
    const double a = pp.real();
    const double d = mm.real();
    if (std::abs(a + d - 1.0) > kStateTolerance) {
        throw NotAState("density matrix trace differs from 1");
    }
    // 2x2 PSD: nonnegative diagonal and determinant.
    const double det = a * d - std::norm(pm);
    if (a < -kStateTolerance || d < -kStateTolerance ||
        det < -kStateTolerance) {
        throw NotAState("density matrix is not positive semidefinite");
    }
    QubitDensityMatrix rho;
    rho.m_[0] = {a, 0.0};
    rho.m_[1] = pm;
    rho.m_[2] = std::conj(pm);
    rho.m_[3] = {d, 0.0};
    return rho;
}

double QubitDensityMatrix::purity() const {
    const double a = m_[0].real();
    const double d = m_[3].real();
    return a * a + d * d + 2.0 * std::norm(m_[1]);
}

QubitDensityMatrix::Eigensystem QubitDensityMatrix::eigensystem() const {
    const double a = m_[0].real();
    const double d = m_[3].real();
    const cdouble c = m_[1];
    const double mid = 0.5 * (a + d);
    const double split = std::hypot(0.5 * (a - d), std::abs(c));
    Eigensystem e;
    e.lambda[0] = mid + split;
    e.lambda[1] = mid - split;
    if (std::abs(c) <= 1e-15 * (std::abs(a) + std::abs(d) + 1.0)) {
        // Effectively diagonal; basis vectors ordered by eigenvalue.
        const int hi = a >= d ? 0 : 1;
        e.vec[0][hi] = 1.0;
        e.vec[0][1 - hi] = 0.0;
        e.vec[1][hi] = 0.0;
        e.vec[1][1 - hi] = 1.0;
        return e;
    }
    // (c, lambda - a) solves the eigenproblem whenever c != 0, and the two
    // resulting vectors are orthogonal.
    for (int k = 0; k < 2; ++k) {
        const cdouble v0 = c;
        const cdouble v1 = {e.lambda[k] - a, 0.0};
        const double inv = 1.0 / std::sqrt(std::norm(v0) + std::norm(v1));
        e.vec[k][0] = v0 * inv;
        e.vec[k][1] = v1 * inv;
    }
    return e;
}

double expectation_value(const QubitDensityMatrix& rho, cdouble c_plus,
                         cdouble c_minus) {
    const cdouble v[2] = {c_plus, c_minus};
    cdouble acc = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int col = 0; col < 2; ++col) {
            acc += std::conj(v[r]) * rho(r, col) * v[col];
        }
    }
    return acc.real();
}

QubitDensityMatrix dephased_qubit(double n_photons, double g, double phi2) {
    check_params(n_photons, phi2);
    const double damp = std::exp(-2.0 * n_photons * n_photons * phi2);
    const cdouble coher = 0.5 * std::polar(damp, 2.0 * g * n_photons);
    return QubitDensityMatrix::from_entries({0.5, 0.0}, coher,
                                            std::conj(coher), {0.5, 0.0});
}

double dephased_overlap_sq(double n_photons, double g, double phi2) {
    check_params(n_photons, phi2);
    const double damp = std::exp(-2.0 * n_photons * n_photons * phi2);
    return 0.5 * (1.0 + std::cos(2.0 * g * n_photons) * damp);
}

double dephased_qfi_closed_form(double n_photons, double phi2) {
    check_params(n_photons, phi2);
    return 4.0 * n_photons * n_photons *
           std::exp(-4.0 * n_photons * n_photons * phi2);
}

std::vector<DephasingPoint> dephasing_sweep(double n_photons, double g,
                                            std::span<const double> phi2_grid) {
    for (std::size_t i = 0; i < phi2_grid.size(); ++i) {
        if (!(phi2_grid[i] >= 0.0)) {
            throw InvalidArgument("dephasing_sweep: grid must be nonnegative");
        }
        if (i > 0 && !(phi2_grid[i] > phi2_grid[i - 1])) {
            throw InvalidArgument(
                "dephasing_sweep: grid must be strictly increasing");
        }
    }
    std::vector<DephasingPoint> out;
    out.reserve(phi2_grid.size());
    for (const double phi2 : phi2_grid) {
        out.push_back({phi2, dephased_overlap_sq(n_photons, g, phi2),
                       dephased_qfi_closed_form(n_photons, phi2)});
    }
    return out;
}

}  // namespace catmet::dephasing
