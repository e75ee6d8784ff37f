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
#include <span>
#include <vector>

#include "catmet/errors.hpp"

// Reduced qubit state under Gaussian phase noise on the interaction
// strength: averaging e^{2igN} over g-jitter of variance phi2 damps the
// coherence by e^{-2 N^2 phi2} while the populations stay put.

namespace catmet::dephasing {

using cdouble = std::complex<double>;

// 2x2 density matrix in the qubit basis (row/column 0 = |+>, 1 = |->).
class QubitDensityMatrix {
  public:
    // Validates hermiticity, unit trace and positivity (tolerance 1e-10);
    // throws NotAState otherwise.
    static QubitDensityMatrix from_entries(cdouble pp, cdouble pm, cdouble mp,
                                           cdouble mm);

    cdouble operator()(int row, int col) const { return m_[row * 2 + col]; }

    double purity() const;  // Re tr(rho^2)

    // Eigenvalues in descending order with orthonormal eigenvectors;
    // vec[k] is the eigenvector for lambda[k], components in basis order.
    struct Eigensystem {
        double lambda[2];
        cdouble vec[2][2];
    };
    Eigensystem eigensystem() const;

  private:
    QubitDensityMatrix() = default;
    cdouble m_[4];
};

// <psi|rho|psi> for psi = c_plus|+> + c_minus|->.
double expectation_value(const QubitDensityMatrix& rho, cdouble c_plus,
                         cdouble c_minus);

// Reduced qubit state for mean photon number N, interaction g, and g-jitter
// variance phi2: populations 1/2, coherence (1/2) e^{2igN - 2 N^2 phi2}.
QubitDensityMatrix dephased_qubit(double n_photons, double g, double phi2);

// Survival probability |<psi_i|psi(g)>|^2 under dephasing:
// (1/2)(1 + cos(2gN) e^{-2 N^2 phi2}). Reduces to cos^2(gN) at phi2 = 0.
double dephased_overlap_sq(double n_photons, double g, double phi2);

// Quantum Fisher information of the dephased family, closed form:
// 4 N^2 e^{-4 N^2 phi2}.
double dephased_qfi_closed_form(double n_photons, double phi2);

struct DephasingPoint {
    double phi2;
    double overlap_sq;
    double qfi;
};

// Tabulates overlap_sq and the closed-form QFI over a grid of phi2 values.
// The grid must be nonnegative and strictly increasing.
std::vector<DephasingPoint> dephasing_sweep(double n_photons, double g,
                                            std::span<const double> phi2_grid);

}  // namespace catmet::dephasing
