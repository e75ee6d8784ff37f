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

#include <stdexcept>
#include <string>

namespace catmet {

// Base class for every error thrown by this library. Anything not derived
// from Error escaping a catmet call is a bug, not a usage problem.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition on arguments was violated (bad dimension request, negative
// width, parameter outside its documented domain, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

// The requested Fock-space cutoff leaves more than the allowed probability
// mass above the truncation.
struct TruncationInsufficient : Error {
    using Error::Error;
};

// Two states or arrays that must share a dimension do not.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A conditional state was requested for an outcome whose probability is
// below the reliability floor; the normalized state would be garbage.
struct DegenerateProjection : Error {
    using Error::Error;
};

// A finite-difference step failed its self-consistency check; the requested
// derivative cannot be trusted at this step size.
struct StepTooLarge : Error {
    using Error::Error;
};

// An object that must be a valid quantum state (normalized vector, or a
// Hermitian positive-semidefinite unit-trace matrix) is not.
struct NotAState : Error {
    using Error::Error;
};

// A binary outcome distribution is degenerate (one outcome has essentially
// all the probability), so conditional quantities are undefined.
struct DeterministicOutcome : Error {
    using Error::Error;
};

// The sensitivity |dp/dg| underlying an error propagation is below the
// floor where the linearized estimate means anything.
struct SensitivityVanishing : Error {
    using Error::Error;
};

}  // namespace catmet
