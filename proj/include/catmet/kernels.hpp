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
#include <cstdint>
#include <span>

#include "catmet/errors.hpp"

// Data-parallel inner loops behind the state algebra and the sampler.
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The active variant is resolved once at startup from CPU
// capabilities and can be overridden with force_isa() or the CATMET_ISA
// environment variable ("scalar" or "avx2").
//
// Floating-point kernels may reassociate sums, so the variants agree only to
// rounding (tested at 1e-12 relative). The integer kernels (mix64 and
// bernoulli_count) are bit-identical across variants by construction.

namespace catmet::kernels {

using cdouble = std::complex<double>;

enum class Isa { scalar, avx2 };

Isa active_isa();
const char* isa_name(Isa isa);

// Test hook. Throws Error if the requested variant is not available on this
// host. Not thread-safe against concurrent kernel calls.
void force_isa(Isa isa);

// sum_i conj(a[i]) * b[i]. Sizes must match.
cdouble cdot(std::span<const cdouble> a, std::span<const cdouble> b);

// sum_i |a[i]|^2.
double norm_sq(std::span<const cdouble> a);

// a[n] *= exp(i * step * n) for n = 0..size-1.
void phase_ramp(std::span<cdouble> a, double step);

// out[i] = c0*x[i] + c1*y[i]. All three spans must have equal size; out may
// alias x or y.
void lincomb2(std::span<cdouble> out, cdouble c0, std::span<const cdouble> x,
              cdouble c1, std::span<const cdouble> y);

// --- counter-based deterministic uniform draws -----------------------------
//
// Draw t of stream `key` is mix64(key + kGamma * (t + 1)). Streams derived
// with stream_key never depend on evaluation order, so results are identical
// for any thread count and for the scalar and SIMD samplers.

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

// Decorrelated key for substream `index` of `seed`.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index);

// Threshold T such that a 53-bit draw u satisfies u < T with probability p
// (up to one part in 2^53). p <= 0 maps to 0, p >= 1 to 2^53.
std::uint64_t bernoulli_threshold(double p);

// #{ t in [0, n) : top 53 bits of draw t of `key` < threshold }.
std::uint64_t bernoulli_count(std::uint64_t key, std::uint64_t n,
                              std::uint64_t threshold);

}  // namespace catmet::kernels
