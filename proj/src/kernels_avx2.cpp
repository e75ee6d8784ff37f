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

// AVX2+FMA kernels. This translation unit is compiled with -mavx2 -mfma and
// must only be entered through the dispatch table after a CPU check.

#include <cmath>
#include <immintrin.h>

#include "kernels_detail.hpp"

namespace catmet::kernels::detail {

namespace {

// Packed complex multiply: lanes (0,1) and (2,3) are independent complex
// numbers. even = ar*br - ai*bi, odd = ar*bi + ai*br.
inline __m256d cmul(__m256d a, __m256d b) {
    __m256d a_re = _mm256_movedup_pd(a);
    __m256d a_im = _mm256_permute_pd(a, 0xF);
    __m256d b_sw = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

cdouble cdot_avx2(const cdouble* a, const cdouble* b, std::size_t n) {
    __m256d acc_p = _mm256_setzero_pd();  // [ar*br, ai*bi, ...]
    __m256d acc_s = _mm256_setzero_pd();  // [ar*bi, ai*br, ...]
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
        __m256d vb = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
        acc_p = _mm256_fmadd_pd(va, vb, acc_p);
        acc_s = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), acc_s);
    }
    double p[4], s[4];
    _mm256_storeu_pd(p, acc_p);
    _mm256_storeu_pd(s, acc_s);
    double re = (p[0] + p[1]) + (p[2] + p[3]);
    double im = (s[0] - s[1]) + (s[2] - s[3]);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm_sq_avx2(const cdouble* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double q[4];
    _mm256_storeu_pd(q, acc);
    double s = (q[0] + q[1]) + (q[2] + q[3]);
    for (; i < n; ++i) {
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return s;
}

void phase_ramp_avx2(cdouble* a, std::size_t n, double step) {
    // Rotor recurrence drifts by ~eps per complex multiply; resync from
    // libm every kResync elements to keep the drift below the 1e-12
    // equivalence budget.
    constexpr std::size_t kResync = 64;
    const double c2 = std::cos(2.0 * step);
    const double s2 = std::sin(2.0 * step);
    const __m256d w2 = _mm256_setr_pd(c2, s2, c2, s2);
    std::size_t i = 0;
    while (i + 2 <= n) {
        const double t0 = step * static_cast<double>(i);
        const double t1 = step * static_cast<double>(i + 1);
        __m256d rot = _mm256_setr_pd(std::cos(t0), std::sin(t0),
                                     std::cos(t1), std::sin(t1));
        const std::size_t stop = std::min(i + kResync, n);
        for (; i + 2 <= stop; i += 2) {
            __m256d v =
                _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
            _mm256_storeu_pd(reinterpret_cast<double*>(a + i), cmul(v, rot));
            rot = cmul(rot, w2);
        }
    }
    for (; i < n; ++i) {
        a[i] *= std::polar(1.0, step * static_cast<double>(i));
    }
}

void lincomb2_avx2(cdouble* out, cdouble c0, const cdouble* x, cdouble c1,
                   const cdouble* y, std::size_t n) {
    const __m256d c0v = _mm256_setr_pd(c0.real(), c0.imag(), c0.real(), c0.imag());
    const __m256d c1v = _mm256_setr_pd(c1.real(), c1.imag(), c1.real(), c1.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        __m256d r = _mm256_add_pd(cmul(c0v, vx), cmul(c1v, vy));
        _mm256_storeu_pd(reinterpret_cast<double*>(out + i), r);
    }
    for (; i < n; ++i) {
        out[i] = c0 * x[i] + c1 * y[i];
    }
}

// Four independent 64-bit lanes of key + kGamma*(t+1), finalized in
// parallel. Bit-identical to the scalar sampler: same counter sequence,
// same finalizer, same threshold compare.
inline __m256i mul64(__m256i a, __m256i b) {
    __m256i a_hi = _mm256_srli_epi64(a, 32);
    __m256i b_hi = _mm256_srli_epi64(b, 32);
    __m256i lo = _mm256_mul_epu32(a, b);
    __m256i cross =
        _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

std::uint64_t bernoulli_count_avx2(std::uint64_t key, std::uint64_t n,
                                   std::uint64_t threshold) {
    const __m256i mul1 = _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ULL));
    const __m256i mul2 = _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBULL));
    const __m256i step4 = _mm256_set1_epi64x(static_cast<long long>(4 * kGamma));
    const __m256i thr = _mm256_set1_epi64x(static_cast<long long>(threshold));
    __m256i state = _mm256_setr_epi64x(static_cast<long long>(key + 1 * kGamma),
                                       static_cast<long long>(key + 2 * kGamma),
                                       static_cast<long long>(key + 3 * kGamma),
                                       static_cast<long long>(key + 4 * kGamma));
    __m256i hits = _mm256_setzero_si256();
    std::uint64_t t = 0;
    for (; t + 4 <= n; t += 4) {
        __m256i z = state;
        z = mul64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)), mul1);
        z = mul64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)), mul2);
        z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
        __m256i u = _mm256_srli_epi64(z, 11);
        // Both sides are < 2^63, so the signed compare is exact.
        hits = _mm256_sub_epi64(hits, _mm256_cmpgt_epi64(thr, u));
        state = _mm256_add_epi64(state, step4);
    }
    std::uint64_t h[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(h), hits);
    std::uint64_t count = h[0] + h[1] + h[2] + h[3];
    for (; t < n; ++t) {
        if ((mix64(key + kGamma * (t + 1)) >> 11) < threshold) {
            ++count;
        }
    }
    return count;
}

}  // namespace

const KernelTable avx2_table = {
    cdot_avx2, norm_sq_avx2, phase_ramp_avx2, lincomb2_avx2,
    bernoulli_count_avx2,
};

}  // namespace catmet::kernels::detail
