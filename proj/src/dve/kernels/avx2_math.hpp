#pragma once

// AVX2 double-precision exp/log cores. Include only from translation units
// compiled with -mavx2 -mfma.

#include <immintrin.h>

#include <cmath>

namespace dve::kernels::avx2 {

// exact for 0 <= v < 2^52
inline __m256d small_int64_to_pd(__m256i v) {
  const __m256d magic = _mm256_set1_pd(4503599627370496.0);  // 2^52
  const __m256i vm = _mm256_or_si256(v, _mm256_castpd_si256(magic));
  return _mm256_sub_pd(_mm256_castsi256_pd(vm), magic);
}

// exp(x) for x in [-745, 709]; outside that range the result saturates to 0
// or +inf respectively. Classic range reduction x = n ln2 + r, |r| <= ln2/2,
// degree-13 Taylor core, exponent reassembled in two factors so that
// subnormal-range n stays exact.
inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d lo_clip = _mm256_set1_pd(-745.2);
  const __m256d hi_clip = _mm256_set1_pd(709.4);

  const __m256d too_lo = _mm256_cmp_pd(x, lo_clip, _CMP_LT_OQ);
  const __m256d too_hi = _mm256_cmp_pd(x, hi_clip, _CMP_GT_OQ);
  x = _mm256_max_pd(_mm256_min_pd(x, hi_clip), lo_clip);

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
  r = _mm256_fnmadd_pd(n, ln2_lo, r);

  // Taylor polynomial of degree 13 evaluated by Horner/FMA
  __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);  // 1/13!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

  // 2^n = 2^n1 * 2^n2 with n1 = floor(n/2): both halves stay in normal range
  const __m128i ni = _mm256_cvtpd_epi32(n);
  const __m128i n1 = _mm_srai_epi32(ni, 1);
  const __m128i n2 = _mm_sub_epi32(ni, n1);
  const __m256i bias = _mm256_set1_epi64x(1023);
  const __m256i e1 = _mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(n1), bias), 52);
  const __m256i e2 = _mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(n2), bias), 52);
  p = _mm256_mul_pd(_mm256_mul_pd(p, _mm256_castsi256_pd(e1)), _mm256_castsi256_pd(e2));

  p = _mm256_blendv_pd(p, _mm256_setzero_pd(), too_lo);
  p = _mm256_blendv_pd(p, _mm256_set1_pd(HUGE_VAL), too_hi);
  return p;
}

// log(x) for normal/subnormal positive x. Mantissa reduced to [sqrt(1/2),
// sqrt(2)), atanh-series core of degree 21 in s = (m-1)/(m+1).
inline __m256d log_pd(__m256d x) {
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d two54 = _mm256_set1_pd(18014398509481984.0);  // 2^54
  const __m256d tiny = _mm256_set1_pd(2.2250738585072014e-308);

  // lift subnormals into the normal range
  const __m256d is_tiny = _mm256_cmp_pd(x, tiny, _CMP_LT_OQ);
  x = _mm256_blendv_pd(x, _mm256_mul_pd(x, two54), is_tiny);
  const __m256d e_adj = _mm256_and_pd(is_tiny, _mm256_set1_pd(54.0));

  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i exp_raw =
      _mm256_srli_epi64(_mm256_and_si256(bits, _mm256_set1_epi64x(0x7FF0000000000000LL)), 52);
  __m256d e = _mm256_sub_pd(small_int64_to_pd(exp_raw), _mm256_set1_pd(1023.0));
  __m256d m = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                      _mm256_set1_epi64x(0x3FF0000000000000LL)));  // m in [1, 2)

  // shift m into [sqrt(1/2), sqrt(2))
  const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);
  const __m256d above = _mm256_cmp_pd(m, sqrt2, _CMP_GE_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), above);
  e = _mm256_add_pd(e, _mm256_and_pd(above, _mm256_set1_pd(1.0)));
  e = _mm256_sub_pd(e, e_adj);

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d z = _mm256_mul_pd(s, s);

  __m256d p = _mm256_set1_pd(1.0 / 21.0);
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 19.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 17.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 15.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 13.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 11.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 9.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 7.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 5.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 3.0));
  p = _mm256_fmadd_pd(p, z, one);
  const __m256d log_m = _mm256_mul_pd(_mm256_add_pd(s, s), p);

  return _mm256_fmadd_pd(e, ln2_hi, _mm256_fmadd_pd(e, ln2_lo, log_m));
}

}  // namespace dve::kernels::avx2
