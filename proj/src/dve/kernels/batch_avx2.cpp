// Compiled with -mavx2 -mfma; entered only after the runtime CPU check.

#include <cmath>

#include "dve/entropy/eta.hpp"
#include "dve/kernels/avx2_math.hpp"
#include "dve/kernels/batch.hpp"

namespace dve::kernels::detail {

namespace {

using avx2::exp_pd;
using avx2::log_pd;

// eta_kappa on four lanes; lanes outside (0,1) are zeroed.
template <bool kVonNeumann>
inline __m256d eta_pd(double kappa, __m256d t) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d inside =
      _mm256_and_pd(_mm256_cmp_pd(t, zero, _CMP_GT_OQ), _mm256_cmp_pd(t, one, _CMP_LT_OQ));
  // clamp masked-out lanes to 1/2 so the transcendentals stay in-domain
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d tc = _mm256_blendv_pd(half, t, inside);
  const __m256d uc = _mm256_sub_pd(one, tc);
  __m256d r;
  if constexpr (kVonNeumann) {
    r = _mm256_sub_pd(_mm256_setzero_pd(),
                      _mm256_fmadd_pd(tc, log_pd(tc), _mm256_mul_pd(uc, log_pd(uc))));
  } else {
    const __m256d k = _mm256_set1_pd(kappa);
    const __m256d tk = exp_pd(_mm256_mul_pd(k, log_pd(tc)));
    const __m256d uk = exp_pd(_mm256_mul_pd(k, log_pd(uc)));
    const __m256d inv = _mm256_set1_pd(1.0 / (1.0 - kappa));
    r = _mm256_mul_pd(log_pd(_mm256_add_pd(tk, uk)), inv);
  }
  return _mm256_and_pd(r, inside);
}

template <bool kVonNeumann>
double eta_sum_impl(double kappa, const double* t, std::size_t n) {
  // per-lane Neumaier accumulators, combined in fixed lane order
  __m256d s = _mm256_setzero_pd(), c = _mm256_setzero_pd();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = eta_pd<kVonNeumann>(kappa, _mm256_loadu_pd(t + i));
    const __m256d y = _mm256_add_pd(s, v);
    const __m256d abs_s = _mm256_andnot_pd(sign_mask, s);
    const __m256d abs_v = _mm256_andnot_pd(sign_mask, v);
    const __m256d big_s = _mm256_cmp_pd(abs_s, abs_v, _CMP_GE_OQ);
    const __m256d corr_s = _mm256_add_pd(_mm256_sub_pd(s, y), v);
    const __m256d corr_v = _mm256_add_pd(_mm256_sub_pd(v, y), s);
    c = _mm256_add_pd(c, _mm256_blendv_pd(corr_v, corr_s, big_s));
    s = y;
  }
  alignas(32) double sl[4], cl[4];
  _mm256_store_pd(sl, s);
  _mm256_store_pd(cl, c);
  double acc = 0.0, comp = 0.0;
  for (int l = 0; l < 4; ++l) {
    const double v = sl[l];
    const double y = acc + v;
    comp += (std::abs(acc) >= std::abs(v)) ? (acc - y) + v : (v - y) + acc;
    acc = y;
    comp += cl[l];
  }
  for (; i < n; ++i) {
    const double v = eta(kappa, t[i]);
    const double y = acc + v;
    comp += (std::abs(acc) >= std::abs(v)) ? (acc - y) + v : (v - y) + acc;
    acc = y;
  }
  return acc + comp;
}

inline __m256d cutoff_pd(CutoffKind kind, double rho, __m256d x) {
  switch (kind) {
    case CutoffKind::exponential:
      return exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), x));
    case CutoffKind::gaussian:
      return exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), _mm256_mul_pd(x, x)));
    case CutoffKind::rational: {
      const __m256d lp = log_pd(_mm256_add_pd(_mm256_set1_pd(1.0), x));
      return exp_pd(_mm256_mul_pd(_mm256_set1_pd(-rho), lp));
    }
    case CutoffKind::sharp_one:
    default:
      return _mm256_set1_pd(1.0);
  }
}

}  // namespace

double eta_sum_avx2(double kappa, const double* t, std::size_t n) {
  if (std::abs(kappa - 1.0) <= kKappaSwitch) return eta_sum_impl<true>(kappa, t, n);
  return eta_sum_impl<false>(kappa, t, n);
}

void eta_batch_avx2(double kappa, const double* t, double* out, std::size_t n) {
  const bool vn = std::abs(kappa - 1.0) <= kKappaSwitch;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = vn ? eta_pd<true>(kappa, _mm256_loadu_pd(t + i))
                         : eta_pd<false>(kappa, _mm256_loadu_pd(t + i));
    _mm256_storeu_pd(out + i, v);
  }
  for (; i < n; ++i) out[i] = eta(kappa, t[i]);
}

void cutoff_batch_avx2(CutoffKind kind, double rho, const double* x, double* phi, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(phi + i, cutoff_pd(kind, rho, _mm256_loadu_pd(x + i)));
  if (i < n) cutoff_batch_scalar(kind, rho, x + i, phi + i, n - i);
}

void symbol_weights_avx2(CutoffKind kind, double rho, double scale, const double* e2,
                         double* half_phi, double* w, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d vscale = _mm256_set1_pd(scale);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d e = _mm256_sqrt_pd(_mm256_loadu_pd(e2 + i));
    const __m256d p = cutoff_pd(kind, rho, _mm256_mul_pd(vscale, e));
    _mm256_storeu_pd(half_phi + i, _mm256_mul_pd(half, p));
    const __m256d nonzero = _mm256_cmp_pd(e, zero, _CMP_GT_OQ);
    const __m256d safe_e = _mm256_blendv_pd(_mm256_set1_pd(1.0), e, nonzero);
    const __m256d wv = _mm256_div_pd(_mm256_mul_pd(half, p), safe_e);
    _mm256_storeu_pd(w + i, _mm256_and_pd(wv, nonzero));
  }
  if (i < n) symbol_weights_scalar(kind, rho, scale, e2 + i, half_phi + i, w + i, n - i);
}

double compensated_sum_avx2(const double* x, std::size_t n) {
  __m256d s = _mm256_setzero_pd(), c = _mm256_setzero_pd();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d y = _mm256_add_pd(s, v);
    const __m256d abs_s = _mm256_andnot_pd(sign_mask, s);
    const __m256d abs_v = _mm256_andnot_pd(sign_mask, v);
    const __m256d big_s = _mm256_cmp_pd(abs_s, abs_v, _CMP_GE_OQ);
    const __m256d corr_s = _mm256_add_pd(_mm256_sub_pd(s, y), v);
    const __m256d corr_v = _mm256_add_pd(_mm256_sub_pd(v, y), s);
    c = _mm256_add_pd(c, _mm256_blendv_pd(corr_v, corr_s, big_s));
    s = y;
  }
  alignas(32) double sl[4], cl[4];
  _mm256_store_pd(sl, s);
  _mm256_store_pd(cl, c);
  double acc = 0.0, comp = 0.0;
  for (int l = 0; l < 4; ++l) {
    const double v = sl[l];
    const double y = acc + v;
    comp += (std::abs(acc) >= std::abs(v)) ? (acc - y) + v : (v - y) + acc;
    acc = y;
    comp += cl[l];
  }
  for (; i < n; ++i) {
    const double v = x[i];
    const double y = acc + v;
    comp += (std::abs(acc) >= std::abs(v)) ? (acc - y) + v : (v - y) + acc;
    acc = y;
  }
  return acc + comp;
}

}  // namespace dve::kernels::detail
