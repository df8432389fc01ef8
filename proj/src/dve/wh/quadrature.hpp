#pragma once

#include <functional>
#include <vector>

#include "dve/common.hpp"

namespace dve {

enum class Parity { even, odd };  // cosine / sine transform

struct QuadOptions {
  double abs_tol = 1e-12;
  int max_depth = 26;
  std::size_t max_panels = 300000;
};

struct QuadValue {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

// Batched integrand: fill g[i] = f(t[i]) for i < n. Batching lets providers
// run the SIMD kernels on the quadrature nodes.
using BatchFn = std::function<void(const double* t, double* g, std::size_t n)>;

// Adaptive Gauss-Kronrod (G7,K15) on [a,b].
QuadValue integrate_adaptive(const BatchFn& f, double a, double b, const QuadOptions& opt = {});

// int_0^T f(t) * {cos,sin}(u t) dt with base panels capped at pi/(2|u|), each
// refined adaptively. Throws AccuracyError once the panel budget is exceeded.
QuadValue oscillatory_transform(const BatchFn& f, Parity parity, double u, double t_max,
                                const QuadOptions& opt = {});

// Simultaneous transforms of several profiles sharing the evaluation sweep:
// out[j] = int_0^T f_j(t) * w_j(u t) dt, parity chosen per profile.
struct MultiTransform {
  // fill[j*n + i] = f_j(t_i); profiles evaluated together
  std::function<void(const double* t, double* g, std::size_t n)> fill;
  std::size_t count = 0;
  std::vector<Parity> parity;
};
std::vector<QuadValue> oscillatory_transform_multi(const MultiTransform& mt, double u,
                                                   double t_max, const QuadOptions& opt = {});

}  // namespace dve
