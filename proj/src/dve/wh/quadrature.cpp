#include "dve/wh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dve {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 nodes/weights).
constexpr int kGK = 15;
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double k15;
  double g7;
};

// One GK15 evaluation of f(t)*w(t) on [a,b]; nodes are produced for a single
// batched integrand call.
template <class Weight>
PanelResult gk15_panel(const BatchFn& f, double a, double b, const Weight& w) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double t[kGK];
  for (int i = 0; i < 7; ++i) {
    t[2 * i] = c - h * kXgk[i];
    t[2 * i + 1] = c + h * kXgk[i];
  }
  t[14] = c;
  double g[kGK];
  f(t, g, kGK);
  for (int i = 0; i < kGK; ++i) g[i] *= w(t[i]);

  double k15 = kWgk[7] * g[14];
  double g7 = kWg[3] * g[14];
  for (int i = 0; i < 7; ++i) {
    const double pair = g[2 * i] + g[2 * i + 1];
    k15 += kWgk[i] * pair;
    if (i % 2 == 1) g7 += kWg[i / 2] * pair;
  }
  return {k15 * h, g7 * h};
}

template <class Weight>
QuadValue adaptive(const BatchFn& f, double a, double b, const Weight& w, double tol_per_len,
                   const QuadOptions& opt, std::size_t& panels) {
  struct Seg {
    double a, b;
    int depth;
  };
  QuadValue out;
  std::vector<Seg> stack{{a, b, 0}};
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    if (++panels > opt.max_panels)
      throw AccuracyError("quadrature panel budget exceeded; tail accuracy unattainable");
    const PanelResult pr = gk15_panel(f, s.a, s.b, w);
    const double err = std::abs(pr.k15 - pr.g7);
    if (err <= tol_per_len * (s.b - s.a) || s.depth >= opt.max_depth) {
      out.value += pr.k15;
      out.error += err;
    } else {
      const double m = 0.5 * (s.a + s.b);
      stack.push_back({m, s.b, s.depth + 1});
      stack.push_back({s.a, m, s.depth + 1});
    }
  }
  return out;
}

}  // namespace

QuadValue integrate_adaptive(const BatchFn& f, double a, double b, const QuadOptions& opt) {
  if (!(b > a)) return {};
  std::size_t panels = 0;
  auto one = [](double) { return 1.0; };
  QuadValue v = adaptive(f, a, b, one, opt.abs_tol / (b - a), opt, panels);
  v.panels = panels;
  return v;
}

QuadValue oscillatory_transform(const BatchFn& f, Parity parity, double u, double t_max,
                                const QuadOptions& opt) {
  if (!(t_max > 0.0)) return {};
  const double au = std::abs(u);
  const double width = std::min(1.0, au > 0 ? M_PI / (2.0 * au) : 1.0);
  const std::size_t base = static_cast<std::size_t>(std::ceil(t_max / width));
  if (base > opt.max_panels)
    throw AccuracyError("oscillatory transform needs " + std::to_string(base) +
                        " base panels; budget exceeded");
  QuadValue out;
  std::size_t panels = 0;
  const double tol_per_len = opt.abs_tol / t_max;
  for (std::size_t i = 0; i < base; ++i) {
    const double a = t_max * static_cast<double>(i) / base;
    const double b = t_max * static_cast<double>(i + 1) / base;
    QuadValue v;
    if (parity == Parity::even) {
      v = adaptive(f, a, b, [u](double t) { return std::cos(u * t); }, tol_per_len, opt, panels);
    } else {
      v = adaptive(f, a, b, [u](double t) { return std::sin(u * t); }, tol_per_len, opt, panels);
    }
    out.value += v.value;
    out.error += v.error;
  }
  out.panels = panels;
  return out;
}

std::vector<QuadValue> oscillatory_transform_multi(const MultiTransform& mt, double u,
                                                   double t_max, const QuadOptions& opt) {
  const std::size_t m = mt.count;
  std::vector<QuadValue> out(m);
  if (!(t_max > 0.0) || m == 0) return out;
  const double au = std::abs(u);
  const double width = std::min(1.0, au > 0 ? M_PI / (2.0 * au) : 1.0);
  const std::size_t base = static_cast<std::size_t>(std::ceil(t_max / width));
  if (base > opt.max_panels)
    throw AccuracyError("oscillatory transform needs " + std::to_string(base) +
                        " base panels; budget exceeded");

  std::vector<double> g(m * kGK);
  std::vector<double> trig_c(kGK), trig_s(kGK);
  const double tol_per_len = opt.abs_tol / t_max;

  struct Seg {
    double a, b;
    int depth;
  };

  std::size_t panels = 0;
  std::vector<Seg> stack;
  for (std::size_t i = base; i-- > 0;)
    stack.push_back({t_max * static_cast<double>(i) / base,
                     t_max * static_cast<double>(i + 1) / base, 0});

  std::vector<double> k15(m), g7(m);
  double t[kGK];
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    if (++panels > opt.max_panels)
      throw AccuracyError("quadrature panel budget exceeded; tail accuracy unattainable");
    const double c = 0.5 * (s.a + s.b), h = 0.5 * (s.b - s.a);
    for (int i = 0; i < 7; ++i) {
      t[2 * i] = c - h * kXgk[i];
      t[2 * i + 1] = c + h * kXgk[i];
    }
    t[14] = c;
    mt.fill(t, g.data(), kGK);
    for (int i = 0; i < kGK; ++i) {
      trig_c[i] = std::cos(u * t[i]);
      trig_s[i] = std::sin(u * t[i]);
    }
    double err_max = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double* gj = g.data() + j * kGK;
      const double* w = mt.parity[j] == Parity::even ? trig_c.data() : trig_s.data();
      double vk = kWgk[7] * gj[14] * w[14];
      double vg = kWg[3] * gj[14] * w[14];
      for (int i = 0; i < 7; ++i) {
        const double pair = gj[2 * i] * w[2 * i] + gj[2 * i + 1] * w[2 * i + 1];
        vk += kWgk[i] * pair;
        if (i % 2 == 1) vg += kWg[i / 2] * pair;
      }
      k15[j] = vk * h;
      g7[j] = vg * h;
      err_max = std::max(err_max, std::abs(k15[j] - g7[j]));
    }
    if (err_max <= tol_per_len * (s.b - s.a) || s.depth >= opt.max_depth) {
      for (std::size_t j = 0; j < m; ++j) {
        out[j].value += k15[j];
        out[j].error += std::abs(k15[j] - g7[j]);
      }
    } else {
      const double mid = 0.5 * (s.a + s.b);
      stack.push_back({mid, s.b, s.depth + 1});
      stack.push_back({s.a, mid, s.depth + 1});
    }
  }
  for (auto& v : out) v.panels = panels;
  return out;
}

}  // namespace dve
