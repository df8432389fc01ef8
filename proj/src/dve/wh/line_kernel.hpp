#pragma once

#include <optional>
#include <vector>

#include "dve/entropy/test_function.hpp"
#include "dve/symbols/dirac_symbol.hpp"
#include "dve/wh/quadrature.hpp"

namespace dve {

// Translation-invariant 1D operator data along the fixed line direction. The
// symbol splits into four scalar profiles (even a,b,d and odd c), so the
// kernel k(u) = (2pi)^{-1} int e^{iut} A(t) dt reduces to three cosine
// transforms plus one sine transform, all real:
//   k(u) = ahat(u) 1 + bhat(u) g^axis g^0 + i*chat(u) g^3 g^0 + dhat(u) g^0.
// k(-u) = k(u)^dagger holds entry-exactly by construction.

// Test hook: a scalar symbol g(t) times the identity (the Gaussian fixtures),
// sharing the whole section/profile pipeline with the Dirac line.
struct ScalarLine {
  std::function<double(double)> g;
  double t_max;  // integration window, decay reached
};

class LineOperator {
 public:
  explicit LineOperator(const LineSymbol& line, QuadOptions opt = {});
  explicit LineOperator(const ScalarLine& scalar, QuadOptions opt = {});

  // kernel value at u (u of either sign)
  SpinorMatrix kernel(double u) const;

  // eigenvalue pair {lo, hi} of the symbol at parameter t (each twice)
  std::array<double, 2> symbol_eigenvalues(double t) const;

  // density rho_f = (2pi)^{-1} int tr f(A(t)) dt  (finite since f(0) = 0)
  double density(const TestFunction& f) const;

  double t_max() const { return t_max_; }
  const std::optional<LineSymbol>& line() const { return line_; }

 private:
  std::array<double, 4> transforms(double u) const;  // {ahat,bhat,chat,dhat}

  std::optional<LineSymbol> line_;
  std::optional<ScalarLine> scalar_;
  QuadOptions opt_;
  double t_max_ = 0.0;

  friend struct LineKernelTable;
};

// k(j*dx) for j = 0..count-1, the input to finite sections and cross norms.
struct LineKernelTable {
  double dx = 0.0;
  std::vector<SpinorMatrix> blocks;

  static LineKernelTable build(const LineOperator& op, double dx, int count);
  const SpinorMatrix& at(int j) const { return blocks[static_cast<std::size_t>(j)]; }
  int count() const { return static_cast<int>(blocks.size()); }
};

// Hilbert-Schmidt cross norm of one boundary: int_0^inf u |k(u)|_F^2 du,
// integrated over the table with a fitted geometric tail estimate folded into
// the error.
struct HsCrossNorm {
  double value = 0.0;
  double error = 0.0;
};
HsCrossNorm hs_cross_norm(const LineKernelTable& table);

}  // namespace dve
