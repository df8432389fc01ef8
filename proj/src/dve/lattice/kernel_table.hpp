#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dve/lattice/torus.hpp"
#include "dve/spin/spinor_matrix.hpp"
#include "dve/symbols/cutoff.hpp"
#include "dve/symbols/dirac_symbol.hpp"

namespace dve {

// A symbol sampled on the momentum torus, expressed through its Clifford
// coefficient fields (a, b1, b2, b3, d). The five fields determine symbol
// values, their squares and the eigenvalue pairs everywhere the lattice side
// of the artifact needs them.
class LatticeSymbol {
 public:
  virtual ~LatticeSymbol() = default;
  // fill flattened fields over the folded momentum grid
  virtual void fill(const TorusLattice& lat, std::vector<double>& a,
                    std::array<std::vector<double>, 3>& b, std::vector<double>& d) const = 0;
  virtual bool requires_positive_epsilon() const { return false; }
  virtual double cutoff_scale() const { return 0.0; }  // 0 disables the h <= eps/3 rule
  virtual std::string describe() const = 0;
};

// The regularized momentum-space Dirac projection symbol (requires eps > 0).
class DiracMomentumSymbol final : public LatticeSymbol {
 public:
  explicit DiracMomentumSymbol(DiracParams p);
  void fill(const TorusLattice&, std::vector<double>&, std::array<std::vector<double>, 3>&,
            std::vector<double>&) const override;
  bool requires_positive_epsilon() const override { return true; }
  double cutoff_scale() const override { return params_.epsilon; }
  std::string describe() const override;
  const DiracParams& params() const { return params_; }

 private:
  DiracParams params_;
};

// The rescaled family A^(eps)(xi) (eps = 0 gives the limit symbol); momentum
// variables are the rescaled xi. A grid node landing exactly on the singular
// point takes the documented convention value phi(0)/2 * identity.
class DiracRescaledSymbol final : public LatticeSymbol {
 public:
  explicit DiracRescaledSymbol(DiracParams p);
  void fill(const TorusLattice&, std::vector<double>&, std::array<std::vector<double>, 3>&,
            std::vector<double>&) const override;
  std::string describe() const override;
  const DiracParams& params() const { return params_; }

 private:
  DiracParams params_;
};

// Scalar radial test symbol g(|k|^2) times the identity.
class ScalarRadialSymbol final : public LatticeSymbol {
 public:
  ScalarRadialSymbol(std::function<double(double)> g, std::string name);
  void fill(const TorusLattice&, std::vector<double>&, std::array<std::vector<double>, 3>&,
            std::vector<double>&) const override;
  std::string describe() const override { return name_; }

 private:
  std::function<double(double)> g_;
  std::string name_;
};

struct LatticeOptions {
  bool allow_coarse = false;    // override the h <= eps/3 resolution rule
  bool allow_margin = false;    // override the wrap-around margin rule
  double margin_factor = 6.0;
  long max_dense_dim = 8192;
};

// Position-space kernel K(x) = (1/N^3) sum_k e^{ikx} Symbol(k), stored as the
// five transformed coefficient fields.
struct KernelTable3D {
  TorusLattice lat;
  std::array<std::vector<cplx>, 5> fields;  // a, b1, b2, b3, d in x-space
  std::vector<std::array<double, 2>> eig_pairs;  // per-momentum symbol eigenvalues {lo,hi}
  bool coarse_override = false;
  std::string symbol_name;

  SpinorMatrix block(int dx, int dy, int dz) const;  // offsets may be negative
};

KernelTable3D build_kernel(const LatticeSymbol& sym, const TorusLattice& lat,
                           const LatticeOptions& opt = {});

// Same transform applied to the squared symbol (coefficients squared in the
// Clifford algebra before the FFT); used by the commutator diagnostic.
KernelTable3D build_kernel_squared(const LatticeSymbol& sym, const TorusLattice& lat,
                                   const LatticeOptions& opt = {});

// (1/N^3) sum_k sum_j f(lambda_j(k)) per 4-component site, evaluated from the
// stored eigenvalue pairs (each pair carries multiplicity two). Exact for the
// lattice model since f(0) = 0.
double density_per_site(const KernelTable3D& table, const struct TestFunction& f);

}  // namespace dve
