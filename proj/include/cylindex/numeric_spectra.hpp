#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cylindex/profiles.hpp"
#include "cylindex/symbolic_kernel.hpp"
#include "cylindex/tridiagonal.hpp"

namespace cylindex {

/// Uniform grid on [center - R, center + R] with Dirichlet walls.
///
/// Nodes r_i = center - R + i h, i = 0..N+1; the N interior nodes carry the
/// unknowns. For the cylinder the center is the level m.
struct Discretization {
  double center = 0.0;
  double R = 12.0;
  double h = 0.01;

  /// Requires R >= 4 and 0 < h <= 0.05.
  void validate() const;
  std::size_t interior_points() const;
  double lo() const { return center - R; }
  double node(std::size_t i) const { return lo() + static_cast<double>(i) * h; }
  double midpoint(std::size_t i) const { return lo() + (static_cast<double>(i) + 0.5) * h; }

  static Discretization around(int m, double R = 12.0, double h = 0.01);
};

struct Thresholds {
  double tau_zero = 1e-6;
  double tau_gap = 1e-3;
};

/// Real coefficient c(r) of the first-order operator L = d/dr - c.
using CoefficientFn = std::function<double(double)>;

/// Log-profile Phi = int c on the grid (anchored to 0 at the center) and the
/// least-squares fits of its two ends against {1, r|r|^(d-1) for each degree d}.
struct QuadratureProfile {
  std::vector<double> r;
  std::vector<double> phi;
  /// Fitted coefficients, by decreasing degree; empty if no degrees were given.
  std::vector<ExponentTerm> plus_fit;
  std::vector<ExponentTerm> minus_fit;
};

/// Composite Simpson (node-midpoint-node panels) for Phi on every node.
QuadratureProfile quadrature_solution(const CoefficientFn& coef, const Discretization& disc,
                                      const std::vector<double>& fit_degrees = {});

/// Quadrature with the fit degrees {1, 1+eps2 if t>0, 1+eps1 if s>0} of the mode.
QuadratureProfile quadrature_solution(const ModeCoefficient& coef, const Discretization& disc);

enum class SchrodingerKind { StarL_L, L_StarL };

/// Tridiagonal N x N discretizations of L*L = -d^2 + c^2 + c' and
/// L L* = -d^2 + c^2 - c' with Dirichlet walls.
///
/// L = e^Phi d/dr e^-Phi is discretized on the staggered midpoints with exponential fitting,
/// (A u)_k = (e^{-d_k/2} u_{k+1} - e^{d_k/2} u_k)/h with d_k = c_{k+1/2} h, so the discrete
/// kernel is exactly u_{k+1} = e^{d_k} u_k. StarL_L = A^T A and L_StarL = B^T B with B the same
/// stencil for d -> -d. The off-diagonal is -1/h^2 and the diagonal
/// (e^{-+d_{i-1}} + e^{+-d_i})/h^2 = 2/h^2 + c^2 +/- c' + O(h^2).
SymTridiagonal schrodinger_matrix(const CoefficientFn& coef, const Discretization& disc,
                                  SchrodingerKind which);

/// The (N+1) x (N+1) matrix A A^T on the midpoint grid: the exact partner of StarL_L, with the
/// same nonzero spectrum plus one structural zero.
SymTridiagonal susy_partner_matrix(const CoefficientFn& coef, const Discretization& disc);

class IndeterminateSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectralReport {
  int n = 0;
  PerturbationParams params;
  Discretization disc;
  Thresholds thresholds;
  std::vector<double> low_plus;   // lowest eigenvalues of StarL_L
  std::vector<double> low_minus;  // lowest eigenvalues of L_StarL
  bool kernel_plus = false;
  bool kernel_minus = false;
};

/// Kernel decision from a matrix: true if exactly one eigenvalue lies below tau_zero and the
/// rest are above tau_gap, false if none lies below tau_gap. Anything else is indeterminate.
bool kernel_decision(const SymTridiagonal& t, const Thresholds& th);

/// Kernel decisions (D+, D-) from the pair StarL_L, L_StarL.
///
/// Eigenvalues below tau_gap present in both matrices (equal to 1% plus tau_zero)
/// are a paired nonzero eigenvalue, exponentially small by tunneling, not kernel. The unpaired
/// surplus is the kernel. Throws IndeterminateSpectrum when an unpaired eigenvalue falls in
/// [tau_zero, tau_gap) or the surplus exceeds one.
std::pair<bool, bool> kernel_decision_pair(const SymTridiagonal& plus, const SymTridiagonal& minus,
                                           const Thresholds& th);

/// Numerical kernel of the weight-n mode of D+ and D-, decided by kernel_decision_pair.
///
/// Throws NonFredholmError for s = t = 0 and IndeterminateSpectrum as above.
SpectralReport numeric_kernel(const PerturbationParams& params, const ProfilePair& profiles, int n,
                              const Discretization& disc, const Thresholds& th = {},
                              std::size_t eigen_count = 3);

SpectralReport numeric_kernel(const PerturbationParams& params, int n, const Discretization& disc,
                              const Thresholds& th = {}, std::size_t eigen_count = 3);

/// Outcome of numeric_kernel for one mode in a sweep.
struct ModeOutcome {
  int n = 0;
  std::optional<SpectralReport> report;
  bool indeterminate = false;
};

/// numeric_kernel over the weights [lo, hi], modes in parallel; order of results is by n.
std::vector<ModeOutcome> numeric_kernel_sweep(const PerturbationParams& params,
                                              const ProfilePair& profiles, IntegerWindow window,
                                              const Discretization& disc, const Thresholds& th,
                                              std::size_t eigen_count);

/// Single-threaded reference for numeric_kernel_sweep.
std::vector<ModeOutcome> numeric_kernel_sweep_serial(const PerturbationParams& params,
                                                     const ProfilePair& profiles,
                                                     IntegerWindow window,
                                                     const Discretization& disc,
                                                     const Thresholds& th,
                                                     std::size_t eigen_count);

/// Whether a truncation to `disc` can decide the mode faithfully: c keeps its wall sign on
/// (-inf, lo] and [hi, inf), an L^2 profile drops by at least `min_drop` from its peak to each
/// wall, and a non-L^2 profile peaks within 1 (in log scale) of a wall.
bool truncation_resolves(const CoefficientFn& coef, const Discretization& disc,
                         double min_drop = 15.0);

}  // namespace cylindex
