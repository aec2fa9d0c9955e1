#include "cylindex/numeric_spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <tuple>

namespace cylindex {

void Discretization::validate() const {
  if (!std::isfinite(center) || !std::isfinite(R) || !std::isfinite(h)) {
    throw std::invalid_argument("discretization values must be finite");
  }
  if (R < 4.0) throw std::invalid_argument("truncation half-width R must be >= 4");
  if (!(h > 0.0) || h > 0.05) throw std::invalid_argument("grid step h must lie in (0, 0.05]");
}

std::size_t Discretization::interior_points() const {
  return static_cast<std::size_t>(std::floor(2.0 * R / h + 1e-9)) - 1;
}

Discretization Discretization::around(int m, double R, double h) {
  return {static_cast<double>(m), R, h};
}

namespace {

std::vector<double> sample_midpoints(const CoefficientFn& coef, const Discretization& disc) {
  const std::size_t n = disc.interior_points();
  std::vector<double> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = coef(disc.midpoint(k));
  return c;
}

// Exponentially fitted rows on the midpoints: with d_k = c_{k+1/2} h,
// (A u)_k = (e^{-d_k/2} u_{k+1} - e^{d_k/2} u_k) / h, and B is the same with d -> -d.
// sign = +1 gives A^T A (L*L), -1 gives B^T B (L L*).
SymTridiagonal assemble(const std::vector<double>& c, double h, double sign) {
  const std::size_t n = c.size() - 1;
  const double inv_h2 = 1.0 / (h * h);
  SymTridiagonal t;
  t.diag.resize(n);
  t.off.assign(n > 0 ? n - 1 : 0, -inv_h2);
  for (std::size_t i = 0; i < n; ++i) {
    t.diag[i] = (std::exp(-sign * c[i] * h) + std::exp(sign * c[i + 1] * h)) * inv_h2;
  }
  return t;
}

std::vector<ExponentTerm> fit_end(const std::vector<double>& r, const std::vector<double>& phi,
                                  const std::vector<double>& degrees, double from, double to) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] >= from && r[i] <= to) rows.push_back(i);
  }
  const auto cols = static_cast<Eigen::Index>(degrees.size() + 1);
  Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), cols);
  Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double x = r[rows[k]];
    const auto row = static_cast<Eigen::Index>(k);
    a(row, 0) = 1.0;
    for (std::size_t d = 0; d < degrees.size(); ++d) {
      a(row, static_cast<Eigen::Index>(d + 1)) = x * std::pow(std::abs(x), degrees[d] - 1.0);
    }
    b(row) = phi[rows[k]];
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(b);
  std::vector<ExponentTerm> out;
  for (std::size_t d = 0; d < degrees.size(); ++d) {
    const double value = coef(static_cast<Eigen::Index>(d + 1));
    out.push_back({degrees[d], value, (value > 0) - (value < 0)});
  }
  return out;
}

double simpson(const CoefficientFn& coef, double a, double b) {
  return (b - a) / 6.0 * (coef(a) + 4.0 * coef(0.5 * (a + b)) + coef(b));
}

}  // namespace

QuadratureProfile quadrature_solution(const CoefficientFn& coef, const Discretization& disc,
                                      const std::vector<double>& fit_degrees) {
  disc.validate();
  const std::size_t nodes = disc.interior_points() + 2;
  QuadratureProfile out;
  out.r.resize(nodes);
  out.phi.resize(nodes);
  double prev_c = coef(disc.node(0));
  out.r[0] = disc.node(0);
  out.phi[0] = 0.0;
  for (std::size_t i = 1; i < nodes; ++i) {
    const double r = disc.node(i);
    const double c = coef(r);
    out.r[i] = r;
    out.phi[i] = out.phi[i - 1] + disc.h / 6.0 * (prev_c + 4.0 * coef(disc.midpoint(i - 1)) + c);
    prev_c = c;
  }

  // Anchor Phi(center) = 0.
  const auto j = static_cast<std::size_t>(std::floor(disc.R / disc.h + 1e-9));
  double offset = out.phi[j];
  if (std::abs(disc.center - out.r[j]) > 1e-12) offset += simpson(coef, out.r[j], disc.center);
  for (double& v : out.phi) v -= offset;

  if (!fit_degrees.empty()) {
    std::vector<double> degrees = fit_degrees;
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    const double inner = 0.6 * disc.R;
    out.plus_fit = fit_end(out.r, out.phi, degrees, disc.center + inner, disc.center + disc.R);
    out.minus_fit = fit_end(out.r, out.phi, degrees, disc.center - disc.R, disc.center - inner);
  }
  return out;
}

QuadratureProfile quadrature_solution(const ModeCoefficient& coef, const Discretization& disc) {
  const PerturbationParams& p = coef.params();
  std::vector<double> degrees{1.0};
  if (p.t > 0.0) degrees.push_back(1.0 + p.eps2);
  if (p.s > 0.0) degrees.push_back(1.0 + p.eps1);
  return quadrature_solution(CoefficientFn(std::cref(coef)), disc, degrees);
}

SymTridiagonal schrodinger_matrix(const CoefficientFn& coef, const Discretization& disc,
                                  SchrodingerKind which) {
  disc.validate();
  return assemble(sample_midpoints(coef, disc), disc.h,
                  which == SchrodingerKind::StarL_L ? 1.0 : -1.0);
}

SymTridiagonal susy_partner_matrix(const CoefficientFn& coef, const Discretization& disc) {
  disc.validate();
  const std::vector<double> c = sample_midpoints(coef, disc);
  const std::size_t n = c.size() - 1;  // interior nodes
  const double h = disc.h;
  // Row k of A: -a_k on u_k (k >= 1), b_k on u_{k+1} (k + 1 <= n).
  auto a = [&](std::size_t k) { return std::exp(0.5 * c[k] * h) / h; };
  auto b = [&](std::size_t k) { return std::exp(-0.5 * c[k] * h) / h; };
  SymTridiagonal t;
  t.diag.resize(n + 1);
  t.off.resize(n);
  for (std::size_t k = 0; k <= n; ++k) {
    double d = 0.0;
    if (k + 1 <= n) d += b(k) * b(k);
    if (k >= 1) d += a(k) * a(k);
    t.diag[k] = d;
  }
  for (std::size_t k = 0; k < n; ++k) t.off[k] = -b(k) * a(k + 1);
  return t;
}

bool kernel_decision(const SymTridiagonal& t, const Thresholds& th) {
  const std::size_t below_gap = count_eigen_below(t, th.tau_gap);
  if (below_gap == 0) return false;
  const std::size_t below_zero = count_eigen_below(t, th.tau_zero);
  if (below_zero == 1 && below_gap == 1) return true;
  throw IndeterminateSpectrum("eigenvalues between tau_zero and tau_gap; refine R or h");
}

std::pair<bool, bool> kernel_decision_pair(const SymTridiagonal& plus, const SymTridiagonal& minus,
                                           const Thresholds& th) {
  const std::vector<double> p = lowest_eigenvalues(plus, count_eigen_below(plus, th.tau_gap));
  const std::vector<double> q = lowest_eigenvalues(minus, count_eigen_below(minus, th.tau_gap));
  // ker L and ker L* cannot both be nontrivial. Small eigenvalues seen by both matrices are a
  // tunneling pair; align the two lists from the top and leave the surplus at the bottom.
  constexpr double kPairTolerance = 1e-2;
  const std::size_t paired = std::min(p.size(), q.size());
  for (std::size_t i = 1; i <= paired; ++i) {
    const double a = p[p.size() - i];
    const double b = q[q.size() - i];
    if (std::abs(a - b) > kPairTolerance * std::max(a, b) + th.tau_zero) {
      throw IndeterminateSpectrum("unpaired eigenvalues between tau_zero and tau_gap; refine R or h");
    }
  }
  const std::vector<double>& longer = p.size() > q.size() ? p : q;
  const std::size_t surplus = longer.size() - paired;
  if (surplus > 1 || (surplus == 1 && longer.front() >= th.tau_zero)) {
    throw IndeterminateSpectrum("unpaired eigenvalues between tau_zero and tau_gap; refine R or h");
  }
  return {p.size() > paired, q.size() > paired};
}

SpectralReport numeric_kernel(const PerturbationParams& params, const ProfilePair& profiles, int n,
                              const Discretization& disc, const Thresholds& th,
                              std::size_t eigen_count) {
  params.validate();
  if (params.degenerate()) throw NonFredholmError();
  disc.validate();
  const ModeCoefficient coef = mode_coefficient(params, profiles, n);
  const std::vector<double> c = sample_midpoints(std::cref(coef), disc);
  const SymTridiagonal plus = assemble(c, disc.h, 1.0);
  const SymTridiagonal minus = assemble(c, disc.h, -1.0);

  SpectralReport report;
  report.n = n;
  report.params = params;
  report.disc = disc;
  report.thresholds = th;
  report.low_plus = lowest_eigenvalues(plus, eigen_count);
  report.low_minus = lowest_eigenvalues(minus, eigen_count);
  std::tie(report.kernel_plus, report.kernel_minus) = kernel_decision_pair(plus, minus, th);
  return report;
}

SpectralReport numeric_kernel(const PerturbationParams& params, int n, const Discretization& disc,
                              const Thresholds& th, std::size_t eigen_count) {
  return numeric_kernel(params, make_profiles(params.m), n, disc, th, eigen_count);
}

namespace {

ModeOutcome run_mode(const PerturbationParams& params, const ProfilePair& profiles, int n,
                     const Discretization& disc, const Thresholds& th, std::size_t eigen_count) {
  ModeOutcome out;
  out.n = n;
  try {
    out.report = numeric_kernel(params, profiles, n, disc, th, eigen_count);
  } catch (const IndeterminateSpectrum&) {
    out.indeterminate = true;
  }
  return out;
}

void check_sweep(const PerturbationParams& params, IntegerWindow window) {
  params.validate();
  if (params.degenerate()) throw NonFredholmError();
  if (window.lo > window.hi) throw std::invalid_argument("window lower bound exceeds upper bound");
}

}  // namespace

std::vector<ModeOutcome> numeric_kernel_sweep(const PerturbationParams& params,
                                              const ProfilePair& profiles, IntegerWindow window,
                                              const Discretization& disc, const Thresholds& th,
                                              std::size_t eigen_count) {
  check_sweep(params, window);
  disc.validate();
  const int count = window.hi - window.lo + 1;
  std::vector<ModeOutcome> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] =
        run_mode(params, profiles, window.lo + k, disc, th, eigen_count);
  }
  return out;
}

std::vector<ModeOutcome> numeric_kernel_sweep_serial(const PerturbationParams& params,
                                                     const ProfilePair& profiles,
                                                     IntegerWindow window,
                                                     const Discretization& disc,
                                                     const Thresholds& th,
                                                     std::size_t eigen_count) {
  check_sweep(params, window);
  disc.validate();
  std::vector<ModeOutcome> out;
  for (int n = window.lo; n <= window.hi; ++n) {
    out.push_back(run_mode(params, profiles, n, disc, th, eigen_count));
  }
  return out;
}

namespace {

int sign_of(double v) { return (v > 0) - (v < 0); }

// True if c keeps sign `s` from `wall` outward to |r| ~ 1e8.
bool sign_settled(const CoefficientFn& coef, double wall, double direction, int s) {
  if (s == 0) return false;
  for (double d = 1e-3; d < 1e8; d *= 1.02) {
    if (sign_of(coef(wall + direction * d)) != s) return false;
  }
  return true;
}

}  // namespace

bool truncation_resolves(const CoefficientFn& coef, const Discretization& disc, double min_drop) {
  disc.validate();
  const double lo = disc.lo();
  const double hi = disc.center + disc.R;
  const int left = sign_of(coef(lo));
  const int right = sign_of(coef(hi));
  if (!sign_settled(coef, lo, -1.0, left) || !sign_settled(coef, hi, 1.0, right)) return false;

  // exp(o Phi) is L^2 on the line iff o c > 0 at the left end and o c < 0 at the right end.
  // The box reproduces that only if an L^2 profile drops by min_drop toward both walls and
  // any other profile peaks at a wall.
  const QuadratureProfile q = quadrature_solution(coef, disc);
  for (const double orient : {1.0, -1.0}) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : q.phi) peak = std::max(peak, orient * v);
    const double drop_lo = peak - orient * q.phi.front();
    const double drop_hi = peak - orient * q.phi.back();
    const bool l2 = orient * left > 0 && orient * right < 0;
    if (l2 && std::min(drop_lo, drop_hi) < min_drop) return false;
    if (!l2 && std::min(drop_lo, drop_hi) > 1.0) return false;
  }
  return true;
}

}  // namespace cylindex
