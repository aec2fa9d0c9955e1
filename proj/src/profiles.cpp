#include "cylindex/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cylindex {

namespace {

constexpr double kPi = std::numbers::pi;

// Offset of rho from m on the outer band, u in [0,1] spanning |r-m| in [1/4, 1/2].
// Both interpolants start at 1/4 with unit slope in r and end at 1/2 with zero slope.
double band_value(RhoSmoothing s, double u) {
  if (s == RhoSmoothing::CubicHermite) {
    return 0.25 + u * (0.25 + u * (0.25 - 0.25 * u));
  }
  return 0.25 + 0.25 * u + u * u * u * (1.0 + u * (-1.75 + 0.75 * u));
}

double band_slope(RhoSmoothing s, double u) {
  if (s == RhoSmoothing::CubicHermite) {
    return 0.25 + u * (0.5 - 0.75 * u);
  }
  return 0.25 + u * u * (3.0 + u * (-7.0 + 3.75 * u));
}

}  // namespace

void PerturbationParams::validate() const {
  for (double v : {s, t, eps1, eps2}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("perturbation parameters s, t, eps1, eps2 must be finite and >= 0");
    }
  }
}

Matrix2c multiply(const Matrix2c& a, const Matrix2c& b) {
  Matrix2c out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

CylinderGeometry CylinderGeometry::standard() {
  const std::complex<double> i{0.0, 1.0};
  CylinderGeometry g;
  g.clifford_dr = {{{0.0, -i}, {-i, 0.0}}};
  g.clifford_dtheta = {{{0.0, -1.0}, {1.0, 0.0}}};
  return g;
}

bool CylinderGeometry::clifford_relations_hold() const {
  const Matrix2c rr = multiply(clifford_dr, clifford_dr);
  const Matrix2c tt = multiply(clifford_dtheta, clifford_dtheta);
  const Matrix2c rt = multiply(clifford_dr, clifford_dtheta);
  const Matrix2c tr = multiply(clifford_dtheta, clifford_dr);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::complex<double> minus_id = i == j ? -1.0 : 0.0;
      if (rr[i][j] != minus_id || tt[i][j] != minus_id) return false;
      if (rt[i][j] + tr[i][j] != 0.0) return false;
    }
  }
  return true;
}

std::string to_string(RhoSmoothing s) {
  return s == RhoSmoothing::CubicHermite ? "cubic_hermite" : "quintic_smoothstep";
}

std::string to_string(FSmoothing s) {
  return s == FSmoothing::QuadraticCap ? "quadratic_cap" : "cosh_blend";
}

ProfilePair::ProfilePair(int m, RhoSmoothing rho_smoothing, FSmoothing f_smoothing)
    : m_(m), rho_smoothing_(rho_smoothing), f_smoothing_(f_smoothing) {
  if (f_smoothing_ == FSmoothing::CoshBlend) {
    // a cosh(b/2) = 1/2 and a b sinh(b/2) = 1  =>  b tanh(b/2) = 2.
    double b = 2.4;
    for (int it = 0; it < 50; ++it) {
      const double th = std::tanh(0.5 * b);
      const double g = b * th - 2.0;
      const double dg = th + 0.5 * b * (1.0 - th * th);
      const double step = g / dg;
      b -= step;
      if (std::abs(step) < 1e-15) break;
    }
    cosh_b_ = b;
    cosh_a_ = 0.5 / std::cosh(0.5 * b);
  }
}

double ProfilePair::rho(double r) const {
  const double x = r - m_;
  const double y = std::abs(x);
  if (y <= 0.25) return r;
  if (y >= 0.5) return x > 0 ? m_ + 0.5 : m_ - 0.5;
  const double offset = band_value(rho_smoothing_, 4.0 * y - 1.0);
  return x > 0 ? m_ + offset : m_ - offset;
}

double ProfilePair::rho_prime(double r) const {
  const double y = std::abs(r - m_);
  if (y <= 0.25) return 1.0;
  if (y >= 0.5) return 0.0;
  return 4.0 * band_slope(rho_smoothing_, 4.0 * y - 1.0);
}

double ProfilePair::f(double r) const {
  const double a = std::abs(r);
  if (a > 0.5) return a;
  if (f_smoothing_ == FSmoothing::QuadraticCap) return r * r + 0.25;
  return cosh_a_ * std::cosh(cosh_b_ * r);
}

double ProfilePair::f_pow(double r, double eps) const {
  if (eps == 0.0) return 1.0;
  return std::exp(eps * std::log(f(r)));
}

double ProfilePair::rho_inverse(double value) const {
  double lo = m_ - 0.5;
  double hi = m_ + 0.5;
  if (value <= lo) return lo;
  if (value >= hi) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (rho(mid) >= value) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

ProfilePair make_profiles(int m, RhoSmoothing rho_smoothing, FSmoothing f_smoothing) {
  return ProfilePair(m, rho_smoothing, f_smoothing);
}

ModeCoefficient::ModeCoefficient(PerturbationParams params, ProfilePair profiles, int n)
    : params_(params), profiles_(profiles), n_(n) {}

double ModeCoefficient::operator()(double r) const {
  const double rho = profiles_.rho(r);
  double orbit = 1.0;
  if (params_.t != 0.0) orbit += params_.t * profiles_.f_pow(r, params_.eps2);
  double value = orbit * (n_ - rho);
  if (params_.s != 0.0) value -= params_.s * profiles_.f_pow(r, params_.eps1) * rho;
  return 2.0 * kPi * value;
}

ModeCoefficient mode_coefficient(const PerturbationParams& params, const ProfilePair& profiles,
                                 int n) {
  if (profiles.m() != params.m) {
    throw std::invalid_argument("profile level m does not match perturbation parameters");
  }
  params.validate();
  return ModeCoefficient(params, profiles, n);
}

OrbitHolonomy orbit_holonomy(const ProfilePair& profiles, double r) {
  const double rho = profiles.rho(r);
  OrbitHolonomy h;
  h.value = std::polar(1.0, 2.0 * kPi * rho);
  const double nearest = std::round(rho);
  if (std::abs(rho - nearest) <= 1e-12) h.parallel_weight = static_cast<int>(nearest);
  return h;
}

}  // namespace cylindex
