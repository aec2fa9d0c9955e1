#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

namespace cylindex {

/// Parameters (m, s, t, eps1, eps2) of the perturbed Dirac family on R x S^1.
///
/// s multiplies the Clifford action of the induced vector field, t the
/// orbitwise Dirac operator; eps1/eps2 are the exponents of the admissible
/// weight f on the two terms.
struct PerturbationParams {
  int m = 0;
  double s = 0.0;
  double t = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;

  /// Throws std::invalid_argument unless all reals are finite and >= 0.
  void validate() const;
  /// s = t = 0: the unperturbed operator, which is not Fredholm on the cylinder.
  bool degenerate() const { return s == 0.0 && t == 0.0; }
};

using Matrix2c = std::array<std::array<std::complex<double>, 2>, 2>;

/// Fixed flat background on R x S^1: metric dr^2 + dtheta^2, symplectic form
/// dr ^ dtheta, J(d_r) = d_theta, W = C (+) TM_C and the Clifford matrices below.
/// The connection is d - 2 pi rho dtheta and the moment function -2 pi rho.
struct CylinderGeometry {
  Matrix2c clifford_dr;
  Matrix2c clifford_dtheta;

  static CylinderGeometry standard();

  /// c(dr)^2 = c(dtheta)^2 = -1 and c(dr)c(dtheta) + c(dtheta)c(dr) = 0.
  bool clifford_relations_hold() const;
};

Matrix2c multiply(const Matrix2c& a, const Matrix2c& b);

enum class RhoSmoothing { CubicHermite, QuinticSmoothstep };
enum class FSmoothing { QuadraticCap, CoshBlend };

std::string to_string(RhoSmoothing s);
std::string to_string(FSmoothing s);

/// Concrete cutoff rho and admissible weight f for level m.
///
/// rho(r) = r on (m-1/4, m+1/4), constant m -/+ 1/2 beyond m -/+ 1/2, and a
/// monotone interpolant on the two transition bands. f(r) = |r| except on
/// |r| <= 1/2, where it is capped to stay positive.
class ProfilePair {
 public:
  ProfilePair(int m, RhoSmoothing rho_smoothing, FSmoothing f_smoothing);

  int m() const { return m_; }
  RhoSmoothing rho_smoothing() const { return rho_smoothing_; }
  FSmoothing f_smoothing() const { return f_smoothing_; }

  double rho(double r) const;
  double rho_prime(double r) const;
  double f(double r) const;
  /// f(r)^eps computed as exp(eps log f); f^0 == 1.
  double f_pow(double r, double eps) const;

  /// Smallest r with rho(r) >= value, for value in [m-1/2, m+1/2].
  double rho_inverse(double value) const;

 private:
  int m_;
  RhoSmoothing rho_smoothing_;
  FSmoothing f_smoothing_;
  double cosh_a_ = 0.0;  // f = a cosh(b r) on |r| <= 1/2 for CoshBlend
  double cosh_b_ = 0.0;
};

ProfilePair make_profiles(int m, RhoSmoothing rho_smoothing = RhoSmoothing::QuinticSmoothstep,
                          FSmoothing f_smoothing = FSmoothing::QuadraticCap);

/// The Fourier-mode coefficient c_n(r) = 2 pi [(1 + t f^eps2)(n - rho) - s f^eps1 rho].
///
/// A weight-n component a(r) e^{2 pi i n theta} lies in ker D+ iff a' = c_n a.
class ModeCoefficient {
 public:
  ModeCoefficient(PerturbationParams params, ProfilePair profiles, int n);

  double operator()(double r) const;

  int n() const { return n_; }
  const PerturbationParams& params() const { return params_; }
  const ProfilePair& profiles() const { return profiles_; }

 private:
  PerturbationParams params_;
  ProfilePair profiles_;
  int n_;
};

/// Throws std::invalid_argument when profiles.m() != params.m.
ModeCoefficient mode_coefficient(const PerturbationParams& params, const ProfilePair& profiles,
                                 int n);

struct OrbitHolonomy {
  std::complex<double> value;
  /// Weight of the parallel section when rho(r) is an integer (within 1e-12).
  std::optional<int> parallel_weight;
};

/// Holonomy exp(2 pi i rho(r)) of the prequantum connection around the orbit at r.
OrbitHolonomy orbit_holonomy(const ProfilePair& profiles, double r);

}  // namespace cylindex
