#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cylindex/numeric_spectra.hpp"
#include "cylindex/symbolic_kernel.hpp"

namespace cylindex {

enum class Polarity { Min, Max };

struct MomentInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double x) const;
  bool interior_contains(double x) const { return x > lo && x < hi; }
  bool closure_contains(double x) const { return x >= lo && x <= hi; }
};

struct FixedPoint {
  int level = 0;
  Polarity polarity = Polarity::Min;
};

/// Prequantized rotation-invariant surface with its moment image and fixed points.
///
/// Cylinder(m): the band (m-1/2, m+1/2) x S^1, no fixed points.
/// Disc(n0, Min|Max): the plane with minimum (or maximum) n0 at the origin.
/// Sphere(k): S^2 with moment image [0, k], minimum at 0 and maximum at k.
struct RotationModel {
  enum class Kind { Cylinder, Disc, Sphere };
  Kind kind = Kind::Cylinder;
  int level = 0;  // m, n0 or k
  Polarity polarity = Polarity::Min;
  MomentInterval interval;
  std::vector<FixedPoint> fixed_points;

  static RotationModel cylinder(int m);
  static RotationModel disc(int level0, Polarity polarity);
  static RotationModel sphere(int k);

  std::string name() const;
};

enum class LevelStatus { Regular, FixedPoint, OutsideImage };

std::string to_string(LevelStatus s);
std::string to_string(Polarity p);

struct LevelClassification {
  int level = 0;
  LevelStatus status = LevelStatus::OutsideImage;
};

LevelClassification classify_level(const RotationModel& model, int n);

/// Riemann-Roch number of the reduced space mu^{-1}(n)/S^1 at a regular level: one point per
/// connected orbit of the level set, each contributing dim H^0(point) = 1.
int reduced_space_riemann_roch(const RotationModel& model, int n);

/// Mode coefficient of the disc chart in log-polar coordinates x = log|z|: the weight-j
/// monomial z^j e^{-pi|z|^2/2} becomes exp of int c_j with c_j(x) = j + 1 - pi e^{2x}.
CoefficientFn disc_chart_coefficient(int j);

/// Grid on which the disc chart is resolved: x in [-12, 4].
Discretization disc_chart_discretization(double h = 0.01);

/// Weights j (relative to the fixed point) with a numerical L^2 kernel mode in the disc chart.
std::vector<int> disc_chart_kernel_weights(int j_lo, int j_hi, const Thresholds& th = {});

/// Contribution of a nondegenerate fixed point to RR_loc at its own level: the number of
/// numerical kernel modes of the disc chart at relative weight 0 minus its cokernel modes.
int fixed_point_contribution(Polarity polarity);

/// RR_loc^(n): 0 outside the image, 1 at regular levels, the disc contribution at fixed points.
int local_index(const RotationModel& model, int n);

CharacterFunctional rr_loc_character_model(const RotationModel& model, IntegerWindow window);

/// Independent count of holomorphic sections of O(k) on the sphere: monomials z^j that are
/// square integrable in the affine chart against (1 + |z|^2)^{-k} and the Fubini-Study area.
CharacterFunctional total_character_oracle(const RotationModel& model);

/// Transverse index of Cylinder(m) from the s = 1, t = 0, eps1 = 1, eps2 = 0 perturbation.
CharacterFunctional chi_character_model(const RotationModel& model);

/// Orbit holonomy on the level set mu^{-1}(n), if that level is attained.
std::optional<OrbitHolonomy> level_holonomy(const RotationModel& model, int n);

}  // namespace cylindex
