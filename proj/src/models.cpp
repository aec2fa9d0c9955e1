#include "cylindex/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cylindex {

bool MomentInterval::contains(double x) const {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

RotationModel RotationModel::cylinder(int m) {
  RotationModel model;
  model.kind = Kind::Cylinder;
  model.level = m;
  model.interval = {m - 0.5, m + 0.5, false, false};
  return model;
}

RotationModel RotationModel::disc(int level0, Polarity polarity) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  RotationModel model;
  model.kind = Kind::Disc;
  model.level = level0;
  model.polarity = polarity;
  if (polarity == Polarity::Min) {
    model.interval = {static_cast<double>(level0), inf, true, false};
  } else {
    model.interval = {-inf, static_cast<double>(level0), false, true};
  }
  model.fixed_points = {{level0, polarity}};
  return model;
}

RotationModel RotationModel::sphere(int k) {
  if (k <= 0) throw std::invalid_argument("sphere level k must be positive");
  RotationModel model;
  model.kind = Kind::Sphere;
  model.level = k;
  model.interval = {0.0, static_cast<double>(k), true, true};
  model.fixed_points = {{0, Polarity::Min}, {k, Polarity::Max}};
  return model;
}

std::string RotationModel::name() const {
  switch (kind) {
    case Kind::Cylinder:
      return "cylinder(" + std::to_string(level) + ")";
    case Kind::Disc:
      return "disc(" + std::to_string(level) + "," + to_string(polarity) + ")";
    case Kind::Sphere:
      return "sphere(" + std::to_string(level) + ")";
  }
  return "unknown";
}

std::string to_string(LevelStatus s) {
  switch (s) {
    case LevelStatus::Regular:
      return "regular";
    case LevelStatus::FixedPoint:
      return "fixed_point";
    case LevelStatus::OutsideImage:
      return "outside_image";
  }
  return "unknown";
}

std::string to_string(Polarity p) { return p == Polarity::Min ? "min" : "max"; }

LevelClassification classify_level(const RotationModel& model, int n) {
  for (const auto& fp : model.fixed_points) {
    if (fp.level == n) return {n, LevelStatus::FixedPoint};
  }
  if (model.interval.interior_contains(n)) return {n, LevelStatus::Regular};
  return {n, LevelStatus::OutsideImage};
}

int reduced_space_riemann_roch(const RotationModel& model, int n) {
  if (classify_level(model, n).status != LevelStatus::Regular) {
    throw std::invalid_argument("reduced space is only defined here at regular levels");
  }
  // Every regular level set of the catalog is a single free orbit, so the quotient is a point.
  const int components = 1;
  return components;
}

CoefficientFn disc_chart_coefficient(int j) {
  return [j](double x) { return (j + 1.0) - std::numbers::pi * std::exp(2.0 * x); };
}

Discretization disc_chart_discretization(double h) { return {-4.0, 8.0, h}; }

std::vector<int> disc_chart_kernel_weights(int j_lo, int j_hi, const Thresholds& th) {
  const Discretization disc = disc_chart_discretization();
  std::vector<int> out;
  for (int j = j_lo; j <= j_hi; ++j) {
    const CoefficientFn coef = disc_chart_coefficient(j);
    const auto decision =
        kernel_decision_pair(schrodinger_matrix(coef, disc, SchrodingerKind::StarL_L),
                             schrodinger_matrix(coef, disc, SchrodingerKind::L_StarL), th);
    if (decision.first) out.push_back(j);
  }
  return out;
}

namespace {

int compute_fixed_point_contribution() {
  const Discretization disc = disc_chart_discretization();
  const CoefficientFn coef = disc_chart_coefficient(0);
  const Thresholds th;
  const auto [plus, minus] =
      kernel_decision_pair(schrodinger_matrix(coef, disc, SchrodingerKind::StarL_L),
                           schrodinger_matrix(coef, disc, SchrodingerKind::L_StarL), th);
  return static_cast<int>(plus) - static_cast<int>(minus);
}

}  // namespace

int fixed_point_contribution(Polarity polarity) {
  // A maximum is the minimum chart with z -> conj(z): weights j -> -j, relative weight 0 fixed.
  (void)polarity;
  static const int contribution = compute_fixed_point_contribution();
  return contribution;
}

int local_index(const RotationModel& model, int n) {
  const LevelClassification cls = classify_level(model, n);
  switch (cls.status) {
    case LevelStatus::OutsideImage:
      return 0;
    case LevelStatus::Regular:
      return reduced_space_riemann_roch(model, n);
    case LevelStatus::FixedPoint:
      for (const auto& fp : model.fixed_points) {
        if (fp.level == n) return fixed_point_contribution(fp.polarity);
      }
      break;
  }
  return 0;
}

CharacterFunctional rr_loc_character_model(const RotationModel& model, IntegerWindow window) {
  if (window.lo > window.hi) throw std::invalid_argument("window lower bound exceeds upper bound");
  CharacterFunctional out;
  std::map<int, int> values;
  for (int n = window.lo; n <= window.hi; ++n) {
    if (const int v = local_index(model, n); v != 0) values[n] = v;
  }
  if (model.kind != RotationModel::Kind::Disc) {
    out.plus.finite = std::move(values);
    return out;
  }

  // Disc: every level on the image side of n0 contributes the same value.
  const int n0 = model.level;
  out.plus.tail = model.polarity == Polarity::Min ? Multiplicity::Tail::AtLeast
                                                  : Multiplicity::Tail::AtMost;
  out.plus.tail_bound = n0;
  out.plus.tail_multiplicity = local_index(model, n0);
  for (int n = window.lo; n <= window.hi; ++n) {
    const auto it = values.find(n);
    const int windowed = it == values.end() ? 0 : it->second;
    if (windowed != out.plus.at(n)) {
      throw std::logic_error("disc local indices do not follow the half-line pattern");
    }
  }
  return out;
}

CharacterFunctional total_character_oracle(const RotationModel& model) {
  if (model.kind != RotationModel::Kind::Sphere) {
    throw std::invalid_argument("total character oracle requires a closed (sphere) model");
  }
  const int k = model.level;
  // ||z^j||^2 = int |z|^{2j} (1+|z|^2)^{-k-2} |z| d|z| dtheta: the integrand behaves like
  // r^{2j+1} at 0 and r^{2j-2k-3} at infinity.
  CharacterFunctional out;
  for (int j = -k - 5; j <= 2 * k + 5; ++j) {
    const bool integrable_at_zero = 2 * j + 1 > -1;
    const bool integrable_at_infinity = 2 * j - 2 * k - 3 < -1;
    if (integrable_at_zero && integrable_at_infinity) out.plus.finite[j] += 1;
  }
  return out;
}

CharacterFunctional chi_character_model(const RotationModel& model) {
  if (model.kind != RotationModel::Kind::Cylinder) {
    throw std::invalid_argument("transverse index is only computed for cylinder models");
  }
  return chi_character(model.level, 1.0, 0.0);
}

std::optional<OrbitHolonomy> level_holonomy(const RotationModel& model, int n) {
  if (model.kind == RotationModel::Kind::Cylinder) {
    const ProfilePair profiles = make_profiles(model.level);
    if (n < model.level - 0.5 || n > model.level + 0.5) return std::nullopt;
    return orbit_holonomy(profiles, profiles.rho_inverse(n));
  }
  if (!model.interval.closure_contains(n)) return std::nullopt;
  // Disc and sphere charts use the moment value itself as the orbit coordinate.
  OrbitHolonomy h;
  h.value = std::polar(1.0, 2.0 * std::numbers::pi * n);
  h.parallel_weight = n;
  return h;
}

}  // namespace cylindex
