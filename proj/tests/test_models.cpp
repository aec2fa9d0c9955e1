#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cylindex/models.hpp"

using namespace cylindex;

TEST_CASE("level classification") {
  CHECK(classify_level(RotationModel::cylinder(3), 3).status == LevelStatus::Regular);
  CHECK(classify_level(RotationModel::cylinder(3), 0).status == LevelStatus::OutsideImage);
  CHECK(classify_level(RotationModel::cylinder(3), 4).status == LevelStatus::OutsideImage);
  CHECK(classify_level(RotationModel::sphere(5), 0).status == LevelStatus::FixedPoint);
  CHECK(classify_level(RotationModel::sphere(5), 5).status == LevelStatus::FixedPoint);
  CHECK(classify_level(RotationModel::sphere(5), 2).status == LevelStatus::Regular);
  CHECK(classify_level(RotationModel::sphere(5), 6).status == LevelStatus::OutsideImage);
  CHECK(classify_level(RotationModel::disc(2, Polarity::Max), 7).status ==
        LevelStatus::OutsideImage);
  CHECK(classify_level(RotationModel::disc(2, Polarity::Max), -7).status == LevelStatus::Regular);
  CHECK_THROWS_AS(RotationModel::sphere(0), std::invalid_argument);
  CHECK(RotationModel::disc(-1, Polarity::Min).name() == "disc(-1,min)");
}

TEST_CASE("reduced space Riemann-Roch only at regular levels") {
  CHECK(reduced_space_riemann_roch(RotationModel::cylinder(3), 3) == 1);
  CHECK_THROWS_AS(reduced_space_riemann_roch(RotationModel::sphere(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(reduced_space_riemann_roch(RotationModel::cylinder(3), 5),
                  std::invalid_argument);
}

TEST_CASE("local index examples") {
  CHECK(local_index(RotationModel::cylinder(3), 3) == 1);
  CHECK(local_index(RotationModel::cylinder(3), 4) == 0);
  CHECK(local_index(RotationModel::sphere(5), 2) == 1);
  CHECK(local_index(RotationModel::sphere(5), 0) == 1);
  CHECK(local_index(RotationModel::sphere(5), -1) == 0);
}

TEST_CASE("disc chart kernel is the non-negative weights") {
  // z^j e^{-pi |z|^2 / 2} is square integrable exactly for j >= 0.
  const std::vector<int> got = disc_chart_kernel_weights(-4, 4);
  CHECK(got == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(fixed_point_contribution(Polarity::Min) == 1);
  CHECK(fixed_point_contribution(Polarity::Max) == 1);
}

TEST_CASE("disc chart coefficient") {
  const CoefficientFn c = disc_chart_coefficient(2);
  CHECK(c(-30.0) == doctest::Approx(3.0));
  CHECK(c(0.0) == doctest::Approx(3.0 - std::numbers::pi));
}

TEST_CASE("RR_loc on a disc is a half-line") {
  const CharacterFunctional lower = rr_loc_character_model(RotationModel::disc(0, Polarity::Min),
                                                           {0, 10});
  CHECK(lower.pattern() == "at_least");
  for (int n = 0; n <= 10; ++n) CHECK(lower.evaluate(n) == 1);
  CHECK(lower.evaluate(-1) == 0);
  CHECK(lower.evaluate(1000) == 1);

  const CharacterFunctional upper = rr_loc_character_model(RotationModel::disc(3, Polarity::Max),
                                                           {-5, 5});
  CHECK(upper.pattern() == "at_most");
  CHECK(upper.evaluate(3) == 1);
  CHECK(upper.evaluate(-100) == 1);
  CHECK(upper.evaluate(4) == 0);
  CHECK_THROWS_AS(rr_loc_character_model(RotationModel::cylinder(0), {1, 0}),
                  std::invalid_argument);
}

TEST_CASE("property: sphere RR_loc sums to the section count for k = 1..8") {
  for (int k = 1; k <= 8; ++k) {
    const RotationModel sphere = RotationModel::sphere(k);
    const CharacterFunctional oracle = total_character_oracle(sphere);
    CHECK(oracle.pattern() == "finite");
    int total = 0;
    for (int n = -k - 3; n <= 2 * k + 3; ++n) {
      CHECK(local_index(sphere, n) == oracle.evaluate(n));
      total += oracle.evaluate(n);
    }
    CHECK(total == k + 1);
    CHECK(rr_loc_character_model(sphere, {-3, k + 3}) == oracle);
  }
}

TEST_CASE("oracles reject unsupported models") {
  CHECK_THROWS_AS(total_character_oracle(RotationModel::cylinder(1)), std::invalid_argument);
  CHECK_THROWS_AS(chi_character_model(RotationModel::sphere(2)), std::invalid_argument);
}

TEST_CASE("transverse index of a cylinder differs from RR_loc") {
  const CharacterFunctional chi0 = chi_character_model(RotationModel::cylinder(0));
  CHECK(chi0.pattern() == "all_integers");
  const CharacterFunctional chi2 = chi_character_model(RotationModel::cylinder(2));
  CHECK(chi2.is_zero());
  for (int m = -2; m <= 2; ++m) {
    const RotationModel cyl = RotationModel::cylinder(m);
    const CharacterFunctional rr = rr_loc_character_model(cyl, {m - 4, m + 4});
    CHECK(rr.pattern() == "finite");
    CHECK(rr.evaluate(m) == 1);
    CHECK_FALSE(rr == chi_character_model(cyl));
  }
}

TEST_CASE("holonomy is trivial exactly at integer levels") {
  const auto cyl = level_holonomy(RotationModel::cylinder(2), 2);
  REQUIRE(cyl.has_value());
  REQUIRE(cyl->parallel_weight.has_value());
  CHECK(*cyl->parallel_weight == 2);
  CHECK(std::abs(cyl->value - 1.0) < 1e-12);
  CHECK_FALSE(level_holonomy(RotationModel::cylinder(2), 4).has_value());
  CHECK_FALSE(level_holonomy(RotationModel::sphere(3), 4).has_value());
  const auto pole = level_holonomy(RotationModel::sphere(3), 3);
  REQUIRE(pole.has_value());
  CHECK(pole->parallel_weight == 3);
}
