#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cylindex/tridiagonal.hpp"

using namespace cylindex;

namespace {

SymTridiagonal constant(std::size_t n, double d, double e) {
  return {std::vector<double>(n, d), std::vector<double>(n - 1, e)};
}

}  // namespace

TEST_CASE("count below a diagonal matrix") {
  const SymTridiagonal t{{1.0, 2.0, 3.0}, {0.0, 0.0}};
  CHECK(count_eigen_below(t, 2.5) == 2);
  CHECK(count_eigen_below(t, 0.5) == 0);
  CHECK(count_eigen_below(t, 3.5) == 3);
}

TEST_CASE("count below the 3x3 second-difference matrix") {
  // Eigenvalues 2 - sqrt 2, 2, 2 + sqrt 2.
  const SymTridiagonal t = constant(3, 2.0, -1.0);
  CHECK(count_eigen_below(t, 2.0) == 1);
  CHECK(count_eigen_below(t, 2.0 - 1e-9) == 1);
  CHECK(count_eigen_below(t, 2.0 + 1e-9) == 2);
  CHECK(count_eigen_below(t, 2.0 - std::sqrt(2.0) + 1e-9) == 1);
  CHECK(count_eigen_below(t, 2.0 - std::sqrt(2.0) - 1e-9) == 0);
  CHECK(count_eigen_below(t, -1e10) == 0);
}

TEST_CASE("1x1 eigenvalue is the diagonal entry") {
  const SymTridiagonal t{{3.25}, {}};
  CHECK(kth_eigenvalue(t, 0) == doctest::Approx(3.25).epsilon(1e-14));
}

TEST_CASE("eigenvalues of a general tridiagonal match a LAPACK reference") {
  const SymTridiagonal t{{4.0, -1.0, 2.5, 3.0, 0.5, 7.0}, {1.0, -2.0, 0.5, 1.5, -0.25}};
  const double expected[] = {-2.05501241333234, -0.216475321908034, 3.01169587247861,
                             3.88787429507825,  4.36139672974129,   7.01052083794221};
  const auto got = lowest_eigenvalues(t, 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("Wilkinson W21+ separates its nearly double top pair") {
  SymTridiagonal t = constant(21, 0.0, 1.0);
  for (int i = 0; i < 21; ++i) t.diag[static_cast<std::size_t>(i)] = std::abs(i - 10);
  const auto low = lowest_eigenvalues(t, 21);
  CHECK(low[0] == doctest::Approx(-1.12544152211999).epsilon(1e-12));
  CHECK(low[1] == doctest::Approx(0.253805817096689).epsilon(1e-12));
  CHECK(low[19] == doctest::Approx(10.7461941829033).epsilon(1e-12));
  CHECK(low[20] == doctest::Approx(10.7461941829034).epsilon(1e-12));
}

TEST_CASE("discrete Dirichlet Laplacian") {
  const double h = 0.01;
  const std::size_t n = 199;  // [0, 2] with 2/h - 1 interior nodes
  const SymTridiagonal t = constant(n, 2.0 / (h * h), -1.0 / (h * h));
  const double exact = 2.0 / (h * h) * (1.0 - std::cos(std::numbers::pi / (n + 1)));
  CHECK(kth_eigenvalue(t, 0) == doctest::Approx(exact).epsilon(1e-12));
  // Continuum value pi^2 / L^2 up to O(h^2).
  const double continuum = std::numbers::pi * std::numbers::pi / 4.0;
  CHECK(std::abs(kth_eigenvalue(t, 0) - continuum) < 1e-4);
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS_AS(kth_eigenvalue(SymTridiagonal{}, 0), std::invalid_argument);
  CHECK_THROWS_AS(kth_eigenvalue(SymTridiagonal{{1.0, 2.0}, {}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(kth_eigenvalue(SymTridiagonal{{1.0}, {}}, 1), std::out_of_range);
}

TEST_CASE("property: counts are monotone and bracket each eigenvalue") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) * 3;
    SymTridiagonal t;
    for (std::size_t i = 0; i < n; ++i) t.diag.push_back(u(rng));
    for (std::size_t i = 0; i + 1 < n; ++i) t.off.push_back(u(rng));
    const auto eig = lowest_eigenvalues(t, n);
    const auto [lo, hi] = t.gerschgorin();
    std::size_t previous = 0;
    for (double x = lo - 1.0; x <= hi + 1.0; x += 0.37) {
      const std::size_t c = count_eigen_below(t, x);
      CHECK(c >= previous);
      previous = c;
    }
    CHECK(previous == n);
    double trace = 0.0;
    for (double d : t.diag) trace += d;
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += eig[k];
      if (k > 0) CHECK(eig[k] >= eig[k - 1]);
      CHECK(eig[k] >= lo - 1e-9);
      CHECK(eig[k] <= hi + 1e-9);
    }
    CHECK(sum == doctest::Approx(trace).epsilon(1e-9));
  }
}

TEST_CASE("parallel and serial eigenvalues are bitwise equal") {
  const SymTridiagonal t = constant(500, 2.0, -1.0);
  CHECK(lowest_eigenvalues(t, 12) == lowest_eigenvalues_serial(t, 12));
}
