#include "cylindex/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace cylindex {

Rational recover_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
  const double tol = 1e-12 * std::max(1.0, std::abs(x));
  constexpr std::int64_t kMaxDen = 1000000;

  // Continued-fraction convergents h/k of x.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  if (std::abs(x) > 1e15) return Rational(x);
  double rem = x - std::floor(x);
  for (int it = 0; it < 64; ++it) {
    if (std::abs(static_cast<double>(h) / static_cast<double>(k) - x) <= tol) {
      return Rational(h, k);
    }
    if (rem < 1e-300) break;
    const double inv = 1.0 / rem;
    if (inv > static_cast<double>(kMaxDen)) break;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    rem = inv - std::floor(inv);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > kMaxDen) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return Rational(x);
}

int sign(const Rational& q) { return q.sign(); }

}  // namespace cylindex
