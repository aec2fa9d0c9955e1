#include "cylindex/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cylindex {

void SymTridiagonal::check() const {
  if (diag.empty()) throw std::invalid_argument("empty tridiagonal matrix");
  if (off.size() + 1 != diag.size()) {
    throw std::invalid_argument("off-diagonal length must be one less than the diagonal");
  }
}

std::pair<double, double> SymTridiagonal::gerschgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < n) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  return {lo, hi};
}

std::size_t count_eigen_below(const SymTridiagonal& t, double lambda) {
  const std::size_t n = t.diag.size();
  // Tiny pivots are clamped away from zero. An exact zero becomes +pivmin, the limit from
  // below lambda, so an eigenvalue equal to lambda is not counted.
  const double pivmin = std::numeric_limits<double>::min() * 4.0;
  auto clamp = [pivmin](double d) { return std::abs(d) >= pivmin ? d : (d < 0.0 ? -pivmin : pivmin); };
  std::size_t count = 0;
  double d = clamp(t.diag[0] - lambda);
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = t.off[i - 1];
    d = clamp((t.diag[i] - lambda) - e * e / d);
    if (d < 0.0) ++count;
  }
  return count;
}

double kth_eigenvalue(const SymTridiagonal& t, std::size_t k) {
  t.check();
  if (k >= t.size()) throw std::out_of_range("eigenvalue index exceeds matrix size");
  auto [lo, hi] = t.gerschgorin();
  const double scale = std::max(std::abs(lo), std::abs(hi));
  lo -= 1e-12 * scale + 1e-300;
  hi += 1e-12 * scale + 1e-300;
  // Invariant: count(lo) <= k < count(hi).
  for (int it = 0; it < 256; ++it) {
    const double width = hi - lo;
    const double mag = std::max(std::abs(lo), std::abs(hi));
    if (width <= std::max(4.0 * std::numeric_limits<double>::epsilon() * mag, 1e-14)) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_eigen_below(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> lowest_eigenvalues_serial(const SymTridiagonal& t, std::size_t k) {
  t.check();
  k = std::min(k, t.size());
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = kth_eigenvalue(t, i);
  return out;
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, std::size_t k) {
  t.check();
  k = std::min(k, t.size());
  std::vector<double> out(k);
  const auto count = static_cast<long>(k);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[i] = kth_eigenvalue(t, static_cast<std::size_t>(i));
  return out;
}

}  // namespace cylindex
