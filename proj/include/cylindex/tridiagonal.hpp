#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cylindex {

/// Symmetric tridiagonal matrix: diag[0..N-1], off[0..N-2].
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
  void check() const;
  /// Gerschgorin enclosure [lo, hi] of the spectrum.
  std::pair<double, double> gerschgorin() const;
};

/// Number of eigenvalues strictly below lambda, from the signs of the pivots of
/// the LDL^T factorization of (T - lambda I) (Sturm sequence count).
std::size_t count_eigen_below(const SymTridiagonal& t, double lambda);

/// The k-th smallest eigenvalue (0-based) by bisection on Sturm counts.
double kth_eigenvalue(const SymTridiagonal& t, std::size_t k);

/// The k smallest eigenvalues, ascending. Each index is bisected independently,
/// so the result is identical for any thread count.
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, std::size_t k);

/// Single-threaded reference for lowest_eigenvalues.
std::vector<double> lowest_eigenvalues_serial(const SymTridiagonal& t, std::size_t k);

}  // namespace cylindex
