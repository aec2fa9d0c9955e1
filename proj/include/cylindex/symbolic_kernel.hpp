#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylindex/profiles.hpp"

namespace cylindex {

/// Raised when a kernel query is made for s = t = 0.
class NonFredholmError : public std::runtime_error {
 public:
  NonFredholmError() : std::runtime_error("s = t = 0: the unperturbed operator is not Fredholm") {}
};

enum class End { PlusInfinity, MinusInfinity };
enum class DiracOperator { DPlus, DMinus };

std::string to_string(End e);
std::string to_string(DiracOperator op);

/// One power term coefficient * r|r|^(degree-1) of the log-profile at an end.
struct ExponentTerm {
  double degree = 1.0;
  double coefficient = 0.0;
  /// Sign of the coefficient decided in exact arithmetic.
  int sign = 0;
};

/// Large-|r| expansion of Phi_n = int c_n at one end.
///
/// On the flat region rho = m +/- 1/2 and f = |r|, so
/// Phi_n ~ 2 pi (n - m -/+ 1/2)(r + t r|r|^eps2/(1+eps2)) - 2 pi (m +/- 1/2) s r|r|^eps1/(1+eps1).
struct AsymptoticExponent {
  End end = End::PlusInfinity;
  /// Merged terms by decreasing degree, zero coefficients kept.
  std::vector<ExponentTerm> terms;
  /// Highest-degree term with nonzero coefficient.
  ExponentTerm leading;
};

AsymptoticExponent solution_exponent(const PerturbationParams& params, int n, End end);

/// L^2 membership of the weight-n mode of D+ (solution exp Phi_n) or D- (exp -Phi_n).
/// Throws NonFredholmError for s = t = 0.
bool mode_in_kernel(const PerturbationParams& params, int n, DiracOperator op);

struct WeightSet {
  enum class Kind { Empty, Finite, AllIntegers, NonFredholm };
  Kind kind = Kind::Empty;
  /// Strictly increasing; only meaningful for Finite.
  std::vector<int> weights;
  /// "I", "II", "III" or "general"; provenance only.
  std::string case_label;

  bool contains(int n) const;
  static WeightSet empty(std::string label = {});
  static WeightSet finite(std::vector<int> weights, std::string label = {});
  static WeightSet all_integers(std::string label = {});
  static WeightSet non_fredholm();
};

std::string to_string(WeightSet::Kind k);

/// Textual case of the (eps1, eps2, s, t) regime. Membership never depends on it.
std::string case_label(const PerturbationParams& params);

struct IntegerWindow {
  int lo = 0;
  int hi = 0;
};

/// The full set of weights n with mode_in_kernel(params, n, op).
///
/// The set is either all of Z, empty, or a bounded interval that is located
/// and scanned exactly; `window` is only scanned when the bounds overflow.
WeightSet kernel_weights(const PerturbationParams& params, DiracOperator op,
                         IntegerWindow window);

/// Integer multiplicities over Z: a finite part plus an optional constant tail.
struct Multiplicity {
  enum class Tail { None, AllIntegers, AtLeast, AtMost };
  Tail tail = Tail::None;
  int tail_bound = 0;
  int tail_multiplicity = 0;
  std::map<int, int> finite;

  int at(int n) const;
  bool is_zero() const;
  static Multiplicity from(const WeightSet& w);
  bool operator==(const Multiplicity&) const = default;
};

/// Element of Hom(R(S^1), Z): C_(n) -> mult_plus(n) - mult_minus(n).
struct CharacterFunctional {
  Multiplicity plus;
  Multiplicity minus;

  int evaluate(int n) const { return plus.at(n) - minus.at(n); }
  bool is_zero() const;
  /// "zero", "finite", "all_integers", "at_least" or "at_most".
  std::string pattern() const;
  bool operator==(const CharacterFunctional&) const = default;
};

/// Transverse index from the s = 1, t = 0 perturbation. Requires eps1 > eps2.
CharacterFunctional chi_character(int m, double eps1, double eps2);

/// Local Riemann-Roch character from the s = eps2 = 0 perturbation. Requires t > 0.
CharacterFunctional rr_loc_character(int m, double t, double eps1);

}  // namespace cylindex
