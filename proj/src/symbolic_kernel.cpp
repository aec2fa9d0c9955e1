#include "cylindex/symbolic_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cylindex/rational.hpp"

namespace cylindex {

namespace {

struct ExactParams {
  Rational m, s, t, eps1, eps2;
  bool has_s, has_t;
};

ExactParams exact(const PerturbationParams& p) {
  p.validate();
  return {Rational(p.m), recover_rational(p.s), recover_rational(p.t),
          recover_rational(p.eps1), recover_rational(p.eps2), p.s > 0.0, p.t > 0.0};
}

struct ExactTerm {
  Rational degree;
  Rational value;  // coefficient / (2 pi)
};

// Terms of Phi_n / (2 pi) at one end, merged by degree, sorted by decreasing degree.
std::vector<ExactTerm> exact_terms(const ExactParams& p, int n, End end) {
  const Rational half = end == End::PlusInfinity ? Rational(1, 2) : Rational(-1, 2);
  const Rational orbit = Rational(n) - p.m - half;
  const Rational level = p.m + half;

  std::vector<ExactTerm> raw;
  raw.push_back({Rational(1), orbit});
  if (p.has_t) {
    const Rational d = 1 + p.eps2;
    raw.push_back({d, orbit * p.t / d});
  }
  if (p.has_s) {
    const Rational d = 1 + p.eps1;
    raw.push_back({d, -level * p.s / d});
  }

  std::vector<ExactTerm> merged;
  for (const auto& term : raw) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const ExactTerm& e) { return e.degree == term.degree; });
    if (it == merged.end()) {
      merged.push_back(term);
    } else {
      it->value += term.value;
    }
  }
  std::sort(merged.begin(), merged.end(),
            [](const ExactTerm& a, const ExactTerm& b) { return a.degree > b.degree; });
  return merged;
}

int leading_sign(const std::vector<ExactTerm>& terms) {
  for (const auto& t : terms) {
    if (t.value != 0) return t.value.sign();
  }
  return 0;
}

bool exact_mode_in_kernel(const ExactParams& p, int n, DiracOperator op) {
  const int plus = leading_sign(exact_terms(p, n, End::PlusInfinity));
  const int minus = leading_sign(exact_terms(p, n, End::MinusInfinity));
  if (op == DiracOperator::DPlus) return plus < 0 && minus > 0;
  return plus > 0 && minus < 0;
}

}  // namespace

std::string to_string(End e) { return e == End::PlusInfinity ? "plus_infinity" : "minus_infinity"; }

std::string to_string(DiracOperator op) { return op == DiracOperator::DPlus ? "plus" : "minus"; }

AsymptoticExponent solution_exponent(const PerturbationParams& params, int n, End end) {
  const ExactParams p = exact(params);
  AsymptoticExponent out;
  out.end = end;
  for (const auto& t : exact_terms(p, n, end)) {
    ExponentTerm term;
    term.degree = t.degree.convert_to<double>();
    term.coefficient = 2.0 * std::numbers::pi * t.value.convert_to<double>();
    term.sign = t.value.sign();
    out.terms.push_back(term);
  }
  for (const auto& t : out.terms) {
    if (t.sign != 0) {
      out.leading = t;
      break;
    }
  }
  return out;
}

bool mode_in_kernel(const PerturbationParams& params, int n, DiracOperator op) {
  if (params.degenerate()) throw NonFredholmError();
  return exact_mode_in_kernel(exact(params), n, op);
}

bool WeightSet::contains(int n) const {
  switch (kind) {
    case Kind::AllIntegers:
      return true;
    case Kind::Finite:
      return std::binary_search(weights.begin(), weights.end(), n);
    default:
      return false;
  }
}

WeightSet WeightSet::empty(std::string label) { return {Kind::Empty, {}, std::move(label)}; }

WeightSet WeightSet::finite(std::vector<int> weights, std::string label) {
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  if (weights.empty()) return empty(std::move(label));
  return {Kind::Finite, std::move(weights), std::move(label)};
}

WeightSet WeightSet::all_integers(std::string label) {
  return {Kind::AllIntegers, {}, std::move(label)};
}

WeightSet WeightSet::non_fredholm() { return {Kind::NonFredholm, {}, {}}; }

std::string to_string(WeightSet::Kind k) {
  switch (k) {
    case WeightSet::Kind::Empty:
      return "empty";
    case WeightSet::Kind::Finite:
      return "finite";
    case WeightSet::Kind::AllIntegers:
      return "all_integers";
    case WeightSet::Kind::NonFredholm:
      return "non_fredholm";
  }
  return "unknown";
}

std::string case_label(const PerturbationParams& params) {
  if (params.degenerate()) return "general";
  const ExactParams p = exact(params);
  if (p.eps1 > p.eps2 && p.has_s) return "I";
  if (p.eps1 < p.eps2 && p.has_t) return "II";
  if (p.eps1 == p.eps2 && p.eps1 > 0) return "III";
  return "general";
}

WeightSet kernel_weights(const PerturbationParams& params, DiracOperator op,
                         IntegerWindow window) {
  if (window.lo > window.hi) throw std::invalid_argument("window lower bound exceeds upper bound");
  if (params.degenerate()) return WeightSet::non_fredholm();
  const ExactParams p = exact(params);
  const std::string label = case_label(params);

  // Top degree and the n-dependent part of its coefficient.
  Rational top = 1;
  if (p.has_t) top = std::max(top, Rational(1 + p.eps2));
  if (p.has_s) top = std::max(top, Rational(1 + p.eps1));
  Rational slope = 0;  // coefficient of n at the top degree, over 2 pi
  if (top == 1) slope += 1;
  if (p.has_t && 1 + p.eps2 == top) slope += p.t / top;

  if (slope == 0) {
    // The s-term dominates both ends: membership does not depend on n.
    return exact_mode_in_kernel(p, 0, op) ? WeightSet::all_integers(label) : WeightSet::empty(label);
  }

  // Top coefficient vanishes at n = m +/- 1/2 + (m +/- 1/2) s / (top * slope) (s-term at top only).
  auto threshold = [&](double half) {
    double shift = 0.0;
    if (p.has_s && 1 + p.eps1 == top) {
      shift = (params.m + half) * params.s / (top * slope).convert_to<double>();
    }
    return params.m + half + shift;
  };
  const double a = threshold(-0.5);
  const double b = threshold(0.5);
  double lo = std::min(a, b) - 1.0;
  double hi = std::max(a, b) + 1.0;

  int scan_lo = window.lo;
  int scan_hi = window.hi;
  if (std::isfinite(lo) && std::isfinite(hi) && hi - lo < 1e7 && std::abs(lo) < 1e9 &&
      std::abs(hi) < 1e9) {
    scan_lo = static_cast<int>(std::floor(lo));
    scan_hi = static_cast<int>(std::ceil(hi));
  }

  std::vector<int> weights;
  for (int n = scan_lo; n <= scan_hi; ++n) {
    if (exact_mode_in_kernel(p, n, op)) weights.push_back(n);
  }
  return WeightSet::finite(std::move(weights), label);
}

int Multiplicity::at(int n) const {
  int value = 0;
  switch (tail) {
    case Tail::AllIntegers:
      value += tail_multiplicity;
      break;
    case Tail::AtLeast:
      if (n >= tail_bound) value += tail_multiplicity;
      break;
    case Tail::AtMost:
      if (n <= tail_bound) value += tail_multiplicity;
      break;
    case Tail::None:
      break;
  }
  if (auto it = finite.find(n); it != finite.end()) value += it->second;
  return value;
}

bool Multiplicity::is_zero() const {
  if (tail != Tail::None && tail_multiplicity != 0) return false;
  return std::all_of(finite.begin(), finite.end(), [](const auto& kv) { return kv.second == 0; });
}

Multiplicity Multiplicity::from(const WeightSet& w) {
  Multiplicity out;
  switch (w.kind) {
    case WeightSet::Kind::NonFredholm:
      throw NonFredholmError();
    case WeightSet::Kind::AllIntegers:
      out.tail = Tail::AllIntegers;
      out.tail_multiplicity = 1;
      break;
    case WeightSet::Kind::Finite:
      // Each kernel mode is a single solution ray of a first-order ODE.
      for (int n : w.weights) out.finite[n] = 1;
      break;
    case WeightSet::Kind::Empty:
      break;
  }
  return out;
}

bool CharacterFunctional::is_zero() const { return plus.is_zero() && minus.is_zero(); }

std::string CharacterFunctional::pattern() const {
  if (is_zero()) return "zero";
  switch (plus.tail) {
    case Multiplicity::Tail::AllIntegers:
      return "all_integers";
    case Multiplicity::Tail::AtLeast:
      return "at_least";
    case Multiplicity::Tail::AtMost:
      return "at_most";
    case Multiplicity::Tail::None:
      break;
  }
  return "finite";
}

namespace {

CharacterFunctional character_from(const PerturbationParams& params) {
  const IntegerWindow window{params.m - 6, params.m + 6};
  CharacterFunctional chi;
  chi.plus = Multiplicity::from(kernel_weights(params, DiracOperator::DPlus, window));
  chi.minus = Multiplicity::from(kernel_weights(params, DiracOperator::DMinus, window));
  return chi;
}

}  // namespace

CharacterFunctional chi_character(int m, double eps1, double eps2) {
  if (!(eps1 > eps2)) throw std::invalid_argument("transverse index requires eps1 > eps2");
  return character_from({m, 1.0, 0.0, eps1, eps2});
}

CharacterFunctional rr_loc_character(int m, double t, double eps1) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("local Riemann-Roch character requires t > 0");
  }
  return character_from({m, 0.0, t, eps1, 0.0});
}

}  // namespace cylindex
