#include "cylindex/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cylindex/models.hpp"
#include "cylindex/symbolic_kernel.hpp"

namespace cylindex {

namespace {

const std::vector<double> kGridST{0.0, 0.5, 1.0, 2.0};
const std::vector<double> kGridEps{0.0, 0.5, 1.0, 2.0};

template <typename F>
void for_each_grid_point(F&& f) {
  for (int m = -2; m <= 2; ++m)
    for (double s : kGridST)
      for (double t : kGridST) {
        if (s == 0.0 && t == 0.0) continue;
        for (double e1 : kGridEps)
          for (double e2 : kGridEps) f(PerturbationParams{m, s, t, e1, e2});
      }
}

std::string describe(const PerturbationParams& p, int n) {
  std::ostringstream os;
  os << "m=" << p.m << " s=" << p.s << " t=" << p.t << " eps1=" << p.eps1 << " eps2=" << p.eps2
     << " n=" << n;
  return os.str();
}

// Effective s/t of the equal-exponent regime: for eps = 0 the unperturbed term merges with
// the perturbation and the ratio becomes s/(1+t).
double case_three_ratio(const PerturbationParams& p) {
  return p.eps1 > 0.0 ? p.s / p.t : p.s / (1.0 + p.t);
}

// Textual trichotomy; at an exact endpoint of the equal-exponent interval the first
// subleading term decides. Returns -1 when no textual rule applies.
int textual_rule(const PerturbationParams& p, int n) {
  if (p.eps1 > p.eps2 && p.s > 0.0) return p.m == 0;
  if (p.eps1 < p.eps2 && p.t > 0.0) return n == p.m;
  if (p.eps1 == p.eps2 && p.t > 0.0) {
    const double q = case_three_ratio(p);
    const double lo = (1.0 + q) * (p.m - 0.5);
    const double hi = (1.0 + q) * (p.m + 0.5);
    if (n > lo && n < hi) return 1;
    if (n < lo || n > hi) return 0;
    if (p.eps1 == 0.0) return 0;
    if (n == lo) return p.m >= 1 && q > 0.0;
    return p.m <= -1 && q > 0.0;
  }
  return -1;
}

CheckResult result(const std::string& suite, const std::string& name, bool ok,
                   std::string detail = {}) {
  return {suite, name, ok, ok ? std::string() : std::move(detail)};
}

std::pair<bool, bool> numeric_decision(const VerifyContext& ctx, const PerturbationParams& p, int n,
                                       const Discretization& disc) {
  const CoefficientFn coef = ctx.coefficient(p, make_profiles(p.m), n);
  return kernel_decision_pair(schrodinger_matrix(coef, disc, SchrodingerKind::StarL_L),
                              schrodinger_matrix(coef, disc, SchrodingerKind::L_StarL),
                              ctx.thresholds);
}

Discretization centered(const VerifyContext& ctx, int m) {
  Discretization d = ctx.disc;
  d.center = m;
  return d;
}

// ---- appendix-a ----

CheckResult case_consistency(const VerifyContext&) {
  const std::string suite = "appendix-a";
  std::size_t compared = 0;
  std::string failure;
  for_each_grid_point([&](const PerturbationParams& p) {
    for (int n = -10; n <= 10 && failure.empty(); ++n) {
      const int expected = textual_rule(p, n);
      if (expected < 0) continue;
      ++compared;
      if (mode_in_kernel(p, n, DiracOperator::DPlus) != (expected == 1)) failure = describe(p, n);
    }
  });
  if (compared == 0) failure = "no grid point covered";
  return result(suite, "case_consistency", failure.empty(), failure);
}

CheckResult minus_empty(const VerifyContext&) {
  std::string failure;
  for_each_grid_point([&](const PerturbationParams& p) {
    for (int n = -10; n <= 10 && failure.empty(); ++n) {
      if (mode_in_kernel(p, n, DiracOperator::DMinus)) failure = describe(p, n);
    }
  });
  return result("appendix-a", "minus_kernel_empty", failure.empty(), failure);
}

CheckResult scale_covariance(const VerifyContext&) {
  std::string failure;
  for (int m = -2; m <= 2; ++m)
    for (double s : kGridST)
      for (double t : {0.5, 1.0, 2.0})
        for (double e : {0.5, 1.0, 2.0})
          for (double lambda : {2.0, 10.0}) {
            const PerturbationParams a{m, s, t, e, e};
            const PerturbationParams b{m, lambda * s, lambda * t, e, e};
            const WeightSet wa = kernel_weights(a, DiracOperator::DPlus, {m - 6, m + 6});
            const WeightSet wb = kernel_weights(b, DiracOperator::DPlus, {m - 6, m + 6});
            if (wa.kind != wb.kind || wa.weights != wb.weights) failure = describe(a, 0);
          }
  return result("appendix-a", "scale_covariance", failure.empty(), failure);
}

CheckResult counting_formula(const VerifyContext&) {
  std::string failure;
  for_each_grid_point([&](const PerturbationParams& p) {
    if (p.eps1 != p.eps2 || p.t == 0.0 || !failure.empty()) return;
    const WeightSet w = kernel_weights(p, DiracOperator::DPlus, {p.m - 6, p.m + 6});
    std::vector<int> scan;
    for (int n = -40; n <= 40; ++n) {
      if (textual_rule(p, n) == 1) scan.push_back(n);
    }
    const std::vector<int> got = w.kind == WeightSet::Kind::Finite ? w.weights : std::vector<int>{};
    if (w.kind == WeightSet::Kind::AllIntegers || got != scan) failure = describe(p, 0);
  });
  return result("appendix-a", "counting_formula", failure.empty(), failure);
}

CheckResult character_contrast(const VerifyContext&) {
  std::string failure;
  for (int m = -3; m <= 3; ++m) {
    if (m == 0) continue;
    if (!chi_character(m, 1.0, 0.0).is_zero()) failure = "chi nonzero at m=" + std::to_string(m);
    if (rr_loc_character(m, 1.0, 1.0).evaluate(m) != 1) {
      failure = "rr_loc misses m=" + std::to_string(m);
    }
  }
  return result("appendix-a", "character_contrast", failure.empty(), failure);
}

struct Instance {
  PerturbationParams params;
  int n_lo;
  int n_hi;
};

std::vector<Instance> reproduction_instances() {
  std::vector<Instance> out;
  for (int m = -2; m <= 2; ++m) out.push_back({{m, 1.0, 0.0, 1.0, 0.0}, -5, 5});
  for (int m = -2; m <= 2; ++m) out.push_back({{m, 0.0, 1.0, 0.0, 1.0}, m - 6, m + 6});
  for (int m = 0; m <= 1; ++m)
    for (double s : {0.0, 0.5, 1.0, 2.0, 3.0}) out.push_back({{m, s, 1.0, 1.0, 1.0}, m - 6, m + 6});
  return out;
}

CheckResult oracle_agreement(const VerifyContext& ctx) {
  std::string failure;
  std::size_t compared = 0;
  for (const Instance& inst : reproduction_instances()) {
    const PerturbationParams& p = inst.params;
    const Discretization disc = centered(ctx, p.m);
    const ProfilePair profiles = make_profiles(p.m);
    for (int n = inst.n_lo; n <= inst.n_hi && failure.empty(); ++n) {
      if (!truncation_resolves(ctx.coefficient(p, profiles, n), disc)) continue;
      ++compared;
      try {
        const auto [plus, minus] = numeric_decision(ctx, p, n, disc);
        if (plus != mode_in_kernel(p, n, DiracOperator::DPlus) || minus) {
          failure = describe(p, n);
        }
      } catch (const IndeterminateSpectrum&) {
        failure = "indeterminate at " + describe(p, n);
      }
    }
  }
  if (compared == 0) failure = "no resolvable mode";
  return result("appendix-a", "numeric_oracle_agreement", failure.empty(), failure);
}

CheckResult susy_pairing(const VerifyContext& ctx) {
  std::string failure;
  const std::vector<std::pair<PerturbationParams, int>> cases{
      {{0, 1.0, 0.0, 1.0, 0.0}, 2}, {{1, 0.0, 1.0, 0.0, 1.0}, 1}, {{0, 2.0, 1.0, 1.0, 1.0}, -1}};
  for (const auto& [p, n] : cases) {
    const Discretization disc = centered(ctx, p.m);
    const CoefficientFn coef = ctx.coefficient(p, make_profiles(p.m), n);
    const auto a = lowest_eigenvalues(schrodinger_matrix(coef, disc, SchrodingerKind::StarL_L), 8);
    const auto b = lowest_eigenvalues(susy_partner_matrix(coef, disc), 9);
    std::vector<double> xa;
    std::vector<double> xb;
    for (double v : a) if (v > ctx.thresholds.tau_gap) xa.push_back(v);
    for (double v : b) if (v > ctx.thresholds.tau_gap) xb.push_back(v);
    for (std::size_t i = 0; i < 5; ++i) {
      if (i >= xa.size() || i >= xb.size() || std::abs(xa[i] - xb[i]) > 1e-6 * xa[i]) {
        failure = describe(p, n);
        break;
      }
    }
  }
  return result("appendix-a", "susy_pairing", failure.empty(), failure);
}

CheckResult truncation_stability(const VerifyContext& ctx) {
  std::string failure;
  for (int m = -2; m <= 2; ++m) {
    const PerturbationParams p{m, 0.0, 1.0, 0.0, 1.0};
    for (int n = m - 2; n <= m + 2; ++n) {
      bool first = false;
      for (double R : {8.0, 12.0, 16.0}) {
        Discretization disc = centered(ctx, m);
        disc.R = R;
        const bool d = numeric_decision(ctx, p, n, disc).first;
        if (R == 8.0) first = d;
        if (d != first) failure = describe(p, n) + " R=" + std::to_string(R);
      }
    }
  }
  return result("appendix-a", "truncation_stability", failure.empty(), failure);
}

CheckResult convergence_order(const VerifyContext& ctx) {
  const PerturbationParams p{0, 0.0, 1.0, 0.0, 1.0};
  const CoefficientFn coef = ctx.coefficient(p, make_profiles(0), 0);
  auto lambda = [&](double h) {
    Discretization disc = centered(ctx, 0);
    disc.h = h;
    return kth_eigenvalue(schrodinger_matrix(coef, disc, SchrodingerKind::StarL_L), 1);
  };
  const double l1 = lambda(0.02);
  const double l2 = lambda(0.01);
  const double l4 = lambda(0.005);
  const double ref = (4.0 * l4 - l2) / 3.0;
  const double ratio = (l1 - ref) / (l2 - ref);
  return result("appendix-a", "convergence_order", ratio >= 3.5 && ratio <= 4.5,
                "ratio " + std::to_string(ratio));
}

CheckResult quadrature_exponent(const VerifyContext& ctx) {
  std::string failure;
  const std::vector<std::pair<PerturbationParams, int>> cases{
      {{2, 0.0, 1.0, 0.0, 0.0}, 2}, {{0, 1.0, 0.0, 1.0, 0.0}, 0}, {{1, 0.0, 1.0, 0.0, 1.0}, 3}};
  for (const auto& [p, n] : cases) {
    const Discretization disc = centered(ctx, p.m);
    const ModeCoefficient coef = mode_coefficient(p, make_profiles(p.m), n);
    const QuadratureProfile q = quadrature_solution(coef, disc);
    const AsymptoticExponent plus = solution_exponent(p, n, End::PlusInfinity);
    const AsymptoticExponent minus = solution_exponent(p, n, End::MinusInfinity);
    auto fitted = [](const std::vector<ExponentTerm>& fit, double degree) {
      for (const auto& t : fit)
        if (t.degree == degree) return t.coefficient;
      return 0.0;
    };
    const double fp = fitted(q.plus_fit, plus.leading.degree);
    const double fm = fitted(q.minus_fit, minus.leading.degree);
    if (std::abs(fp - plus.leading.coefficient) > 0.02 * std::abs(plus.leading.coefficient) ||
        std::abs(fm - minus.leading.coefficient) > 0.02 * std::abs(minus.leading.coefficient)) {
      failure = describe(p, n);
    }
  }
  return result("appendix-a", "quadrature_exponent_agreement", failure.empty(), failure);
}

// ---- quantization ----

std::vector<std::pair<RotationModel, IntegerWindow>> catalog() {
  std::vector<std::pair<RotationModel, IntegerWindow>> out;
  for (int m = -3; m <= 3; ++m) out.push_back({RotationModel::cylinder(m), {m - 6, m + 6}});
  out.push_back({RotationModel::disc(0, Polarity::Min), {0, 10}});
  out.push_back({RotationModel::disc(0, Polarity::Max), {-10, 0}});
  for (int k = 1; k <= 8; ++k) out.push_back({RotationModel::sphere(k), {-2, k + 2}});
  return out;
}

CheckResult quantization_identity(const VerifyContext&) {
  std::string failure;
  for (const auto& [model, window] : catalog()) {
    for (int n = window.lo; n <= window.hi; ++n) {
      if (classify_level(model, n).status != LevelStatus::Regular) continue;
      if (local_index(model, n) != 1 || reduced_space_riemann_roch(model, n) != 1) {
        failure = model.name() + " n=" + std::to_string(n);
      }
    }
  }
  return result("quantization", "quantization_identity", failure.empty(), failure);
}

CheckResult closed_model(const VerifyContext&) {
  std::string failure;
  for (int k = 1; k <= 8; ++k) {
    const RotationModel sphere = RotationModel::sphere(k);
    const CharacterFunctional local = rr_loc_character_model(sphere, {-2, k + 2});
    const CharacterFunctional total = total_character_oracle(sphere);
    for (int n = -2; n <= k + 2; ++n) {
      if (local.evaluate(n) != total.evaluate(n)) failure = sphere.name() + " n=" + std::to_string(n);
    }
  }
  return result("quantization", "closed_model_identity", failure.empty(), failure);
}

CheckResult holonomy_gate(const VerifyContext&) {
  std::string failure;
  for (const auto& [model, window] : catalog()) {
    for (int n = window.lo; n <= window.hi; ++n) {
      if (local_index(model, n) == 0) continue;
      const auto hol = level_holonomy(model, n);
      if (!model.interval.closure_contains(n) || !hol || std::abs(hol->value - 1.0) > 1e-9) {
        failure = model.name() + " n=" + std::to_string(n);
      }
    }
  }
  return result("quantization", "holonomy_gate", failure.empty(), failure);
}

CheckResult disc_oracle(const VerifyContext& ctx) {
  // z^j e^{-pi|z|^2/2} is square integrable near 0 iff j >= 0.
  std::vector<int> expected;
  for (int j = 0; j <= 6; ++j) expected.push_back(j);
  const std::vector<int> got = disc_chart_kernel_weights(-3, 6, ctx.thresholds);
  return result("quantization", "disc_chart_oracle", got == expected && fixed_point_contribution(Polarity::Min) == 1,
                "numeric disc weights disagree with the monomial criterion");
}

// ---- contrast ----

CheckResult cylinder_contrast(const VerifyContext&) {
  std::string failure;
  const RotationModel c3 = RotationModel::cylinder(3);
  const CharacterFunctional rr3 = rr_loc_character_model(c3, {-3, 9});
  const CharacterFunctional sym3 = rr_loc_character(3, 1.0, 1.0);
  for (int n = -3; n <= 9; ++n) {
    const int delta = n == 3;
    if (rr3.evaluate(n) != delta || sym3.evaluate(n) != delta) failure = "rr_loc(3) at n=" + std::to_string(n);
  }
  if (!chi_character_model(c3).is_zero()) failure = "chi(3) nonzero";
  const CharacterFunctional chi0 = chi_character_model(RotationModel::cylinder(0));
  for (int n = -5; n <= 5; ++n) {
    if (chi0.evaluate(n) != 1) failure = "chi(0) at n=" + std::to_string(n);
  }
  for (int m = -3; m <= 3; ++m) {
    if (m == 0) continue;
    const RotationModel c = RotationModel::cylinder(m);
    if (rr_loc_character_model(c, {m - 6, m + 6}).evaluate(m) == chi_character_model(c).evaluate(m)) {
      failure = "no contrast at m=" + std::to_string(m);
    }
  }
  return result("contrast", "cylinder_contrast", failure.empty(), failure);
}

void add(std::vector<Check>& out, std::string suite, std::string name,
         CheckResult (*fn)(const VerifyContext&)) {
  out.push_back({std::move(suite), std::move(name), fn});
}

}  // namespace

VerifyContext VerifyContext::standard() {
  VerifyContext ctx;
  ctx.coefficient = [](const PerturbationParams& p, const ProfilePair& profiles, int n) {
    return CoefficientFn(mode_coefficient(p, profiles, n));
  };
  return ctx;
}

bool is_known_suite(const std::string& suite) {
  return suite == "appendix-a" || suite == "quantization" || suite == "contrast" || suite == "all";
}

std::vector<Check> suite_checks(const std::string& suite) {
  if (!is_known_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
  const bool all = suite == "all";
  std::vector<Check> out;
  if (all || suite == "appendix-a") {
    add(out, "appendix-a", "case_consistency", case_consistency);
    add(out, "appendix-a", "minus_kernel_empty", minus_empty);
    add(out, "appendix-a", "scale_covariance", scale_covariance);
    add(out, "appendix-a", "counting_formula", counting_formula);
    add(out, "appendix-a", "character_contrast", character_contrast);
    add(out, "appendix-a", "numeric_oracle_agreement", oracle_agreement);
    add(out, "appendix-a", "susy_pairing", susy_pairing);
    add(out, "appendix-a", "truncation_stability", truncation_stability);
    add(out, "appendix-a", "convergence_order", convergence_order);
    add(out, "appendix-a", "quadrature_exponent_agreement", quadrature_exponent);
  }
  if (all || suite == "quantization") {
    add(out, "quantization", "quantization_identity", quantization_identity);
    add(out, "quantization", "closed_model_identity", closed_model);
    add(out, "quantization", "holonomy_gate", holonomy_gate);
    add(out, "quantization", "disc_chart_oracle", disc_oracle);
  }
  if (all || suite == "contrast") add(out, "contrast", "cylinder_contrast", cylinder_contrast);
  return out;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const VerifyContext& ctx) {
  std::vector<CheckResult> out;
  for (const Check& c : checks) {
    try {
      out.push_back(c.run(ctx));
    } catch (const std::exception& e) {
      out.push_back({c.suite, c.name, false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

int verify_exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return 2;
  return 0;
}

}  // namespace cylindex
