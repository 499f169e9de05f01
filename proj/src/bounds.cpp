#include "sharpbound/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace sharpbound {

namespace {

void require_sizes(const std::vector<double>& mu,
                   const std::vector<Complex>& a) {
  if (mu.empty() || mu.size() != a.size()) {
    throw DomainError("mu and a must be nonempty and of equal length");
  }
}

void require_positive_mu(const std::vector<double>& mu) {
  for (double m : mu) {
    if (!(m > 0.0)) throw DomainError("every mu_i must be positive");
  }
}

void require_case_ii_signs(const std::vector<double>& mu, double lambda) {
  if (mu.size() < 2) {
    throw DomainError("the mixed-sign case needs at least two weights");
  }
  if (!(mu[0] > 0.0)) throw DomainError("mu_1 must be positive");
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (!(mu[i] < 0.0)) throw DomainError("mu_i must be negative for i >= 2");
  }
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
}

// S = sum_i mu_i^(1/(p-1)) |a_i|^q over positive weights.
double weight_coeff_sum(const std::vector<double>& mu,
                        const std::vector<double>& abs_a,
                        const Exponent& exp) {
  const double e = exp.inv_p_minus_1();
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    s += pow_nonneg(mu[i], e) * pow_nonneg(abs_a[i], exp.q);
  }
  return s;
}

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

// Admissibility on weight magnitudes:
//   |lambda|^(1/(p-1)) <= |mu_1|^(1/(p-1))|a_1|^q
//                           - sum_{i>=2} |mu_i|^(1/(p-1))|a_i|^q,
// hard-false when the right side is <= 0.
bool admissible_magnitudes_reversed(const std::vector<double>& abs_mu,
                                    const std::vector<double>& abs_a,
                                    const Exponent& exp, double abs_lambda) {
  const double e = exp.inv_p_minus_1();
  double bound = pow_nonneg(abs_mu[0], e) * pow_nonneg(abs_a[0], exp.q);
  for (std::size_t i = 1; i < abs_mu.size(); ++i) {
    bound -= pow_nonneg(abs_mu[i], e) * pow_nonneg(abs_a[i], exp.q);
  }
  if (bound <= 0.0) return false;
  const double lam_root = pow_nonneg(abs_lambda, e);
  return bound - lam_root >=
         -kIdentityTol * std::max({1.0, bound, lam_root});
}

InequalityReport make_report(double lhs, double rhs, double margin,
                             bool guaranteed, double tol) {
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = margin;
  r.guaranteed = guaranteed;
  r.tolerance_used = tol;
  r.holds = margin >= -tol * verdict_scale(lhs, rhs);
  return r;
}

}  // namespace

double sharp_lambda(const std::vector<double>& mu,
                    const std::vector<Complex>& a, const Exponent& exp) {
  require_sizes(mu, a);
  require_positive_mu(mu);
  const std::vector<double> abs_a = moduli(a);
  if (all_zero(abs_a)) {
    throw DegenerateError("sharp constant is 0 when every a_i = 0");
  }
  return pow_nonneg(weight_coeff_sum(mu, abs_a, exp), exp.p - 1.0);
}

std::vector<double> q_weights(const std::vector<double>& mu,
                              const std::vector<Complex>& a,
                              const Exponent& exp) {
  require_sizes(mu, a);
  require_positive_mu(mu);
  const std::vector<double> abs_a = moduli(a);
  if (all_zero(abs_a)) {
    throw DegenerateError("Q-weights undefined when every a_i = 0");
  }
  const double e = exp.inv_p_minus_1();
  const double s_pow = pow_nonneg(weight_coeff_sum(mu, abs_a, exp), exp.p);
  std::vector<double> q(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    q[i] = pow_nonneg(mu[i], e) * pow_nonneg(abs_a[i], exp.q) / s_pow;
  }
  return q;
}

std::vector<double> extremal_point(const std::vector<double>& mu,
                                   const std::vector<Complex>& a,
                                   const Exponent& exp) {
  require_sizes(mu, a);
  require_positive_mu(mu);
  const std::vector<double> abs_a = moduli(a);
  if (all_zero(abs_a)) {
    throw DegenerateError("extremal point undefined when every a_i = 0");
  }
  const double e = exp.inv_p_minus_1();
  std::vector<double> x(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    x[i] = pow_nonneg(abs_a[i] * mu[i], e);
  }
  return x;
}

BoundCertificate certificate(const std::vector<double>& mu,
                             const std::vector<Complex>& a,
                             const Exponent& exp) {
  BoundCertificate cert;
  cert.lambda_bar = sharp_lambda(mu, a, exp);
  cert.Q = q_weights(mu, a, exp);
  cert.x_star = extremal_point(mu, a, exp);
  cert.case_label = CaseLabel::CaseI;
  return cert;
}

InequalityReport check_case_i(const WeightedSystem& sys, double lambda,
                              double tol) {
  if (!sys.has_points()) throw DomainError("check requires points x");
  require_positive_mu(sys.mu());
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");

  const double p = sys.exponent().p;
  const double lhs = weighted_power_sum(moduli(sys.x()), sys.mu(), p);
  const double rhs =
      pow_nonneg(std::abs(weighted_sum(sys.a(), sys.x())), p) / lambda;
  const bool guaranteed =
      admissible_case_i(sys.mu(), sys.a(), sys.exponent(), lambda);
  return make_report(lhs, rhs, lhs - rhs, guaranteed, tol);
}

bool admissible_case_i(const std::vector<double>& mu,
                       const std::vector<Complex>& a, const Exponent& exp,
                       double lambda) {
  require_sizes(mu, a);
  require_positive_mu(mu);
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  const double s = weight_coeff_sum(mu, moduli(a), exp);
  const double lam_root = pow_nonneg(lambda, exp.inv_p_minus_1());
  return lam_root - s >= -kIdentityTol * std::max({1.0, lam_root, s});
}

InequalityReport check_case_ii(const WeightedSystem& sys, double lambda,
                               double tol) {
  if (!sys.has_points()) throw DomainError("check requires points x");
  require_case_ii_signs(sys.mu(), lambda);
  if (sys.a()[0] == Complex{0.0, 0.0}) {
    throw DomainError("a_1 must be nonzero in the reversed case");
  }

  const double p = sys.exponent().p;
  const double lhs = weighted_power_sum(moduli(sys.x()), sys.mu(), p);
  const double rhs =
      pow_nonneg(std::abs(weighted_sum(sys.a(), sys.x())), p) / lambda;
  const bool guaranteed =
      admissible_case_ii(sys.mu(), sys.a(), sys.exponent(), lambda);
  // Reversed direction: the weighted power sum sits below the ratio.
  return make_report(lhs, rhs, rhs - lhs, guaranteed, tol);
}

bool admissible_case_ii(const std::vector<double>& mu,
                        const std::vector<Complex>& a, const Exponent& exp,
                        double lambda) {
  require_sizes(mu, a);
  require_case_ii_signs(mu, lambda);
  std::vector<double> abs_mu(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) abs_mu[i] = std::abs(mu[i]);
  return admissible_magnitudes_reversed(abs_mu, moduli(a), exp, lambda);
}

InequalityReport check_case_iii(const WeightedSystem& sys, double lambda,
                                double tol) {
  if (!sys.has_points()) throw DomainError("check requires points x");
  const std::vector<double>& mu = sys.mu();
  if (mu.size() < 2) {
    throw DomainError("the mixed-sign case needs at least two weights");
  }
  if (!(mu[0] < 0.0)) throw DomainError("mu_1 must be negative");
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (!(mu[i] > 0.0)) throw DomainError("mu_i must be positive for i >= 2");
  }
  if (!(lambda < 0.0)) throw DomainError("lambda must be negative");

  const double p = sys.exponent().p;
  const double lhs = weighted_power_sum(moduli(sys.x()), mu, p);
  const double rhs =
      pow_nonneg(std::abs(weighted_sum(sys.a(), sys.x())), p) / lambda;
  std::vector<double> abs_mu(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) abs_mu[i] = std::abs(mu[i]);
  const bool guaranteed = admissible_magnitudes_reversed(
      abs_mu, moduli(sys.a()), sys.exponent(), -lambda);
  return make_report(lhs, rhs, lhs - rhs, guaranteed, tol);
}

CaseTransform case_ii_transform(const WeightedSystem& sys, double lambda) {
  if (!sys.has_points()) throw DomainError("transform requires points x");
  require_case_ii_signs(sys.mu(), lambda);
  const Complex a1 = sys.a()[0];
  if (a1 == Complex{0.0, 0.0}) {
    throw DomainError("a_1 must be nonzero: the substitution divides by it");
  }

  const std::size_t n = sys.size();
  CaseTransform t;
  t.Lambda = sys.mu()[0];
  t.nu.resize(n);
  t.z.resize(n);
  t.C.resize(n);
  t.nu[0] = lambda;
  t.z[0] = weighted_sum(sys.a(), sys.x());
  t.C[0] = Complex{1.0, 0.0} / a1;
  for (std::size_t i = 1; i < n; ++i) {
    t.nu[i] = -sys.mu()[i];
    t.z[i] = sys.x()[i];
    t.C[i] = -sys.a()[i] / a1;
  }
  return t;
}

BohrParams bohr_params(double s, double p) {
  if (!(s > 1.0 && s <= 2.0)) {
    throw DomainError("Bohr parameter s must lie in (1, 2]");
  }
  const Exponent exp(p);  // validates p
  BohrParams b;
  b.s = s;
  b.t = s / (s - 1.0);
  b.p = p;
  b.a = s - 1.0;
  b.b = 1.0;
  b.mu = 1.0 / s;
  b.nu = 1.0 / b.t;
  b.lambda = (s - 1.0) * pow_nonneg(s, p - 2.0);
  return b;
}

std::pair<InequalityReport, InequalityReport> bohr_chain_check(
    double s, double p, double x, double y, double tol) {
  if (!(x >= 0.0 && y >= 0.0)) {
    throw DomainError("Bohr chain requires x, y >= 0");
  }
  const BohrParams bp = bohr_params(s, p);
  const double sum_side =
      bp.s * pow_nonneg(x, p) + bp.t * pow_nonneg(y, p);
  const double mid_num = pow_nonneg(bp.a * x + bp.b * y, p);
  const double mid = mid_num / bp.lambda;
  const double tail = mid_num / pow_nonneg(2.0, p - 2.0);

  const InequalityReport first =
      make_report(sum_side, mid, sum_side - mid, true, tol);
  const InequalityReport second = make_report(mid, tail, mid - tail, true, tol);
  return {first, second};
}

}  // namespace sharpbound
