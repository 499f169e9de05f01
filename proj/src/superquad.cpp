#include "sharpbound/superquad.hpp"

#include <cmath>

namespace sharpbound {

namespace {

void require_exponent_range(double p) {
  if (!(p > 1.0) || p > kMaxExponent) {
    throw DomainError("exponent p must lie in (1, 64]");
  }
}

// Real nonnegative view of a system whose a and x must be real with
// nonnegative parts and whose mu must be positive.
struct RealSystem {
  std::vector<double> a;
  std::vector<double> x;
};

RealSystem real_nonneg_view(const WeightedSystem& sys) {
  if (!sys.has_points()) {
    throw DomainError("refined bound requires points x");
  }
  RealSystem r;
  r.a.resize(sys.size());
  r.x.resize(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Complex a = sys.a()[i];
    const Complex x = sys.x()[i];
    if (a.imag() != 0.0 || x.imag() != 0.0) {
      throw DomainError("refined bound requires real a and x");
    }
    if (!(a.real() >= 0.0) || !(x.real() >= 0.0)) {
      throw DomainError("refined bound requires nonnegative a and x");
    }
    if (!(sys.mu()[i] > 0.0)) {
      throw DomainError("refined bound requires positive mu");
    }
    r.a[i] = a.real();
    r.x[i] = x.real();
  }
  return r;
}

}  // namespace

double superquadratic_check(double p, double x, double y) {
  require_exponent_range(p);
  if (!(x >= 0.0 && y >= 0.0)) {
    throw DomainError("superquadratic check requires x, y >= 0");
  }
  const SuperquadraticWitness f{p};
  return pow_nonneg(y, p) - pow_nonneg(x, p) - f.slope(x) * (y - x) -
         pow_nonneg(std::abs(y - x), p);
}

JensenRefinement jensen_refinement(double p, const std::vector<double>& alpha,
                                   const std::vector<double>& x) {
  require_exponent_range(p);
  if (alpha.empty() || alpha.size() != x.size()) {
    throw DomainError("alpha and x must be nonempty and of equal length");
  }
  double alpha_sum = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] >= 0.0)) throw DomainError("weights must be nonnegative");
    if (!(x[i] >= 0.0)) throw DomainError("points must be nonnegative");
    alpha_sum += alpha[i];
  }
  if (std::abs(alpha_sum - 1.0) > kIdentityTol) {
    throw DomainError("weights must sum to 1");
  }

  double mean = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) mean += alpha[i] * x[i];

  JensenRefinement out;
  out.lhs = pow_nonneg(mean, p);
  double power_mean = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    power_mean += alpha[i] * pow_nonneg(x[i], p);
    out.remainder += alpha[i] * pow_nonneg(std::abs(x[i] - mean), p);
  }
  out.rhs = power_mean - out.remainder;
  return out;
}

RefinedBound refined_bound(const WeightedSystem& sys) {
  const RealSystem r = real_nonneg_view(sys);
  const Exponent& exp = sys.exponent();
  const double e = exp.inv_p_minus_1();
  const std::size_t n = sys.size();

  // Per-term weights mu_i^(1/(p-1)) a_i^q and their sum S.
  std::vector<double> w(n, 0.0);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = pow_nonneg(sys.mu()[i], e) * pow_nonneg(r.a[i], exp.q);
    s += w[i];
  }
  if (s == 0.0) {
    throw DegenerateError("refined bound degenerate: every a_i = 0");
  }

  RefinedBound out;
  out.A.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    out.weighted_mean += r.a[i] * r.x[i];
  }
  out.main_term =
      pow_nonneg(out.weighted_mean, exp.p) / pow_nonneg(s, exp.p - 1.0);

  const double s_pow = pow_nonneg(s, exp.p);
  for (std::size_t i = 0; i < n; ++i) {
    if (r.a[i] == 0.0) continue;  // zero weight, A_i left at 0
    out.A[i] = pow_nonneg(r.a[i] * sys.mu()[i], -e) * s * r.x[i];
    out.correction +=
        (w[i] / s_pow) *
        pow_nonneg(std::abs(out.A[i] - out.weighted_mean), exp.p);
  }
  out.total = out.main_term + out.correction;
  return out;
}

IdentitySides euler_lagrange_identity(double x, double y, double a, double b,
                                      double mu, double nu) {
  if (mu == 0.0 || nu == 0.0) {
    throw DomainError("identity requires nonzero mu and nu");
  }
  const double denom = mu * a * a + nu * b * b;
  if (denom == 0.0) {
    throw DomainError("identity requires mu a^2 + nu b^2 != 0");
  }
  IdentitySides out;
  out.lhs = x * x / mu + y * y / nu;
  const double cross = nu * b * x - a * mu * y;
  out.rhs = (a * x + b * y) * (a * x + b * y) / denom +
            cross * cross / (mu * nu * denom);
  return out;
}

RefinedBound corollary2_refined_n2(double x, double y, double a, double b,
                                   double mu, double nu, double p) {
  const Exponent exp(p);
  if (!(x >= 0.0 && y >= 0.0 && a >= 0.0 && b >= 0.0)) {
    throw DomainError("two-term refined bound requires nonnegative x, y, a, b");
  }
  if (!(mu > 0.0 && nu > 0.0)) {
    throw DomainError("two-term refined bound requires positive mu, nu");
  }
  const double e = exp.inv_p_minus_1();
  const double wa = pow_nonneg(mu, e) * pow_nonneg(a, exp.q);
  const double wb = pow_nonneg(nu, e) * pow_nonneg(b, exp.q);
  const double s = wa + wb;
  if (s == 0.0) {
    throw DegenerateError("two-term refined bound degenerate: a = b = 0");
  }

  RefinedBound out;
  out.A.assign(2, 0.0);
  out.weighted_mean = a * x + b * y;
  out.main_term = pow_nonneg(out.weighted_mean, p) / pow_nonneg(s, p - 1.0);

  // Closed two-term form: the scaled points are compared with mean/S and
  // the weights stay unnormalized.
  const double scaled_mean = out.weighted_mean / s;
  if (a > 0.0) {
    const double ax = pow_nonneg(a * mu, -e) * x;
    out.A[0] = ax * s;
    out.correction += wa * pow_nonneg(std::abs(ax - scaled_mean), p);
  }
  if (b > 0.0) {
    const double by = pow_nonneg(nu * b, -e) * y;
    out.A[1] = by * s;
    out.correction += wb * pow_nonneg(std::abs(by - scaled_mean), p);
  }
  out.total = out.main_term + out.correction;
  return out;
}

GapBound corollary3_gap(const WeightedSystem& sys) {
  const double p = sys.exponent().p;
  if (!(p > 1.0 && p <= 2.0)) {
    throw DomainError("gap bound applies for 1 < p <= 2");
  }
  const RealSystem r = real_nonneg_view(sys);
  const RefinedBound rb = refined_bound(sys);

  GapBound out;
  out.gap = weighted_power_sum(r.x, sys.mu(), p) - rb.main_term;
  out.upper = rb.correction;
  return out;
}

}  // namespace sharpbound
