#include "sharpbound/core.hpp"

#include <algorithm>
#include <cmath>

namespace sharpbound {

double verdict_scale(double lhs, double rhs) {
  return std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double pow_nonneg(double x, double e) {
  if (!(x >= 0.0)) {
    throw DomainError("pow_nonneg: negative or NaN base " + std::to_string(x));
  }
  if (x == 0.0) {
    if (e > 0.0) return 0.0;
    throw DomainError("pow_nonneg: zero base with non-positive exponent");
  }
  return std::pow(x, e);
}

Exponent::Exponent(double p_) : p(p_), q(0.0) {
  if (!(p > 1.0) || p > kMaxExponent) {
    throw DomainError("exponent p must lie in (1, " +
                      std::to_string(kMaxExponent) + "], got " +
                      std::to_string(p_));
  }
  q = p / (p - 1.0);
}

Exponent conjugate_exponent(double p) { return Exponent(p); }

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::CaseI:
      return "i";
    case CaseLabel::CaseII:
      return "ii";
    case CaseLabel::CaseIII:
      return "iii";
    default:
      return "unclassified";
  }
}

CaseLabel classify_case(const std::vector<double>& mu, double lambda) {
  if (mu.empty()) throw DomainError("classify_case: empty weight list");
  for (double m : mu) {
    if (m == 0.0 || std::isnan(m)) {
      throw DomainError("classify_case: every mu_i must be nonzero");
    }
  }
  if (lambda == 0.0 || std::isnan(lambda)) {
    throw DomainError("classify_case: lambda must be nonzero");
  }

  const bool all_pos = std::all_of(mu.begin(), mu.end(),
                                   [](double m) { return m > 0.0; });
  if (all_pos && lambda > 0.0) return CaseLabel::CaseI;

  // The mixed-sign cases need both a positive and a negative weight.
  if (mu.size() >= 2) {
    const bool tail_neg = std::all_of(mu.begin() + 1, mu.end(),
                                      [](double m) { return m < 0.0; });
    if (mu[0] > 0.0 && tail_neg && lambda > 0.0) return CaseLabel::CaseII;
    const bool tail_pos = std::all_of(mu.begin() + 1, mu.end(),
                                      [](double m) { return m > 0.0; });
    if (mu[0] < 0.0 && tail_pos && lambda < 0.0) return CaseLabel::CaseIII;
  }
  return CaseLabel::Unclassified;
}

std::vector<double> moduli(const std::vector<Complex>& x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::abs(x[i]);
  return out;
}

WeightedSystem::WeightedSystem(Exponent exponent, std::vector<Complex> a,
                               std::vector<double> mu, std::vector<Complex> x)
    : exponent_(exponent),
      a_(std::move(a)),
      mu_(std::move(mu)),
      x_(std::move(x)) {
  if (mu_.empty()) throw DomainError("weighted system: at least one term required");
  if (a_.size() != mu_.size()) {
    throw DomainError("weighted system: a and mu lengths differ");
  }
  if (!x_.empty() && x_.size() != mu_.size()) {
    throw DomainError("weighted system: x length differs from a, mu");
  }
  for (double m : mu_) {
    if (m == 0.0 || std::isnan(m)) {
      throw DomainError("weighted system: every mu_i must be nonzero");
    }
  }
}

double weighted_power_sum(const std::vector<double>& x,
                          const std::vector<double>& mu, double p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += pow_nonneg(x[i], p) / mu[i];
  }
  return acc;
}

Complex weighted_sum(const std::vector<Complex>& a,
                     const std::vector<Complex>& x) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * x[i];
  return acc;
}

}  // namespace sharpbound
