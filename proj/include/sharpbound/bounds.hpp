#pragma once
// bounds: the sharp constant lambda_bar, its Q-weights and extremal
// point, admissibility predicates and inequality checks for all three
// sign cases, the substitution that maps the reversed case onto the
// all-positive one, and the Bohr specialization.

#include <utility>
#include <vector>

#include "sharpbound/core.hpp"

namespace sharpbound {

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Substitution data turning a Case (ii) instance into a Case (i) one:
/// the target weight moves to Lambda = |mu_1|, the old target |lambda|
/// joins the weight list, the weighted sum becomes the first point, and
/// the coefficients are rescaled by 1/a_1.
struct CaseTransform {
  double Lambda = 0.0;      // transformed target weight, |mu_1|
  std::vector<double> nu;   // [ |lambda|, |mu_2|, ..., |mu_n| ]
  std::vector<Complex> z;   // [ sum_i a_i x_i, x_2, ..., x_n ]
  std::vector<Complex> C;   // [ 1/a_1, -a_2/a_1, ..., -a_n/a_1 ]
};

/// Parameter pack under which Bohr's inequality
///   s x^p + t y^p >= ((s-1)x + y)^p / ((s-1) s^(p-2))
/// is the two-term all-positive case: a = s-1, b = 1, mu = 1/s,
/// nu = 1/t, lambda = (s-1) s^(p-2).
struct BohrParams {
  double s = 0.0;
  double t = 0.0;  // conjugate of s
  double p = 0.0;
  double a = 0.0;
  double b = 1.0;
  double mu = 0.0;
  double nu = 0.0;
  double lambda = 0.0;
};

// ---------------------------------------------------------------------------
// Sharp constant machinery (all-positive weights)
// ---------------------------------------------------------------------------

/// The smallest lambda for which
///   sum_i |x_i|^p / mu_i  >=  |sum_i a_i x_i|^p / lambda
/// holds for every x:
///   lambda_bar = ( sum_i mu_i^(1/(p-1)) |a_i|^q )^(p-1).
/// DomainError if any mu_i <= 0; DegenerateError if every a_i = 0.
double sharp_lambda(const std::vector<double>& mu,
                    const std::vector<Complex>& a, const Exponent& exp);

/// Q_i = mu_i^(1/(p-1)) |a_i|^q / S^p with S the sum above; the weights
/// solve the equality analysis and satisfy sum_i Q_i = 1 / lambda_bar.
/// Zero coefficients carry zero weight.
std::vector<double> q_weights(const std::vector<double>& mu,
                              const std::vector<Complex>& a,
                              const Exponent& exp);

/// The ray on which the bound is attained: x*_i = (|a_i| mu_i)^(1/(p-1)).
/// Terms with a_i = 0 sit at x*_i = 0.
std::vector<double> extremal_point(const std::vector<double>& mu,
                                   const std::vector<Complex>& a,
                                   const Exponent& exp);

/// lambda_bar, Q, and x* in one certificate.
BoundCertificate certificate(const std::vector<double>& mu,
                             const std::vector<Complex>& a,
                             const Exponent& exp);

// ---------------------------------------------------------------------------
// Inequality checks and admissibility
// ---------------------------------------------------------------------------

/// All-positive case: evaluates
///   lhs = sum |x_i|^p / mu_i   vs   rhs = |sum a_i x_i|^p / lambda,
/// asserted direction lhs >= rhs. Requires mu_i > 0, lambda > 0, points
/// present.
InequalityReport check_case_i(const WeightedSystem& sys, double lambda,
                              double tol = kVerdictTol);

/// lambda^(1/(p-1)) >= sum_i mu_i^(1/(p-1)) |a_i|^q, i.e.
/// lambda >= lambda_bar. The boundary is admissible; comparison uses
/// relative tolerance kIdentityTol in favor of admissibility.
bool admissible_case_i(const std::vector<double>& mu,
                       const std::vector<Complex>& a, const Exponent& exp,
                       double lambda);

/// Reversed case (mu_1 > 0, mu_i < 0 for i >= 2, lambda > 0): evaluates
/// the same two sides with signed weights, asserted direction
/// lhs <= rhs (margin = rhs - lhs). Requires a_1 != 0 and n >= 2.
InequalityReport check_case_ii(const WeightedSystem& sys, double lambda,
                               double tol = kVerdictTol);

/// lambda^(1/(p-1)) <= |mu_1|^(1/(p-1)) |a_1|^q
///                       - sum_{i>=2} |mu_i|^(1/(p-1)) |a_i|^q.
/// False whenever the right side is <= 0 (no admissible lambda exists).
bool admissible_case_ii(const std::vector<double>& mu,
                        const std::vector<Complex>& a, const Exponent& exp,
                        double lambda);

/// Mirror case (mu_1 < 0, mu_i > 0 for i >= 2, lambda < 0): both sides
/// flip sign relative to the reversed case, asserted direction
/// lhs >= rhs. Guaranteed when |lambda| meets the case (ii) condition
/// on the weight magnitudes.
InequalityReport check_case_iii(const WeightedSystem& sys, double lambda,
                                double tol = kVerdictTol);

/// The substitution mapping a Case (ii) instance (with points) onto a
/// Case (i) instance; sum_i C_i z_i reconstructs x_1. DomainError if
/// a_1 = 0.
CaseTransform case_ii_transform(const WeightedSystem& sys, double lambda);

// ---------------------------------------------------------------------------
// Bohr specialization
// ---------------------------------------------------------------------------

/// Bohr parameter pack for 1 < s <= 2, p > 1. The lambda field is the
/// closed form (s-1) s^(p-2), which coincides with the sharp constant
/// of the mapped two-term system.
BohrParams bohr_params(double s, double p);

/// Verifies both links of the chain
///   s x^p + t y^p >= ((s-1)x + y)^p / ((s-1) s^(p-2))
///                 >= ((s-1)x + y)^p / 2^(p-2)
/// for x, y >= 0. Both hold for all valid inputs.
std::pair<InequalityReport, InequalityReport> bohr_chain_check(
    double s, double p, double x, double y, double tol = kVerdictTol);

}  // namespace sharpbound
