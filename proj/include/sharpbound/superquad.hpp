#pragma once
// superquad: superquadracity machinery for the power functions
// f(x) = x^p — the pointwise witness inequality, the refined discrete
// Jensen inequality, the superquadratic strengthening of the sharp
// bound, the Euler-Lagrange identity it collapses to at p = 2, and the
// two-sided gap bound in the subquadratic regime 1 < p <= 2.

#include <vector>

#include "sharpbound/core.hpp"

namespace sharpbound {

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Witness slope for f(x) = x^p: C_f(x) = p x^(p-1), the derivative —
/// the canonical witness for a differentiable function with f(0) = 0.
struct SuperquadraticWitness {
  double p = 2.0;
  double slope(double x) const { return p * pow_nonneg(x, p - 1.0); }
};

/// Split of the refined Jensen inequality
///   f(sum alpha_i x_i) <= sum alpha_i f(x_i)
///                           - sum alpha_i f(|x_i - mean|).
struct JensenRefinement {
  double lhs = 0.0;        // f(weighted mean)
  double rhs = 0.0;        // sum alpha_i f(x_i) - remainder
  double remainder = 0.0;  // sum alpha_i f(|x_i - mean|), the spread term
};

/// Decomposition of the strengthened bound:
///   sum x_i^p / mu_i >= main_term + correction      (p >= 2)
/// with main_term the sharp-constant bound and correction the
/// nonnegative superquadratic remainder; at p = 2 the bound is exact.
/// For 1 < p <= 2 the correction instead caps the gap (see
/// corollary3-style GapBound below).
struct RefinedBound {
  double main_term = 0.0;
  double correction = 0.0;
  double total = 0.0;          // main_term + correction
  std::vector<double> A;       // per-term recentred points
  double weighted_mean = 0.0;  // sum a_i x_i = sum Q_i A_i / sum Q_j
};

/// Subquadratic regime: 0 <= gap <= upper, where gap is how far the
/// weighted power sum sits above the sharp-constant bound and upper is
/// the superquadratic correction evaluated on the same data.
struct GapBound {
  double gap = 0.0;
  double upper = 0.0;
};

/// Both sides of the Euler-Lagrange identity.
struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// f(y) - f(x) - C_f(x)(y - x) - f(|y - x|) for f(x) = x^p, x, y >= 0.
/// Nonnegative for p >= 2 (superquadratic), nonpositive for
/// 1 < p <= 2 (subquadratic), identically zero at p = 2.
double superquadratic_check(double p, double x, double y);

/// Refined Jensen split for f(x) = x^p over convex weights alpha
/// (sum alpha_i = 1, alpha_i >= 0) and points x_i >= 0. The contract
/// lhs <= rhs holds for p >= 2 and reverses for 1 < p <= 2.
JensenRefinement jensen_refinement(double p, const std::vector<double>& alpha,
                                   const std::vector<double>& x);

/// The strengthened bound for a system with nonnegative real a, x and
/// positive mu. With S = sum_j mu_j^(1/(p-1)) a_j^q:
///   main_term  = (sum a_i x_i)^p / S^(p-1)
///   A_i        = (a_i mu_i)^(-1/(p-1)) S x_i
///   correction = sum_i [mu_i^(1/(p-1)) a_i^q / S^p] |A_i - mean|^p
/// Terms with a_i = 0 carry zero weight and are skipped (A_i reported
/// as 0); when such a term has x_i > 0 the lower bound still holds but
/// the subquadratic gap cap may not — a documented limitation.
/// DegenerateError if S = 0.
RefinedBound refined_bound(const WeightedSystem& sys);

/// x^2/mu + y^2/nu
///   = (ax+by)^2/(mu a^2 + nu b^2)
///     + (nu b x - a mu y)^2 / (mu nu (mu a^2 + nu b^2)),
/// exact for all inputs with mu, nu and mu a^2 + nu b^2 nonzero.
IdentitySides euler_lagrange_identity(double x, double y, double a, double b,
                                      double mu, double nu);

/// Two-term specialization of the strengthened bound, computed directly
/// from its closed two-term form (an independent route; agrees with
/// refined_bound on the same data to rounding).
RefinedBound corollary2_refined_n2(double x, double y, double a, double b,
                                   double mu, double nu, double p);

/// Subquadratic two-sided bound for 1 < p <= 2:
///   0 <= sum x_i^p/mu_i - main_term <= correction.
GapBound corollary3_gap(const WeightedSystem& sys);

}  // namespace sharpbound
