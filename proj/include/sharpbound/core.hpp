#pragma once
// sharpbound — sharp constants, superquadratic refinements, and exact
// identities for weighted power-mean inequalities, with a brute-force
// verification oracle and a JSON CLI.
//
// core: domain types, conjugate-exponent algebra, sign-case
// classification, and the complex-modulus reduction shared by all
// other modules. Everything here is an immutable value type and every
// operation is a pure function.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharpbound {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Input outside an operation's domain (sign pattern, exponent range, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid input on which the quantity degenerates
/// (e.g. every coefficient zero, so the sharp constant is 0 and the
/// inequality is vacuous).
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A search exhausted its budget without reaching its target; signals a
/// bug or inadmissible parameters rather than a numerical near-miss.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------
// Algebraic identities (conjugacy, Q-weight sums, the Euler-Lagrange
// identity) are held to kIdentityTol. Inequality verdicts use the looser
// kVerdictTol: p-th powers amplify relative rounding error by roughly a
// factor of p, and verdicts must not flip on that noise.

inline constexpr double kConjugacyTol = 1e-14;
inline constexpr double kIdentityTol = 1e-12;
inline constexpr double kVerdictTol = 1e-9;

// Practical exponent range: for p <= 64, x^p stays inside double range
// for moduli up to 1e4.
inline constexpr double kMaxExponent = 64.0;

/// Comparison scale for an inequality's two sides: max(1, |lhs|, |rhs|).
double verdict_scale(double lhs, double rhs);

/// |a - b| <= tol * max(1, |a|, |b|).
bool rel_close(double a, double b, double tol);

/// x^e for x >= 0. Exact at x = 0 (0^e = 0 for e > 0); DomainError for
/// x < 0 or for 0 raised to a non-positive power. Negative exponents are
/// fine for x > 0.
double pow_nonneg(double x, double e);

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// A Hoelder exponent pair: p > 1 together with its conjugate
/// q = p/(p-1), so that 1/p + 1/q = 1.
struct Exponent {
  double p;
  double q;

  /// DomainError unless 1 < p <= 64.
  explicit Exponent(double p_);

  /// 1/(p-1), the exponent the weights carry throughout.
  double inv_p_minus_1() const { return 1.0 / (p - 1.0); }
};

/// Exponent with q = p/(p-1). DomainError if p <= 1 (or p > 64).
Exponent conjugate_exponent(double p);

/// Sign patterns under which the weighted inequality is certified.
/// Patterns outside the three known cases classify as Unclassified;
/// no verdict is guessed for them.
enum class CaseLabel { CaseI, CaseII, CaseIII, Unclassified };

const char* to_string(CaseLabel c);

/// Matches (mu, lambda) against the certified sign patterns:
///   CaseI   : every mu_i > 0 and lambda > 0
///   CaseII  : mu_1 > 0, mu_i < 0 for i >= 2, lambda > 0  (n >= 2)
///   CaseIII : mu_1 < 0, mu_i > 0 for i >= 2, lambda < 0  (n >= 2)
/// DomainError if any mu_i = 0 or lambda = 0.
CaseLabel classify_case(const std::vector<double>& mu, double lambda);

/// |x_i| elementwise. Reduces complex inputs to the nonnegative-real
/// setting in which every bound below is evaluated.
std::vector<double> moduli(const std::vector<Complex>& x);

/// The shared input of every inequality: exponent p, coefficients a_i,
/// nonzero signed weights mu_i, and (optionally) points x_i. Bound
/// computation needs only (a, mu); checks need x as well.
class WeightedSystem {
 public:
  /// DomainError on empty/mismatched lengths or any mu_i = 0. An empty
  /// x means "points absent".
  WeightedSystem(Exponent exponent, std::vector<Complex> a,
                 std::vector<double> mu, std::vector<Complex> x = {});

  const Exponent& exponent() const { return exponent_; }
  const std::vector<Complex>& a() const { return a_; }
  const std::vector<double>& mu() const { return mu_; }
  const std::vector<Complex>& x() const { return x_; }

  std::size_t size() const { return mu_.size(); }
  bool has_points() const { return !x_.empty(); }

 private:
  Exponent exponent_;
  std::vector<Complex> a_;
  std::vector<double> mu_;
  std::vector<Complex> x_;
};

/// Verdict on one inequality instance. `margin` is the slack of the
/// direction the theorem asserts (lhs - rhs where the sum side
/// dominates, rhs - lhs for the reversed case), so uniformly
///   holds  <=>  margin >= -tolerance_used * max(1, |lhs|, |rhs|).
/// `guaranteed` records whether the supplied lambda satisfies the
/// case's admissibility condition; a report can hold without being
/// guaranteed.
struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool holds = false;
  bool guaranteed = false;
  double tolerance_used = kVerdictTol;
};

/// Output of the sharp-constant machinery: the smallest admissible
/// lambda, the weights it solves for, and the point where the
/// inequality is tight.
struct BoundCertificate {
  double lambda_bar = 0.0;
  std::vector<double> Q;
  std::vector<double> x_star;
  CaseLabel case_label = CaseLabel::CaseI;
};

// ---------------------------------------------------------------------------
// Shared kernels
// ---------------------------------------------------------------------------

/// sum_i x_i^p / mu_i for nonnegative real x. Signed weights allowed.
double weighted_power_sum(const std::vector<double>& x,
                          const std::vector<double>& mu, double p);

/// sum_i a_i * x_i.
Complex weighted_sum(const std::vector<Complex>& a,
                     const std::vector<Complex>& x);

}  // namespace sharpbound
