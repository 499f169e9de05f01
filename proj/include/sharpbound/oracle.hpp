#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sharpbound/core.hpp"

namespace sharpbound {

// Closed interval for one search coordinate.
struct Interval {
  double lo = 0.0;
  double hi = 10.0;
};

// Budget and reproducibility knobs for the randomized searches. Identical
// configs on identical inputs yield bit-identical results: every trial
// draws from its own substream keyed by (seed, trial index), so reports do
// not depend on evaluation order.
struct SearchConfig {
  std::uint64_t seed = 1;
  int trials = 1000;
  int local_steps = 200;      // coordinate sweeps spent on refinement
  double step_decay = 0.7;    // multiplicative shrink of the step on stall
  std::vector<Interval> box;  // per-coordinate bounds; empty means [0,10]
};

// One sampled input, kept whole so a reported violation can be replayed.
struct FuzzInstance {
  double p = 2.0;
  std::vector<double> mu;
  std::vector<double> a;
  std::vector<double> x;
  double lambda = 0.0;
};

struct Violation {
  std::int64_t trial = 0;
  std::string kind;  // failed assertion, e.g. "boundary" or "identity"
  double margin = 0.0;
  // True when the failed check was inside the theorem-guaranteed region,
  // so the violation indicts the implementation rather than the sampling.
  bool guaranteed = false;
  FuzzInstance instance;
};

struct CampaignReport {
  std::int64_t instances_tested = 0;
  std::vector<Violation> violations;
  // Minimum margin seen over every assertion, violating or not; 0 when no
  // instance was tested at all.
  double worst_margin = 0.0;
  std::optional<double> best_ratio_found;  // sharpness campaigns only
};

struct SharpnessResult {
  double best_ratio = 0.0;
  std::vector<double> x_best;
};

// Maximizes r(x) = |sum a_i x_i|^p / (sum x_i^p / mu_i) over nonnegative x
// by seeded random restarts followed by multiplicative coordinate ascent on
// the best start. Requires all mu_i > 0. The ratio is invariant under
// scaling of x and under phases of a, so the search runs on |a_i| and any
// box touching the optimal ray suffices. best_ratio never exceeds the sharp
// constant beyond rounding and reaches it within 1e-6 relative on default
// budgets for n <= 6.
SharpnessResult sharpness_search_detail(const std::vector<double>& mu,
                                        const std::vector<Complex>& a,
                                        const Exponent& exp,
                                        const SearchConfig& cfg);

// Contract form of the above: just the ratio.
double sharpness_search(const std::vector<double>& mu,
                        const std::vector<Complex>& a, const Exponent& exp,
                        const SearchConfig& cfg);

// Sharpness search wrapped as a campaign: best_ratio_found is set,
// worst_margin is the shortfall sharp_lambda - best_ratio, and a violation
// is recorded only if the ratio exceeds sharp_lambda beyond 1e-9 relative,
// which would falsify the closed form.
CampaignReport sharpness_campaign(const std::vector<double>& mu,
                                  const std::vector<Complex>& a,
                                  const Exponent& exp,
                                  const SearchConfig& cfg);

// Randomized campaign over one sign pattern. Each trial samples mu, a, x
// for `label`, derives the admissible boundary value of lambda, and runs
// the matching check at the boundary and strictly inside, plus once more at
// the boundary after a short margin-minimizing hunt from the sampled x.
// lambda_scale multiplies every tested lambda; 1.0 stays inside the
// guaranteed region, values below 1 in case (i) step outside it so the
// campaign can demonstrate genuine counterexample sensitivity.
// Requires n >= 1 for case (i) and n >= 2 for cases (ii)/(iii).
CampaignReport fuzz_case(CaseLabel label, std::size_t n, const Exponent& exp,
                         const SearchConfig& cfg, double lambda_scale = 1.0);

// Randomized campaign over the refined bound. For p >= 2 asserts
// lhs >= total >= main_term per instance; for 1 < p <= 2 asserts
// 0 <= gap <= upper; at p = 2 both, where the bound is an identity and
// |lhs - total| <= 1e-12 * lhs is enforced.
CampaignReport fuzz_refinement(std::size_t n, double p,
                               const SearchConfig& cfg);

// Searches for a point of equality at lambda = sharp_lambda. Returns a
// point within 1e-6 relative of the extremal ray, up to scaling. Throws
// ConvergenceError when the budget or box cannot reach the ray.
std::vector<double> equality_probe(const std::vector<double>& mu,
                                   const std::vector<Complex>& a,
                                   const Exponent& exp,
                                   const SearchConfig& cfg = SearchConfig{});

}  // namespace sharpbound
