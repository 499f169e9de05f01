#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "sharpbound/core.hpp"
#include "test_util.hpp"

using namespace sharpbound;

TEST_CASE("conjugate exponent values") {
  CHECK(conjugate_exponent(2.0).q == 2.0);
  CHECK(conjugate_exponent(3.0).q == 1.5);
  CHECK(rel_close(conjugate_exponent(4.0).q, 4.0 / 3.0, 1e-15));
}

TEST_CASE("conjugacy identity and involution across a grid") {
  testutil::Rand rand(11);
  for (int k = 0; k < 500; ++k) {
    const double p = rand.uniform(1.0001, 64.0);
    const Exponent exp(p);
    CHECK(std::abs(1.0 / exp.p + 1.0 / exp.q - 1.0) <= kConjugacyTol);
    CHECK(rel_close(Exponent(exp.q).q, p, kConjugacyTol));
  }
}

TEST_CASE("exponent range is enforced") {
  CHECK_THROWS_AS(Exponent(1.0), DomainError);
  CHECK_THROWS_AS(Exponent(0.5), DomainError);
  CHECK_THROWS_AS(Exponent(64.5), DomainError);
  CHECK_THROWS_AS(Exponent(std::nan("")), DomainError);
  CHECK_NOTHROW(Exponent(64.0));
  CHECK_NOTHROW(Exponent(1.0000001));
}

TEST_CASE("case classification follows the sign patterns") {
  CHECK(classify_case({1.0, 2.0}, 3.0) == CaseLabel::CaseI);
  CHECK(classify_case({1.0, -1.0}, 3.0) == CaseLabel::CaseII);
  CHECK(classify_case({-1.0, 1.0, 2.0}, -1.0) == CaseLabel::CaseIII);

  CHECK(classify_case({1.0}, 5.0) == CaseLabel::CaseI);
  // Mixed patterns the theorems do not cover stay unclassified.
  CHECK(classify_case({1.0, -1.0, 1.0}, 3.0) == CaseLabel::Unclassified);
  CHECK(classify_case({-1.0, -1.0}, -3.0) == CaseLabel::Unclassified);
  CHECK(classify_case({1.0, 2.0}, -3.0) == CaseLabel::Unclassified);
  CHECK(classify_case({1.0, -1.0}, -3.0) == CaseLabel::Unclassified);
  // A lone weight cannot satisfy a two-sign pattern.
  CHECK(classify_case({-1.0}, -1.0) == CaseLabel::Unclassified);

  CHECK_THROWS_AS(classify_case({1.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(classify_case({1.0}, 0.0), DomainError);
  CHECK_THROWS_AS(classify_case({}, 1.0), DomainError);
}

TEST_CASE("case labels print their numerals") {
  CHECK(std::string(to_string(CaseLabel::CaseI)) == "i");
  CHECK(std::string(to_string(CaseLabel::CaseII)) == "ii");
  CHECK(std::string(to_string(CaseLabel::CaseIII)) == "iii");
  CHECK(std::string(to_string(CaseLabel::Unclassified)) == "unclassified");
}

TEST_CASE("moduli reduces complex input to magnitudes") {
  const std::vector<double> m = moduli({Complex(3.0, 4.0)});
  CHECK(m.size() == 1);
  CHECK(m[0] == 5.0);

  const std::vector<double> n = moduli({Complex(0.0), Complex(-2.0)});
  CHECK(n[0] == 0.0);
  CHECK(n[1] == 2.0);

  CHECK(rel_close(moduli({Complex(1.0, 1.0)})[0], std::sqrt(2.0), 1e-15));
}

TEST_CASE("moduli is invariant under unit-modulus factors") {
  testutil::Rand rand(17);
  for (int k = 0; k < 200; ++k) {
    const Complex z(rand.uniform(-10.0, 10.0), rand.uniform(-10.0, 10.0));
    const double theta = rand.uniform(0.0, 6.283185307179586);
    const Complex rotated = z * Complex(std::cos(theta), std::sin(theta));
    CHECK(rel_close(moduli({rotated})[0], moduli({z})[0], 1e-12));
  }
}

TEST_CASE("weighted system validates its shape") {
  const Exponent exp(2.0);
  CHECK_THROWS_AS(WeightedSystem(exp, {}, {}), DomainError);
  CHECK_THROWS_AS(WeightedSystem(exp, {Complex(1.0)}, {1.0, 2.0}),
                  DomainError);
  CHECK_THROWS_AS(WeightedSystem(exp, {Complex(1.0)}, {0.0}), DomainError);
  CHECK_THROWS_AS(
      WeightedSystem(exp, {Complex(1.0)}, {1.0}, {Complex(1.0), Complex(2.0)}),
      DomainError);

  const WeightedSystem no_points(exp, {Complex(1.0)}, {1.0});
  CHECK_FALSE(no_points.has_points());
  const WeightedSystem with_points(exp, {Complex(1.0)}, {1.0},
                                   {Complex(2.0)});
  CHECK(with_points.has_points());
  CHECK(with_points.size() == 1);
}

TEST_CASE("pow_nonneg handles the edge cases") {
  CHECK(pow_nonneg(0.0, 2.5) == 0.0);
  CHECK(pow_nonneg(2.0, 3.0) == 8.0);
  CHECK_THROWS_AS(pow_nonneg(-1.0, 2.0), DomainError);
  CHECK_THROWS_AS(pow_nonneg(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(pow_nonneg(0.0, -1.0), DomainError);
}

TEST_CASE("verdict scale and closeness helpers") {
  CHECK(verdict_scale(0.5, -0.25) == 1.0);
  CHECK(verdict_scale(3.0, -7.0) == 7.0);
  CHECK(rel_close(1.0, 1.0 + 5e-13, 1e-12));
  CHECK_FALSE(rel_close(1.0, 1.1, 1e-12));
  // Large magnitudes are compared relatively, not absolutely.
  CHECK(rel_close(1e12, 1e12 + 0.5, 1e-12));
}

TEST_CASE("weighted sums match direct arithmetic") {
  CHECK(weighted_power_sum({3.0, 4.0}, {1.0, 1.0}, 2.0) == 25.0);
  CHECK(weighted_power_sum({2.0}, {4.0}, 2.0) == 1.0);
  const Complex s = weighted_sum({Complex(2.0), Complex(1.0)},
                                 {Complex(3.0), Complex(-1.0)});
  CHECK(s.real() == 5.0);
  CHECK(s.imag() == 0.0);
}
