#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "oodlsp/aggregate.hpp"
#include "oodlsp/andness.hpp"
#include "oodlsp/gcd_operator.hpp"
#include "oracle/power_mean_oracle.hpp"

using namespace oodlsp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Preference> prefs(std::initializer_list<double> xs) {
  std::vector<Preference> out;
  for (double x : xs) out.emplace_back(x);
  return out;
}

struct Case {
  std::vector<double> x;
  std::vector<double> w;
};

Case random_case(std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> arity(1, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Case c;
  const int k = arity(rng);
  for (int i = 0; i < k; ++i) {
    double v = unit(rng);
    if (allow_zero && unit(rng) < 0.05) v = 0.0;
    if (unit(rng) < 0.05) v = 1.0;
    c.x.push_back(v);
    c.w.push_back(0.05 + unit(rng));
  }
  const double s = std::accumulate(c.w.begin(), c.w.end(), 0.0);
  for (double& w : c.w) w /= s;
  return c;
}

double agg(const Case& c, double r) {
  std::vector<Preference> p;
  for (double v : c.x) p.emplace_back(v);
  return aggregate(p, WeightVector(c.w), r).value();
}

}  // namespace

TEST_CASE("Preference rejects values outside the unit interval") {
  CHECK_NOTHROW(Preference(0.0));
  CHECK_NOTHROW(Preference(1.0));
  CHECK_THROWS_AS(Preference(-1e-12), ContractViolation);
  CHECK_THROWS_AS(Preference(1.0 + 1e-12), ContractViolation);
  CHECK_THROWS_AS(Preference(std::nan("")), ContractViolation);
}

TEST_CASE("WeightVector validation") {
  CHECK_NOTHROW(WeightVector({0.3, 0.2, 0.15, 0.15, 0.2}));
  CHECK_NOTHROW(WeightVector({1.0}));
  // the unnormalized functionality weights as printed sum to 1.1
  CHECK_THROWS_AS(WeightVector({0.3, 0.2, 0.15, 0.15, 0.3}), ContractViolation);
  CHECK_THROWS_AS(WeightVector({0.0, 1.0}), ContractViolation);
  CHECK_THROWS_AS(WeightVector({}), ContractViolation);
  CHECK(WeightVector::equal(4).values() == std::vector<double>(4, 0.25));
}

TEST_CASE("aggregate: worked examples") {
  SUBCASE("idempotent") {
    CHECK(aggregate(prefs({0.7, 0.7, 0.7}), WeightVector({0.2, 0.5, 0.3}), 0.573).value() ==
          doctest::Approx(0.7).epsilon(1e-12));
  }
  SUBCASE("arithmetic mean") {
    CHECK(aggregate(prefs({0.2, 0.8}), WeightVector({0.5, 0.5}), 1.0).value() == doctest::Approx(0.5));
  }
  SUBCASE("functionality block of LMS-1") {
    const auto v = aggregate(prefs({1.0, 0.4, 0.8, 1.0, 0.7}), WeightVector({0.30, 0.20, 0.15, 0.15, 0.20}), 0.526);
    CHECK(std::abs(v.value() - 0.7719) <= 0.0005);
  }
  SUBCASE("pure conjunction is min") {
    CHECK(aggregate(prefs({0.0, 0.9}), WeightVector({0.5, 0.5}), -kInf).value() == 0.0);
    CHECK(aggregate(prefs({0.3, 0.9}), WeightVector({0.5, 0.5}), GcdSymbol::C).value() == 0.3);
    CHECK(aggregate(prefs({0.3, 0.9}), WeightVector({0.5, 0.5}), GcdSymbol::D).value() == 0.9);
  }
  SUBCASE("limit exponents") {
    CHECK(aggregate(prefs({0.3, 0.9}), WeightVector({0.5, 0.5}), -50.0).value() == 0.3);
    CHECK(aggregate(prefs({0.3, 0.9}), WeightVector({0.5, 0.5}), 75.0).value() == 0.9);
    // log-domain path stays finite where naive powering would underflow
    const double v = aggregate(prefs({1e-30, 0.9}), WeightVector({0.5, 0.5}), 30.0).value();
    CHECK(v == doctest::Approx(std::pow(0.5, 1.0 / 30.0) * 0.9).epsilon(1e-12));
  }
  SUBCASE("geometric limit near r = 0") {
    const double v = aggregate(prefs({0.25, 1.0}), WeightVector({0.5, 0.5}), 1e-12).value();
    CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("single input passes through") {
    CHECK(aggregate(prefs({0.42}), WeightVector({1.0}), GcdSymbol::CMinusMinus).value() == 0.42);
  }
}

TEST_CASE("aggregate: contract violations") {
  CHECK_THROWS_AS((void)aggregate(prefs({0.1, 0.2}), WeightVector({1.0}), 1.0), ContractViolation);
  CHECK_THROWS_AS((void)aggregate(prefs({}), WeightVector({1.0}), 1.0), ContractViolation);
  CHECK_THROWS_AS((void)aggregate(prefs({0.1, 0.2}), WeightVector({0.5, 0.5}), std::nan("")), ContractViolation);
}

TEST_CASE("aggregate agrees with a long-double textbook power mean") {
  std::mt19937_64 rng(11);
  const double exponents[] = {-9.0, -3.5, -0.7, -0.148, 0.0, 0.26, 0.619, 1.0, 2.0, 5.8, 9.9};
  for (int i = 0; i < 2000; ++i) {
    const Case c = random_case(rng);
    for (double r : exponents) {
      CHECK(agg(c, r) == doctest::Approx(static_cast<double>(oracle::power_mean(c.x, c.w, r))).epsilon(1e-9));
    }
  }
}

TEST_CASE("aggregate properties over randomized cases") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> exponent(-20.0, 20.0);
  constexpr double tol = 1e-9;
  for (int i = 0; i < 10000; ++i) {
    const Case c = random_case(rng);
    const double r = exponent(rng);
    const double v = agg(c, r);
    const auto [lo, hi] = std::minmax_element(c.x.begin(), c.x.end());

    // internality
    REQUIRE(v >= *lo - tol);
    REQUIRE(v <= *hi + tol);

    // idempotency
    Case same = c;
    std::fill(same.x.begin(), same.x.end(), c.x.front());
    REQUIRE(std::abs(agg(same, r) - c.x.front()) <= tol);

    // monotonicity in each input
    Case up = c;
    const std::size_t j = rng() % c.x.size();
    up.x[j] = c.x[j] + (1.0 - c.x[j]) * unit(rng);
    REQUIRE(agg(up, r) >= v - tol);

    // symmetry under joint permutation of values and weights
    Case perm = c;
    std::vector<std::size_t> idx(c.x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      perm.x[k] = c.x[idx[k]];
      perm.w[k] = c.w[idx[k]];
    }
    REQUIRE(std::abs(agg(perm, r) - v) <= tol);

    // mean ordering in r
    const double r2 = r + 5.0 * unit(rng);
    REQUIRE(agg(c, r2) >= v - tol);

    // annihilator
    if (r <= 0.0) {
      Case zeroed = c;
      zeroed.x[j] = 0.0;
      REQUIRE(agg(zeroed, r) == 0.0);
    }
  }
}

TEST_CASE("r = 1 is the weighted sum") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Case c = random_case(rng);
    const double sum = std::inner_product(c.x.begin(), c.x.end(), c.w.begin(), 0.0);
    CHECK(agg(c, 1.0) == doctest::Approx(sum).epsilon(1e-12));
  }
}

TEST_CASE("operator table: published values") {
  const double weak_minus[] = {0.619, 0.573, 0.546, 0.526};
  const double weak_plus[] = {-0.148, -0.208, -0.235, -0.251};
  for (int k = 2; k <= 5; ++k) {
    CHECK(operator_exponent(GcdSymbol::CMinusMinus, k) == weak_minus[k - 2]);
    CHECK(operator_exponent(GcdSymbol::CMinusPlus, k) == weak_plus[k - 2]);
  }
  for (int k = 2; k <= 8; ++k) CHECK(operator_exponent(GcdSymbol::A, k) == 1.0);
  CHECK(operator_exponent("C--", 5) == 0.526);
  CHECK(operator_exponent("A", 3) == 1.0);
  CHECK(operator_exponent("C", 4) == -kInf);
  CHECK(operator_exponent("D", 4) == kInf);
}

TEST_CASE("operator table: lookup errors") {
  CHECK_THROWS_AS((void)operator_exponent("C---", 3), LookupError);
  CHECK_THROWS_AS((void)operator_exponent(GcdSymbol::A, 1), LookupError);
  CHECK_THROWS_AS((void)operator_exponent(GcdSymbol::A, 9), LookupError);
}

TEST_CASE("operator table: orness and exponent ordering") {
  CHECK(orness(GcdSymbol::A) == 0.5);
  CHECK(orness(GcdSymbol::C) == 0.0);
  CHECK(orness(GcdSymbol::D) == 1.0);
  CHECK(orness(GcdSymbol::CMinusMinus) == 0.4375);
  CHECK(orness(GcdSymbol::CMinusPlus) == 0.3125);
  for (int k = kMinArity; k <= kMaxArity; ++k) {
    for (int l = 1; l < kGcdLevelCount; ++l) {
      const auto lo = static_cast<GcdSymbol>(l - 1);
      const auto hi = static_cast<GcdSymbol>(l);
      CHECK(orness(hi) - orness(lo) == 1.0 / 16.0);
      CHECK(operator_exponent(lo, k) < operator_exponent(hi, k));
    }
  }
  for (GcdSymbol s : kAllGcdSymbols) CHECK(parse_gcd_symbol(to_string(s)) == s);
}

TEST_CASE("operator table: derived C- at arity 5 hits andness 0.625") {
  const double r = operator_exponent(GcdSymbol::CMinus, 5);
  CHECK(std::abs(estimate_andness(r, 5, 1'000'000, 99) - 0.625) <= 0.002);
}

TEST_CASE("estimate_andness: reference points") {
  CHECK(std::abs(estimate_andness(1.0, 5, 200'000, 1) - 0.5) <= 0.01);
  // the min/max expectations are analytic, so the limits carry sampling noise too
  CHECK(std::abs(estimate_andness(-kInf, 3, 200'000, 1) - 1.0) <= 0.005);
  CHECK(std::abs(estimate_andness(kInf, 3, 200'000, 1)) <= 0.005);
  CHECK(std::abs(estimate_andness(0.619, 2, 200'000, 1) - 0.5625) <= 0.01);
  CHECK(std::abs(estimate_andness(-0.148, 2, 200'000, 1) - 0.6875) <= 0.01);
}

TEST_CASE("estimate_andness: deterministic and equal to the serial reference") {
  const double a = estimate_andness(0.3, 4, 150'001, 7);
  CHECK(a == estimate_andness(0.3, 4, 150'001, 7));
  CHECK(a == reference::estimate_andness(0.3, 4, 150'001, 7));
  CHECK(a != estimate_andness(0.3, 4, 150'001, 8));
}

TEST_CASE("estimate_andness: preconditions") {
  CHECK_THROWS_AS((void)estimate_andness(1.0, 3, 99'999, 1), ContractViolation);
  CHECK_THROWS_AS((void)estimate_andness(1.0, 1, 200'000, 1), ContractViolation);
}
