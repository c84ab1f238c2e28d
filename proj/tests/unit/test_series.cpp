#include <random>

#include "doctest.h"
#include "quotdt/error.hpp"
#include "quotdt/series.hpp"

using namespace quotdt;

namespace {

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

// prod_{n>=1} (1 - sign^n q^n)^{e n} for e > 0, expanded by the binomial theorem.
std::vector<Integer> product_oracle(long e, int sign, int order) {
  std::vector<Integer> out(static_cast<std::size_t>(order) + 1, 0);
  out[0] = 1;
  for (int n = 1; n <= order; ++n) {
    const long m = e * n;
    std::vector<Integer> factor(out.size(), 0);
    for (long k = 0; k * n <= order && k <= m; ++k) {
      Integer c = binomial(m, k);
      if (k % 2 == 1) c = -c;
      if (sign < 0 && (n * k) % 2 == 1) c = -c;
      factor[static_cast<std::size_t>(k * n)] = c;
    }
    std::vector<Integer> next(out.size(), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; i + j < out.size(); ++j) next[i + j] += out[i] * factor[j];
    }
    out = next;
  }
  return out;
}

Series random_unit_series(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int i = 1; i <= order; ++i) c[i] = make_rational(d(rng), 1 + (d(rng) + 4) % 3);
  return Series(c);
}

}  // namespace

TEST_CASE("macmahon examples") {
  CHECK(macmahon(6) == Series::from_integers({1, 1, 3, 6, 13, 24, 48}));
  CHECK(macmahon(0) == Series::from_integers({1}));
}

TEST_CASE("macmahon coefficients are positive and q -> -q flips odd ones") {
  const Series m = macmahon(20);
  const Series flipped = m.scaled_variable(-1);
  for (int n = 0; n <= 20; ++n) {
    CHECK(m[n] > 0);
    CHECK(is_integer(m[n]));
    CHECK(flipped[n] == (n % 2 ? -m[n] : m[n]));
  }
}

TEST_CASE("series_inverse examples") {
  CHECK(series_inverse(Series::from_integers({1, 1, 0, 0})) == Series::from_integers({1, -1, 1, -1}));
  const Series m = macmahon(8);
  CHECK(m * series_inverse(m) == Series(8));
  CHECK_THROWS_AS(series_inverse(Series::from_integers({2, 1})), Error);
}

TEST_CASE("series_pow examples") {
  CHECK(series_pow(Series::from_integers({1, 1, 0, 0}), 3) == Series::from_integers({1, 3, 3, 1}));
  CHECK(series_pow(Series::from_integers({1, 1, 0}), -1) == Series::from_integers({1, -1, 1}));
  CHECK(series_pow(macmahon(5), 0) == Series(5));
  try {
    series_pow(Series::from_integers({3, 1}), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNonUnitConstant);
  }
}

TEST_CASE("series_pow agrees with repeated products and composes") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Series s = random_unit_series(rng, 7);
    const long a = static_cast<long>(rng() % 7) - 3;
    const long b = static_cast<long>(rng() % 7) - 3;
    Series rep(7);
    for (long k = 0; k < std::labs(a); ++k) rep = rep * s;
    if (a < 0) rep = series_inverse(rep);
    CHECK(series_pow(s, a) == rep);
    CHECK(series_pow(s, a) * series_pow(s, b) == series_pow(s, a + b));
    CHECK(series_pow(series_pow(s, a), b) == series_pow(s, a * b));
  }
}

TEST_CASE("dt_closed_formula matches the binomial product") {
  CHECK(dt_closed_formula(1, -20, 3) == Series::from_integers({1, 20, 150, 400}));
  CHECK(dt_closed_formula(2, -20, 2) == Series::from_integers({1, -40, 700}));
  CHECK(dt_closed_formula(3, 0, 5) == Series(5));
  for (int r = 1; r <= 3; ++r) {
    for (long c3 : {-20L, -18L, -16L}) {
      const auto oracle = product_oracle(-r * c3, r % 2 == 1 ? -1 : 1, 6);
      const Series s = dt_closed_formula(r, c3, 6);
      for (int n = 0; n <= 6; ++n) {
        CAPTURE(r);
        CAPTURE(n);
        CHECK(s[n] == Rational(oracle[n]));
      }
    }
  }
}

TEST_CASE("truncation follows the smaller order") {
  CHECK((macmahon(3) * macmahon(5)).order() == 3);
  CHECK((macmahon(3) + macmahon(5)).order() == 3);
  CHECK(macmahon(8).truncated(4) == macmahon(4));
  CHECK(macmahon(4).scaled_variable(-1) == Series::from_integers({1, -1, 3, -6, 13}));
}
