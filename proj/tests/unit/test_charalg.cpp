#include <random>

#include "doctest.h"
#include "quotdt/charalg.hpp"
#include "quotdt/error.hpp"

using namespace quotdt;

namespace {

LaurentPoly x(int i, int rank = 0) {
  Exponent e(static_cast<std::size_t>(3 + rank), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return LaurentPoly::monomial(e);
}

LaurentPoly one(int rank = 0) { return LaurentPoly::constant(rank, 1); }

LaurentPoly p_of_t() { return (one() - x(0)) * (one() - x(1)) * (one() - x(2)); }

LaurentPoly random_poly(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> nterms(0, 6), ex(-3, 3), co(-5, 5);
  LaurentPoly p(rank);
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Exponent e(static_cast<std::size_t>(3 + rank));
    for (auto& v : e) v = ex(rng);
    p.add_term(e, co(rng));
  }
  return p;
}

// Dense convolution over a box [lo, hi]^3; independent of the sparse product.
std::map<Exponent, long> dense_product(const LaurentPoly& a, const LaurentPoly& b) {
  constexpr int lo = -4, hi = 4, w = hi - lo + 1;
  std::vector<long> da(w * w * w, 0), db(w * w * w, 0);
  auto idx = [&](const Exponent& e) { return ((e[0] - lo) * w + (e[1] - lo)) * w + (e[2] - lo); };
  for (const auto& [e, c] : a.terms()) da[idx(e)] = c.get_si();
  for (const auto& [e, c] : b.terms()) db[idx(e)] = c.get_si();
  std::map<Exponent, long> out;
  for (int i = 0; i < w * w * w; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < w * w * w; ++j) {
      if (db[j] == 0) continue;
      Exponent e{i / (w * w) + j / (w * w) + 2 * lo, (i / w) % w + (j / w) % w + 2 * lo,
                 i % w + j % w + 2 * lo};
      out[e] += da[i] * db[j];
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("poly_mul examples") {
  CHECK((one() + x(0)) * (one() - x(0)) == one() - x(0) * x(0));
  const LaurentPoly p = p_of_t();
  CHECK(p * one() == p);

  const LaurentPoly sq = p * p;
  CHECK(sq.size() == 27);
  const auto oracle = dense_product(p, p);
  REQUIRE(oracle.size() == sq.size());
  for (const auto& [e, c] : oracle) CHECK(sq.coefficient(e) == c);
}

TEST_CASE("poly_mul rejects rank mismatch") {
  CHECK_THROWS_AS(one(0) * one(1), Error);
  try {
    (void)(one(0) + one(2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kRankMismatch);
  }
}

TEST_CASE("poly_dual examples") {
  CHECK(poly_dual(x(0)) == LaurentPoly::monomial(Exponent{-1, 0, 0}));
  const LaurentPoly p = p_of_t();
  CHECK(poly_dual(poly_dual(p)) == p);
  const LaurentPoly kappa = x(0) * x(1) * x(2);
  CHECK((poly_dual(p) * kappa + p).is_zero());
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p = one() + x(0);
  p -= x(0);
  CHECK(p.size() == 1);
  p.add_term(Exponent{0, 0, 0}, -1);
  CHECK(p.is_zero());
}

TEST_CASE("ring axioms and dual homomorphism on random polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = trial % 3;
    const LaurentPoly a = random_poly(rng, r), b = random_poly(rng, r), c = random_poly(rng, r);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(poly_dual(a * b) == poly_dual(a) * poly_dual(b));
    CHECK(poly_dual(a + b) == poly_dual(a) + poly_dual(b));
    CHECK((a * b).sum_of_coefficients() == a.sum_of_coefficients() * b.sum_of_coefficients());
    CHECK((a + b).sum_of_coefficients() == a.sum_of_coefficients() + b.sum_of_coefficients());
  }
}

TEST_CASE("weight_form examples") {
  const EquivParams p0{{7, 11, 13}, {}};
  CHECK(weight_form(Exponent{1, 0, 0}, p0) == 7);
  const EquivParams p1{{1, 2, 3}, {}};
  CHECK(weight_form(Exponent{-1, -1, 0}, p1) == -3);
  const EquivParams p2{{1, 2, 3}, {5}};
  CHECK(weight_form(Exponent{1, 1, 1, 1}, p2) == 11);
  CHECK_THROWS_AS(weight_form(Exponent{1, 1, 1}, p2), Error);
}

TEST_CASE("weight_form is linear in the exponent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int trial = 0; trial < 40; ++trial) {
    const EquivParams p{{d(rng), d(rng), d(rng)}, {d(rng), d(rng)}};
    Exponent a(5), b(5);
    for (auto& v : a) v = d(rng);
    for (auto& v : b) v = d(rng);
    const int k = d(rng);
    Exponent ka(5);
    for (std::size_t i = 0; i < 5; ++i) ka[i] = k * a[i];
    CHECK(weight_form(exponent_add(a, b), p) == weight_form(a, p) + weight_form(b, p));
    CHECK(weight_form(ka, p) == k * weight_form(a, p));
  }
}

TEST_CASE("printing is canonical") {
  CHECK(LaurentPoly(0).to_string() == "0");
  CHECK((one() - x(0) * x(0)).to_string() == "1 - t1^2");
}
