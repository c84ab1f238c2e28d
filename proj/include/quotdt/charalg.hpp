#pragma once

// Laurent polynomials in t1,t2,t3,u1..ur with integer coefficients. These are
// the characters of virtual torus representations.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quotdt/arith.hpp"

namespace quotdt {

/// Exponent vector: positions 0..2 are t1..t3, positions 3..3+r-1 are u1..ur.
using Exponent = std::vector<std::int32_t>;

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly constant(int rank, const Integer& c);
  static LaurentPoly monomial(const Exponent& e, const Integer& c = 1);
  /// t^a for a torus exponent a in Z^3, padded with zero colour part.
  static LaurentPoly torus_monomial(int rank, std::span<const std::int32_t> a,
                                    const Integer& c = 1);

  int rank() const { return rank_; }
  std::size_t width() const { return static_cast<std::size_t>(3 + rank_); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponent& e) const;
  Integer constant_term() const;
  /// Value at t = u = 1.
  Integer sum_of_coefficients() const;

  /// Adds c * x^e, pruning the term if it cancels.
  void add_term(const Exponent& e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Multiplies by the monomial x^e.
  LaurentPoly shifted(const Exponent& e) const;

  std::string to_string() const;

 private:
  void check_rank(const LaurentPoly& b, const char* op) const;

  int rank_ = 0;
  TermMap terms_;
};

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Bar involution x -> x^{-1}.
LaurentPoly poly_dual(const LaurentPoly& a);

struct EquivParams {
  std::vector<Integer> s;  // three torus parameters
  std::vector<Integer> v;  // one per colour

  int rank() const { return static_cast<int>(v.size()); }
  std::string to_string() const;
};

/// Integer value of the linear form sum e_i s_i + sum e_{3+j} v_j.
Integer weight_value(std::span<const std::int32_t> exponent, const EquivParams& params);

/// Same linear form returned as an exact rational.
Rational weight_form(std::span<const std::int32_t> exponent, const EquivParams& params);

Exponent exponent_add(const Exponent& a, const Exponent& b);
Exponent exponent_neg(const Exponent& a);

}  // namespace quotdt
