#pragma once

#include <string>
#include <vector>

#include "quotdt/arith.hpp"

namespace quotdt {

/// Truncated power series c_0 + c_1 q + ... + c_N q^N over Q. The truncation
/// order travels with the value; binary operations truncate to the smaller one.
class Series {
 public:
  /// The constant series 1 at order n.
  explicit Series(int order = 0);
  explicit Series(std::vector<Rational> coeffs);

  static Series from_integers(const std::vector<long>& coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  Series truncated(int order) const;
  /// q -> c q.
  Series scaled_variable(const Rational& c) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) = default;

  bool all_integral() const;
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// prod_{n>=1} (1 - q^n)^{-n} through q^order.
Series macmahon(int order);

/// S^e for any integer e; requires c_0 = 1.
Series series_pow(const Series& s, long e);

/// 1/S; requires c_0 = 1.
Series series_inverse(const Series& s);

/// M((-1)^r q)^{r * c3} through q^order.
Series dt_closed_formula(int r, long c3, int order);

}  // namespace quotdt
