#include "quotdt/series.hpp"

#include <algorithm>
#include <sstream>

#include "quotdt/error.hpp"

namespace quotdt {

Series::Series(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1, Rational(0)) {
  if (order < 0) throw Error(ErrorKind::kInvalidArgument, "negative truncation order");
  coeffs_[0] = 1;
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::kInvalidArgument, "series needs a constant term");
  for (auto& c : coeffs_) c.canonicalize();
}

Series Series::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.emplace_back(c);
  return Series(std::move(out));
}

Series Series::truncated(int order) const {
  if (order < 0) throw Error(ErrorKind::kInvalidArgument, "negative truncation order");
  std::vector<Rational> out(coeffs_.begin(),
                            coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), order + 1));
  return Series(std::move(out));
}

Series Series::scaled_variable(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  Rational power = 1;
  for (auto& x : out) {
    x *= power;
    power *= c;
  }
  return Series(std::move(out));
}

Series operator+(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[i] = a[i] + b[i];
  return Series(std::move(out));
}

Series operator-(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[i] = a[i] - b[i];
  return Series(std::move(out));
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return Series(std::move(out));
}

bool Series::all_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

std::string Series::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << quotdt::to_string(coeffs_[i]);
  return os.str();
}

Series macmahon(int order) {
  if (order < 0) throw Error(ErrorKind::kInvalidArgument, "negative truncation order");
  // Multiply in (1 - q^k)^{-1} once for each of the k copies of factor k.
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    for (int copy = 0; copy < k; ++copy) {
      for (int i = k; i <= order; ++i) c[i] += c[i - k];
    }
  }
  return Series(std::move(c));
}

Series series_inverse(const Series& s) {
  if (s[0] != 1) throw Error(ErrorKind::kNonUnitConstant, "series inverse needs c0 = 1");
  const int n = s.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
  b[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += s[i] * b[k - i];
    b[k] = -acc;
  }
  return Series(std::move(b));
}

Series series_pow(const Series& s, long e) {
  if (s[0] != 1) throw Error(ErrorKind::kNonUnitConstant, "series power needs c0 = 1");
  // Miller's recurrence: n b_n = sum_{k=1}^n ((e+1)k - n) a_k b_{n-k}.
  const int n = s.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
  b[0] = 1;
  const Integer ep1 = Integer(e) + 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 1; k <= m; ++k) {
      if (s[k] == 0) continue;
      acc += Rational(ep1 * k - m) * s[k] * b[m - k];
    }
    b[m] = acc / m;
  }
  return Series(std::move(b));
}

Series dt_closed_formula(int r, long c3, int order) {
  if (r < 0) throw Error(ErrorKind::kInvalidArgument, "negative rank");
  Series m = macmahon(order).scaled_variable(r % 2 == 0 ? 1 : -1);
  return series_pow(m, static_cast<long>(r) * c3);
}

}  // namespace quotdt
