#include "quotdt/charalg.hpp"

#include <sstream>

#include "quotdt/error.hpp"

namespace quotdt {

Exponent exponent_add(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponent exponent_neg(const Exponent& a) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

LaurentPoly LaurentPoly::constant(int rank, const Integer& c) {
  LaurentPoly p(rank);
  p.add_term(Exponent(static_cast<std::size_t>(3 + rank), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Integer& c) {
  if (e.size() < 3) {
    throw Error(ErrorKind::kInvalidArgument, "exponent vector shorter than 3");
  }
  LaurentPoly p(static_cast<int>(e.size()) - 3);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::torus_monomial(int rank, std::span<const std::int32_t> a,
                                        const Integer& c) {
  Exponent e(static_cast<std::size_t>(3 + rank), 0);
  for (std::size_t i = 0; i < 3; ++i) e[i] = a[i];
  LaurentPoly p(rank);
  p.add_term(e, c);
  return p;
}

Integer LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::constant_term() const { return coefficient(Exponent(width(), 0)); }

Integer LaurentPoly::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != width()) {
    throw Error(ErrorKind::kRankMismatch, "exponent length does not match rank");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_rank(const LaurentPoly& b, const char* op) const {
  if (rank_ != b.rank_) {
    std::ostringstream os;
    os << op << ": rank " << rank_ << " vs " << b.rank_;
    throw Error(ErrorKind::kRankMismatch, os.str());
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  check_rank(b, "add");
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  check_rank(b, "sub");
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) {
  *this = *this * b;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b, "mul");
  LaurentPoly out(a.rank_);
  Exponent e(a.width());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out(a.rank_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  if (e.size() != width()) {
    throw Error(ErrorKind::kRankMismatch, "shift exponent length does not match rank");
  }
  LaurentPoly out(rank_);
  for (const auto& [ea, c] : terms_) out.terms_.emplace(exponent_add(ea, e), c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Integer mag = abs(c);
    bool unit = true;
    for (auto x : e) unit = unit && x == 0;
    if (mag != 1 || unit) os << mag;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (i < 3 ? "t" : "u") << (i < 3 ? i + 1 : i - 2);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly poly_dual(const LaurentPoly& a) {
  LaurentPoly out(a.rank());
  for (const auto& [e, c] : a.terms()) out.add_term(exponent_neg(e), c);
  return out;
}

std::string EquivParams::to_string() const {
  std::ostringstream os;
  os << "s=(";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ") v=(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

Integer weight_value(std::span<const std::int32_t> exponent, const EquivParams& params) {
  if (exponent.size() != 3 + params.v.size() || params.s.size() != 3) {
    throw Error(ErrorKind::kRankMismatch, "exponent length does not match parameters");
  }
  Integer w = 0;
  for (std::size_t i = 0; i < 3; ++i) w += exponent[i] * params.s[i];
  for (std::size_t j = 0; j < params.v.size(); ++j) w += exponent[3 + j] * params.v[j];
  return w;
}

Rational weight_form(std::span<const std::int32_t> exponent, const EquivParams& params) {
  return Rational(weight_value(exponent, params));
}

}  // namespace quotdt
