#include "quotdt/chern.hpp"

#include <numeric>
#include <sstream>

#include "quotdt/error.hpp"

namespace quotdt {

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

ClassPoly ClassPoly::constant(std::size_t generators, const Rational& c) {
  ClassPoly p(generators);
  p.add_term(Monomial(generators, 0), c);
  return p;
}

ClassPoly ClassPoly::generator(std::size_t generators, std::size_t index) {
  ClassPoly p(generators);
  Monomial m(generators, 0);
  m.at(index) = 1;
  p.add_term(m, 1);
  return p;
}

void ClassPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != generators_) {
    throw Error(ErrorKind::kInvalidArgument, "monomial length does not match ring");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ClassPoly ClassPoly::degree_part(int degree) const {
  ClassPoly out(generators_);
  for (const auto& [m, c] : terms_) {
    if (monomial_degree(m) == degree) out.terms_.emplace(m, c);
  }
  return out;
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

ClassPoly operator*(const Rational& c, const ClassPoly& a) {
  ClassPoly out(a.generators_);
  for (const auto& [m, x] : a.terms_) out.add_term(m, c * x);
  return out;
}

std::string ClassPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    const bool unit = monomial_degree(m) == 0;
    if (mag != 1 || unit) os << quotdt::to_string(mag);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << names.at(i);
      if (m[i] != 1) os << "^" << m[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

ClassPoly ChernRing::reduce(const ClassPoly& a) const {
  ClassPoly out(generator_count());
  std::vector<std::pair<Monomial, Rational>> work(a.terms().begin(), a.terms().end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    if (monomial_degree(m) > dimension) continue;
    bool vanishes = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (truncation[i] > 0 && m[i] >= truncation[i]) vanishes = true;
    }
    if (vanishes) continue;
    if (quadratic && m[quadratic->generator] >= 2) {
      Monomial rest = m;
      rest[quadratic->generator] -= 2;
      for (const auto& [rm, rc] : quadratic->replacement.terms()) {
        Monomial next = rest;
        for (std::size_t i = 0; i < next.size(); ++i) next[i] += rm[i];
        work.emplace_back(std::move(next), c * rc);
      }
      continue;
    }
    out.add_term(m, c);
  }
  return out;
}

ClassPoly ChernRing::mul(const ClassPoly& a, const ClassPoly& b) const {
  ClassPoly prod(generator_count());
  Monomial m(generator_count());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      if (monomial_degree(m) > dimension) continue;
      prod.add_term(m, ca * cb);
    }
  }
  return reduce(prod);
}

ClassPoly ChernRing::pow(const ClassPoly& a, int e) const {
  ClassPoly out = one();
  for (int i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

Rational ChernRing::integrate(const ClassPoly& a) const {
  Rational total = 0;
  const ClassPoly reduced = reduce(a);
  for (const auto& [m, c] : reduced.terms()) {
    if (monomial_degree(m) != dimension) continue;
    auto it = integrals.find(m);
    if (it != integrals.end()) total += c * Rational(it->second);
  }
  return total;
}

ClassPoly ChernRing::total_tangent() const {
  ClassPoly t = zero();
  for (const auto& c : tangent) t += c;
  return t;
}

std::array<ClassPoly, 4> ChernRing::graded(const ClassPoly& total) const {
  std::array<ClassPoly, 4> out;
  const ClassPoly r = reduce(total);
  for (int k = 0; k < 4; ++k) out[k] = k <= dimension ? r.degree_part(k) : zero();
  return out;
}

BundleClass split_bundle_class(const ChernRing& ring, int rank,
                               const std::vector<ClassPoly>& line_classes) {
  if (static_cast<int>(line_classes.size()) > rank) {
    throw Error(ErrorKind::kInvalidArgument, "more line summands than the rank");
  }
  ClassPoly total = ring.one();
  for (const auto& l : line_classes) total = ring.mul(total, ring.one() + l);
  BundleClass b;
  b.rank = rank;
  b.chern = ring.graded(total);
  for (int k = rank + 1; k < 4; ++k) b.chern[k] = ring.zero();
  return b;
}

BundleClass trivial_bundle_class(const ChernRing& ring, int rank) {
  return split_bundle_class(ring, rank, {});
}

BundleClass twist_by_line(const ChernRing& ring, const BundleClass& e, const ClassPoly& line) {
  auto binom = [](int n, int k) -> long {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
  };
  BundleClass out;
  out.rank = e.rank;
  for (int k = 0; k < 4; ++k) {
    ClassPoly ck = ring.zero();
    for (int i = 0; i <= std::min(k, e.rank); ++i) {
      const long coeff = binom(e.rank - i, k - i);
      if (coeff == 0) continue;
      ck += Rational(coeff) * ring.mul(e.chern[i], ring.pow(line, k - i));
    }
    out.chern[k] = k <= e.rank ? ring.reduce(ck) : ring.zero();
  }
  return out;
}

ChernRing projective_product_ring(const Partition& lambda) {
  if (lambda.empty()) throw Error(ErrorKind::kInvalidArgument, "empty partition");
  ChernRing ring;
  ring.dimension = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (ring.dimension > 3) throw Error(ErrorKind::kInvalidArgument, "dimension above 3");
  std::ostringstream name;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1) throw Error(ErrorKind::kInvalidArgument, "partition parts must be positive");
    name << (i ? "x" : "") << "P" << lambda[i];
    ring.generator_names.push_back(lambda.size() == 1 ? "H" : "h" + std::to_string(i + 1));
    ring.truncation.push_back(lambda[i] + 1);
  }
  ring.name = name.str();
  ring.integrals[Monomial(lambda.begin(), lambda.end())] = 1;
  ClassPoly total = ring.one();
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    total = ring.mul(total, ring.pow(ring.one() + ring.gen(i), lambda[i] + 1));
  }
  ring.tangent = ring.graded(total);
  return ring;
}

ChernRing ring_of_projective_product(const Partition& lambda) {
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != 3) {
    throw Error(ErrorKind::kInvalidArgument, "partition must have size 3");
  }
  return projective_product_ring(lambda);
}

ChernRing projective_bundle_ring(const ChernRing& base, const ClassPoly& line,
                                 ProjectiveBundleConvention convention) {
  if (base.dimension != 2) {
    throw Error(ErrorKind::kInvalidArgument, "projective bundle base must be a surface");
  }
  if (base.quadratic) throw Error(ErrorKind::kInvalidArgument, "base already has a bundle relation");
  const std::size_t g = base.generator_count();
  auto lift = [&](const ClassPoly& p) {
    ClassPoly out(g + 1);
    for (const auto& [m, c] : p.terms()) {
      Monomial lm = m;
      lm.push_back(0);
      out.add_term(lm, c);
    }
    return out;
  };

  ChernRing ring;
  ring.name = "P(O+L)/" + base.name;
  ring.dimension = 3;
  ring.generator_names = base.generator_names;
  ring.generator_names.push_back("xi");
  ring.truncation = base.truncation;
  ring.truncation.push_back(0);

  const ClassPoly l = lift(base.reduce(line).degree_part(1));
  const ClassPoly xi = ClassPoly::generator(g + 1, g);
  QuadraticRelation rel;
  rel.generator = g;
  // replacement = -/+ l * xi, built without reduction (degree 2, xi-degree 1).
  const Rational sign = convention == ProjectiveBundleConvention::kMinusC1 ? -1 : 1;
  rel.replacement = ClassPoly(g + 1);
  for (const auto& [m, c] : l.terms()) {
    Monomial mx = m;
    mx[g] += 1;
    rel.replacement.add_term(mx, sign * c);
  }
  ring.quadratic = rel;

  // Integral of xi * beta equals the base integral of beta.
  for (const auto& [m, v] : base.integrals) {
    Monomial mx = m;
    mx.push_back(1);
    ring.integrals[mx] = v;
  }

  const ClassPoly rel_tangent = ring.mul(ring.one() + xi, ring.one() + xi + l);
  ring.tangent = ring.graded(ring.mul(lift(base.total_tangent()), rel_tangent));
  return ring;
}

ChernRing quadric_threefold_ring() {
  ChernRing ring;
  ring.name = "Q3";
  ring.dimension = 3;
  ring.generator_names = {"H"};
  ring.truncation = {4};
  ring.integrals[{3}] = 2;
  // (1 + H)^5 times the truncated inverse of (1 + 2H).
  const ClassPoly h = ring.gen(0);
  ClassPoly inv = ring.one();
  ClassPoly term = ring.one();
  for (int k = 1; k <= 3; ++k) {
    term = ring.mul(term, Rational(-2) * h);
    inv += term;
  }
  ring.tangent = ring.graded(ring.mul(ring.pow(ring.one() + h, 5), inv));
  return ring;
}

ChernRing blowup_p3_conic_ring() {
  // H^3 = 1, H^2 E = 0, H E^2 = -deg C = -2, E^3 = -deg N_C = -6.
  // c1 = 4H - E, c2 = 8H^2 - 4HE, c3 = chi = 6.
  ChernRing ring;
  ring.name = "Bl_conic(P3)";
  ring.dimension = 3;
  ring.generator_names = {"H", "E"};
  ring.truncation = {0, 0};
  ring.integrals[{3, 0}] = 1;
  ring.integrals[{2, 1}] = 0;
  ring.integrals[{1, 2}] = -2;
  ring.integrals[{0, 3}] = -6;
  const ClassPoly h = ring.gen(0);
  const ClassPoly e = ring.gen(1);
  ring.tangent[0] = ring.one();
  ring.tangent[1] = Rational(4) * h - e;
  ring.tangent[2] = Rational(8) * ring.mul(h, h) - Rational(4) * ring.mul(h, e);
  ring.tangent[3] = Rational(6) * ring.pow(h, 3);
  return ring;
}

ChernRing named_ring(const std::string& name) {
  if (name == "p3") return ring_of_projective_product({3});
  if (name == "p2xp1") return ring_of_projective_product({2, 1});
  if (name == "p1cubed") return ring_of_projective_product({1, 1, 1});
  if (name == "blp3") {
    const ChernRing p2 = projective_product_ring({2});
    return projective_bundle_ring(p2, p2.gen(0));
  }
  if (name == "quadric") return quadric_threefold_ring();
  if (name == "blp3conic") return blowup_p3_conic_ring();
  throw Error(ErrorKind::kInvalidArgument, "unknown ring '" + name + "'");
}

std::vector<ClassPoly> picard_generators(const ChernRing& ring, const std::string& name) {
  if (name == "p3" || name == "quadric") return {ring.gen(0)};
  if (name == "p2xp1") return {ring.gen(0), ring.gen(1)};
  if (name == "p1cubed") return {ring.gen(0), ring.gen(1), ring.gen(2)};
  // Toric basis D_{r0} = H and D_{f0} = xi + H on P(O + O(1)) over P^2.
  if (name == "blp3") return {ring.gen(0), ring.gen(1) + ring.gen(0)};
  if (name == "blp3conic") return {ring.gen(0), ring.gen(1)};
  throw Error(ErrorKind::kInvalidArgument, "no Picard basis for '" + name + "'");
}

Integer c3_t_omega(const ChernRing& ring) {
  if (ring.dimension != 3) throw Error(ErrorKind::kInvalidArgument, "c3_t_omega needs a 3-fold");
  const Rational v =
      ring.integrate(ring.tangent[3] - ring.mul(ring.tangent[1], ring.tangent[2]));
  if (!is_integer(v)) throw Error(ErrorKind::kNonIntegral, "c3(T (x) K) = " + to_string(v));
  return v.get_num();
}

namespace {

// Exponents of (c1, c2, c3, f1, f2, f3) for each mixed Chern number.
struct MixedIndex {
  const char* label;
  std::array<int, 6> exps;
  int max_f;  // highest f_k used
};

constexpr std::array<MixedIndex, 10> kMixedIndex{{
    {"c3", {0, 0, 1, 0, 0, 0}, 0},
    {"c1*c2", {1, 1, 0, 0, 0, 0}, 0},
    {"c1^3", {3, 0, 0, 0, 0, 0}, 0},
    {"c2*f1", {0, 1, 0, 1, 0, 0}, 1},
    {"c1^2*f1", {2, 0, 0, 1, 0, 0}, 1},
    {"c1*f1^2", {1, 0, 0, 2, 0, 0}, 1},
    {"f1^3", {0, 0, 0, 3, 0, 0}, 1},
    {"c1*f2", {1, 0, 0, 0, 1, 0}, 2},
    {"f1*f2", {0, 0, 0, 1, 1, 0}, 2},
    {"f3", {0, 0, 0, 0, 0, 1}, 3},
}};

}  // namespace

std::vector<std::string> mixed_chern_labels(int r) {
  std::vector<std::string> out;
  for (const auto& idx : kMixedIndex) {
    if (idx.max_f <= std::min(r, 3)) out.emplace_back(idx.label);
  }
  return out;
}

std::vector<Rational> mixed_chern_vector(const ChernRing& ring, const BundleClass& f) {
  if (ring.dimension != 3) throw Error(ErrorKind::kInvalidArgument, "mixed vector needs a 3-fold");
  const std::array<const ClassPoly*, 6> classes{&ring.tangent[1], &ring.tangent[2],
                                                &ring.tangent[3], &f.chern[1],
                                                &f.chern[2],      &f.chern[3]};
  std::vector<Rational> out;
  for (const auto& idx : kMixedIndex) {
    if (idx.max_f > std::min(f.rank, 3)) continue;
    ClassPoly prod = ring.one();
    for (std::size_t k = 0; k < 6; ++k) prod = ring.mul(prod, ring.pow(*classes[k], idx.exps[k]));
    out.push_back(ring.integrate(prod));
  }
  return out;
}

PairClass phi_class(const PartitionPair& pair, int r) {
  if (std::accumulate(pair.lambda.begin(), pair.lambda.end(), 0) != 3) {
    throw Error(ErrorKind::kInvalidArgument, "phi classes are defined for |lambda| = 3");
  }
  if (static_cast<int>(pair.mu.size()) > r) {
    throw Error(ErrorKind::kInvalidArgument, "sub-partition longer than the rank");
  }
  ChernRing ring = ring_of_projective_product(pair.lambda);
  // Each part of mu is matched with its own factor of P^lambda.
  std::vector<bool> used(pair.lambda.size(), false);
  std::vector<ClassPoly> lines;
  for (int m : pair.mu) {
    std::size_t i = 0;
    while (i < pair.lambda.size() && (used[i] || pair.lambda[i] != m)) ++i;
    if (i == pair.lambda.size()) {
      throw Error(ErrorKind::kInvalidArgument, "mu is not a sub-partition of lambda");
    }
    used[i] = true;
    lines.push_back(ring.gen(i));
  }
  BundleClass bundle = split_bundle_class(ring, r, lines);
  return PairClass{std::move(ring), std::move(bundle)};
}

std::vector<std::vector<Rational>> cobordism_basis_matrix(int r) {
  const auto pairs = enum_partition_pairs(3, r);
  const std::size_t n = pairs.size();
  std::vector<std::vector<Rational>> a(mixed_chern_labels(r).size(), std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const PairClass phi = phi_class(pairs[j], r);
    const auto v = mixed_chern_vector(phi.ring, phi.bundle);
    for (std::size_t i = 0; i < v.size(); ++i) a[i][j] = v[i];
  }
  return a;
}

namespace {

// Row-reduces a in place, applying the same operations to rhs when given.
// Returns the determinant (zero when singular).
Rational eliminate(std::vector<std::vector<Rational>>& a, std::vector<Rational>* rhs) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      if (rhs) std::swap((*rhs)[pivot], (*rhs)[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      if (rhs) (*rhs)[row] -= factor * (*rhs)[col];
    }
  }
  return det;
}

void check_square(const std::vector<std::vector<Rational>>& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw Error(ErrorKind::kInvalidArgument, "matrix is not square");
  }
}

}  // namespace

Rational determinant_exact(std::vector<std::vector<Rational>> a) {
  check_square(a);
  return eliminate(a, nullptr);
}

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  check_square(a);
  if (b.size() != a.size()) throw Error(ErrorKind::kInvalidArgument, "right-hand side length");
  if (eliminate(a, &b) == 0) {
    throw Error(ErrorKind::kSingularBasisMatrix, "basis matrix is singular over Q");
  }
  for (std::size_t i = 0; i < b.size(); ++i) b[i] /= a[i][i];
  return b;
}

std::vector<std::pair<PartitionPair, Rational>> decompose(const ChernRing& ring,
                                                          const BundleClass& f, int r) {
  if (f.rank != r) throw Error(ErrorKind::kRankMismatch, "bundle rank differs from r");
  const auto pairs = enum_partition_pairs(3, r);
  const auto x = solve_exact(cobordism_basis_matrix(r), mixed_chern_vector(ring, f));
  std::vector<std::pair<PartitionPair, Rational>> out;
  for (std::size_t j = 0; j < pairs.size(); ++j) out.emplace_back(pairs[j], x[j]);
  return out;
}

std::vector<Rational> reconstruct(const std::vector<std::pair<PartitionPair, Rational>>& coords,
                                  int r) {
  std::vector<Rational> out(mixed_chern_labels(r).size(), Rational(0));
  for (const auto& [pair, x] : coords) {
    if (x == 0) continue;
    const PairClass phi = phi_class(pair, r);
    const auto v = mixed_chern_vector(phi.ring, phi.bundle);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += x * v[i];
  }
  return out;
}

DprReport dpr_check(const PairClass& y_xi, const PairClass& a, const PairClass& b,
                    const PairClass& p_pi) {
  const std::array<const PairClass*, 4> members{&y_xi, &a, &b, &p_pi};
  for (const auto* m : members) {
    if (m->ring.dimension != 3) {
      throw Error(ErrorKind::kInvalidArgument, m->ring.name + " is not a 3-fold");
    }
    if (m->bundle.rank != y_xi.bundle.rank) {
      throw Error(ErrorKind::kRankMismatch, "bundles in a double point relation must share rank");
    }
  }
  DprReport report;
  report.labels = mixed_chern_labels(y_xi.bundle.rank);
  for (std::size_t i = 0; i < 4; ++i) {
    report.vectors[i] = mixed_chern_vector(members[i]->ring, members[i]->bundle);
    report.c3_values[i] = c3_t_omega(members[i]->ring);
  }
  report.chern_numbers_ok = true;
  for (std::size_t k = 0; k < report.labels.size(); ++k) {
    const Rational lhs = report.vectors[0][k];
    const Rational rhs = report.vectors[1][k] + report.vectors[2][k] - report.vectors[3][k];
    if (lhs != rhs) report.chern_numbers_ok = false;
  }
  report.c3_ok = report.c3_values[0] + report.c3_values[3] ==
                 report.c3_values[1] + report.c3_values[2];
  return report;
}

const std::vector<std::string>& builtin_relation_names() {
  static const std::vector<std::string> names{"quadric-dpr", "quadric-dpr-twisted",
                                              "quadric-dpr-naive", "normal-cone-p2-in-p3"};
  return names;
}

DoublePointRelation builtin_relation(const std::string& name, int rank) {
  if (rank < 1) throw Error(ErrorKind::kInvalidArgument, "rank must be positive");
  const ChernRing p2 = projective_product_ring({2});
  auto trivial = [rank](ChernRing ring) {
    BundleClass b = trivial_bundle_class(ring, rank);
    return PairClass{std::move(ring), std::move(b)};
  };
  DoublePointRelation rel;
  rel.name = name;
  if (name == "quadric-dpr" || name == "quadric-dpr-twisted") {
    // x0 x1 = t q degenerates Q3 into two P^3's meeting along P^2; making the
    // total space smooth blows one component up along the conic {q = 0}. Then
    // D = P^2, N_{D/A} = O(-1), N_{D/B} = O(1).
    rel.description =
        "Q3 -> Bl_conic(P3) + P3 along P2; P(pi) = P(O + O(-1)) over P2";
    std::array<PairClass, 4> m{
        trivial(quadric_threefold_ring()), trivial(blowup_p3_conic_ring()),
        trivial(ring_of_projective_product({3})),
        trivial(projective_bundle_ring(p2, Rational(-1) * p2.gen(0)))};
    if (name == "quadric-dpr-twisted") {
      // E = O(H) + O^{r-1} restricted from the hyperplane class of P^4.
      for (auto& member : m) {
        member.bundle = split_bundle_class(member.ring, rank, {member.ring.gen(0)});
      }
      rel.description += "; E = O(H) + O^(r-1)";
    }
    rel.members = std::move(m);
  } else if (name == "quadric-dpr-naive") {
    rel.description = "Q3 -> P3 + P3 along P2 without resolving the total space";
    rel.members = {trivial(quadric_threefold_ring()), trivial(ring_of_projective_product({3})),
                   trivial(ring_of_projective_product({3})),
                   trivial(projective_bundle_ring(p2, p2.gen(0)))};
  } else if (name == "normal-cone-p2-in-p3") {
    rel.description = "deformation to the normal cone of P2 in P3";
    const ChernRing bundle = projective_bundle_ring(p2, p2.gen(0));
    rel.members = {trivial(ring_of_projective_product({3})),
                   trivial(ring_of_projective_product({3})), trivial(bundle), trivial(bundle)};
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown relation '" + name + "'");
  }
  return rel;
}

}  // namespace quotdt
