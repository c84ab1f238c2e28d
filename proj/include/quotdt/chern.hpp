#pragma once

// Intersection rings of smooth projective 3-folds (and their surface bases),
// Chern numbers, and the double point cobordism calculus for pairs [Y, E].

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quotdt/arith.hpp"
#include "quotdt/conventions.hpp"
#include "quotdt/partitions.hpp"

namespace quotdt {

/// Exponents of the ring generators; every generator has degree one.
using Monomial = std::vector<int>;

/// Polynomial in the generators with rational coefficients (unreduced).
class ClassPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  ClassPoly() = default;
  explicit ClassPoly(std::size_t generators) : generators_(generators) {}

  static ClassPoly constant(std::size_t generators, const Rational& c);
  static ClassPoly generator(std::size_t generators, std::size_t index);

  std::size_t generators() const { return generators_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const Rational& c);

  /// Homogeneous part of the given degree.
  ClassPoly degree_part(int degree) const;

  ClassPoly& operator+=(const ClassPoly& b);
  ClassPoly& operator-=(const ClassPoly& b);
  friend ClassPoly operator+(ClassPoly a, const ClassPoly& b) { return a += b; }
  friend ClassPoly operator-(ClassPoly a, const ClassPoly& b) { return a -= b; }
  friend ClassPoly operator*(const Rational& c, const ClassPoly& a);
  friend bool operator==(const ClassPoly&, const ClassPoly&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t generators_ = 0;
  TermMap terms_;
};

int monomial_degree(const Monomial& m);

/// g^2 = replacement, where the replacement has g-degree at most one.
struct QuadraticRelation {
  std::size_t generator = 0;
  ClassPoly replacement;
};

class ChernRing {
 public:
  std::string name;
  int dimension = 3;
  std::vector<std::string> generator_names;
  /// g_i^{truncation[i]} = 0; zero means no truncation relation.
  std::vector<int> truncation;
  std::optional<QuadraticRelation> quadratic;
  /// Integrals of reduced monomials of top degree; absent monomials integrate to 0.
  std::map<Monomial, Integer> integrals;
  /// c_0(T) .. c_3(T); entries above the dimension are zero.
  std::array<ClassPoly, 4> tangent;

  std::size_t generator_count() const { return generator_names.size(); }
  ClassPoly one() const { return ClassPoly::constant(generator_count(), 1); }
  ClassPoly gen(std::size_t i) const { return ClassPoly::generator(generator_count(), i); }
  ClassPoly zero() const { return ClassPoly(generator_count()); }

  ClassPoly reduce(const ClassPoly& a) const;
  ClassPoly mul(const ClassPoly& a, const ClassPoly& b) const;
  ClassPoly pow(const ClassPoly& a, int e) const;
  Rational integrate(const ClassPoly& a) const;

  /// Total Chern class sum_k c_k(T).
  ClassPoly total_tangent() const;
  /// Splits a total class into c_0..c_3 (degrees above the dimension vanish).
  std::array<ClassPoly, 4> graded(const ClassPoly& total) const;
};

struct BundleClass {
  int rank = 0;
  /// c_0 .. c_3 of the bundle; c_j = 0 for j > rank.
  std::array<ClassPoly, 4> chern;
};

/// O^{r - k} + L_1 + ... + L_k for the given first Chern classes.
BundleClass split_bundle_class(const ChernRing& ring, int rank,
                               const std::vector<ClassPoly>& line_classes);
BundleClass trivial_bundle_class(const ChernRing& ring, int rank);

/// c_k(E (x) L) = sum_i binom(r - i, k - i) c_i(E) l^{k-i}.
BundleClass twist_by_line(const ChernRing& ring, const BundleClass& e, const ClassPoly& line);

/// P^{l1} x ... x P^{lk} for a partition of any size.
ChernRing projective_product_ring(const Partition& lambda);

/// Same, restricted to 3-folds; throws unless |lambda| = 3.
ChernRing ring_of_projective_product(const Partition& lambda);

/// P(O + L) over a surface base, xi = c1(O(1)).
ChernRing projective_bundle_ring(
    const ChernRing& base, const ClassPoly& line,
    ProjectiveBundleConvention convention = kDefaultProjectiveBundleConvention);

/// Smooth quadric 3-fold: Z[H]/(H^4), integral of H^3 is 2, c(T) = (1+H)^5/(1+2H).
ChernRing quadric_threefold_ring();

/// Blow-up of P^3 along a smooth conic, presented by its intersection numbers
/// in H (hyperplane) and E (exceptional divisor).
ChernRing blowup_p3_conic_ring();

/// Ring matching one of the built-in toric spaces (or "quadric", "blp3conic").
ChernRing named_ring(const std::string& name);

/// Ring generators corresponding to the toric Picard basis of a built-in space.
std::vector<ClassPoly> picard_generators(const ChernRing& ring, const std::string& name);

/// Integral of c3(T (x) K) = c3(T) - c1(T) c2(T).
Integer c3_t_omega(const ChernRing& ring);

/// Labels of the mixed Chern numbers for bundles of rank r, in vector order.
std::vector<std::string> mixed_chern_labels(int r);

/// Integrals of all degree-3 monomials in c1..c3(T) and c1..c_min(r,3)(F).
std::vector<Rational> mixed_chern_vector(const ChernRing& ring, const BundleClass& f);

struct PairClass {
  ChernRing ring;
  BundleClass bundle;
};

/// phi(lambda, mu) = [P^lambda, O^{r - l(mu)} + sum_{m in mu} L_m].
PairClass phi_class(const PartitionPair& pair, int r);

/// Square matrix whose column j is the mixed vector of the j-th basis class.
std::vector<std::vector<Rational>> cobordism_basis_matrix(int r);

/// Solves A x = b exactly; throws SingularBasisMatrix when A is singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

Rational determinant_exact(std::vector<std::vector<Rational>> a);

/// Coordinates of [Y, F] in the phi basis of omega_{3,r} (x) Q.
std::vector<std::pair<PartitionPair, Rational>> decompose(const ChernRing& ring,
                                                          const BundleClass& f, int r);

/// Mixed vector of sum_j x_j phi_j.
std::vector<Rational> reconstruct(const std::vector<std::pair<PartitionPair, Rational>>& coords,
                                  int r);

struct DprReport {
  std::vector<std::string> labels;
  std::array<std::vector<Rational>, 4> vectors;  // Y_xi, A, B, P(pi)
  std::array<Integer, 4> c3_values;
  bool chern_numbers_ok = false;
  bool c3_ok = false;
  bool passed() const { return chern_numbers_ok && c3_ok; }
};

/// Checks [Y_xi] - [A] - [B] + [P(pi)] = 0 on mixed Chern numbers and on the
/// c3(T (x) K) exponent.
DprReport dpr_check(const PairClass& y_xi, const PairClass& a, const PairClass& b,
                    const PairClass& p_pi);

struct DoublePointRelation {
  std::string name;
  std::string description;
  std::array<PairClass, 4> members;  // Y_xi, A, B, P(pi)
};

const std::vector<std::string>& builtin_relation_names();
DoublePointRelation builtin_relation(const std::string& name, int rank = 1);

}  // namespace quotdt
