#pragma once

// Smooth projective toric 3-folds given by their fixed-point charts, split
// equivariant bundles, and global DT invariants assembled by localization.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quotdt/series.hpp"
#include "quotdt/vertex.hpp"

namespace quotdt {

/// Rays and maximal cones of a smooth complete fan in Z^3.
struct Fan {
  std::vector<Vec3> rays;
  std::vector<std::array<int, 3>> cones;
  /// Torus-invariant divisors generating Pic, as coefficients on the rays.
  std::vector<std::vector<int>> picard_basis;
};

struct ToricSpace {
  std::string name;
  /// Per fixed point: coordinate characters of the chart (a Z^3 basis).
  std::vector<std::array<Vec3, 3>> charts;
  std::optional<Fan> fan;

  std::size_t chart_count() const { return charts.size(); }
  /// Throws InvalidArgument unless every chart is a lattice basis.
  void validate() const;
};

struct SplitBundle {
  int rank = 0;
  /// twists[chart][colour]: local generator character of the line summand.
  std::vector<std::vector<Vec3>> twists;

  static SplitBundle trivial(const ToricSpace& space, int rank);
  void validate(const ToricSpace& space) const;
};

/// Names accepted by builtin_space.
const std::vector<std::string>& builtin_space_names();

/// p3, p2xp1, p1cubed, blp3 (= P(O + O(1)) over P^2, the blow-up of P^3 at a point).
ToricSpace builtin_space(const std::string& name);

/// Dual basis of a smooth cone: m_i . v_j = delta_ij.
std::array<Vec3, 3> cone_dual_basis(const std::array<Vec3, 3>& rays);

/// Local generator characters of O(sum d_k D_k) over the Picard basis of the fan.
std::vector<Vec3> line_bundle_characters(const ToricSpace& space, const std::vector<int>& degrees);

/// Direct sum of line bundles O(d) for each degree vector.
SplitBundle split_bundle(const ToricSpace& space, const std::vector<std::vector<int>>& degrees);

/// Parses "O", "O1", "O(2)", "O(1,0)", "O(-1,2,0)" into a degree vector of the given length.
std::vector<int> parse_line_bundle(const std::string& token, std::size_t picard_rank);

/// Comma-separated list of line-bundle tokens, e.g. "O,O1" or "O(1,0),O(0,1)".
std::vector<std::vector<int>> parse_bundle_list(const std::string& text, std::size_t picard_rank);

ChartWeights chart_weights(const ToricSpace& space, const SplitBundle& bundle, std::size_t chart);

/// Seeded source of equivariant parameters, uniform in [-10^6, 10^6].
class ParamSampler {
 public:
  static constexpr std::int64_t kBound = 1000000;
  static constexpr int kMaxResamples = 32;

  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}
  Integer draw();
  EquivParams draw_params(int rank);

 private:
  std::mt19937_64 rng_;
};

struct DtComputation {
  Series series;
  std::vector<EquivParams> params;
};

/// Localization sum for DT^0..DT^nmax, evaluated at `trials` independent
/// parameter points; throws ParameterDependence or NonIntegral.
DtComputation localize_dt(const ToricSpace& space, const SplitBundle& bundle, int nmax,
                          std::uint64_t seed, int trials = 2);

Integer dt_invariant(const ToricSpace& space, const SplitBundle& bundle, int n,
                     std::uint64_t seed, int trials = 2);

Series dt_series(const ToricSpace& space, const SplitBundle& bundle, int nmax,
                 std::uint64_t seed, int trials = 2);

/// Sum over charts of prod(a_i - sigma)/prod a_i, sigma = sum a_i.
Integer c3_via_localization(const ToricSpace& space, std::uint64_t seed, int trials = 2);

/// Number of torus fixed points of Quot(O^r, n): r-coloured plane partitions
/// distributed over the charts.
Integer count_fixed_points(const ToricSpace& space, int r, int n);

}  // namespace quotdt
