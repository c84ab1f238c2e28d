#pragma once

// Virtual tangent characters at torus fixed points of the local Quot scheme of
// points on a chart A^3, and their inverse equivariant Euler classes.

#include <array>
#include <cstdint>
#include <vector>

#include "quotdt/charalg.hpp"
#include "quotdt/conventions.hpp"
#include "quotdt/partitions.hpp"

namespace quotdt {

using Vec3 = std::array<std::int32_t, 3>;

struct ChartWeights {
  /// Characters of the three chart directions in the global torus basis.
  std::array<Vec3, 3> tangent{};
  /// Per-colour weights u_j t^{m_j}, each of length 3 + r.
  std::vector<Exponent> colors;

  int rank() const { return static_cast<int>(colors.size()); }

  /// Chart with colour weights u_j t^{m_j} for the given torus parts m_j.
  static ChartWeights with_twists(const std::array<Vec3, 3>& tangent,
                                  const std::vector<Vec3>& twists);
  /// t^{e_i} tangent directions and trivial twists.
  static ChartWeights standard(int r);
};

std::int64_t det3(const std::array<Vec3, 3>& m);

struct VirtualCharacter {
  LaurentPoly value;
};

/// T^vir = f^ q - q^ f / k + q^ q P / k with f = sum w_j, q = sum w_j Q_j,
/// P = (1-x1)(1-x2)(1-x3), k = x1 x2 x3 and ^ the bar involution.
/// Throws NonzeroFixedPart if the constant term does not cancel.
VirtualCharacter vertex_character(const ColoredPlanePartition& pt, const ChartWeights& chart,
                                  BoxConvention convention = kDefaultBoxConvention);

/// Same computation without the fixed-part check; used by calibration tests.
LaurentPoly vertex_character_unchecked(const ColoredPlanePartition& pt, const ChartWeights& chart,
                                       BoxConvention convention);

/// k^{-1} for the chart, as a rank-r monomial.
LaurentPoly chart_canonical_inverse(const ChartWeights& chart);

/// prod_{coeff<0} w^{-coeff} / prod_{coeff>0} w^{coeff}.
Rational euler_inverse(const VirtualCharacter& ch, const EquivParams& params);

/// Sum of euler_inverse over all r-coloured plane partitions of size n.
/// Work is split across `threads` workers; 0 means the global default.
Rational chart_contribution(const ChartWeights& chart, int r, int n, const EquivParams& params,
                            BoxConvention convention = kDefaultBoxConvention,
                            unsigned threads = 0);

/// Process-wide default worker count (initially from QUOTDT_THREADS, else 1).
unsigned default_thread_count();
void set_default_thread_count(unsigned n);

}  // namespace quotdt
