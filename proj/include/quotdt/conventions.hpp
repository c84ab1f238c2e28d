#pragma once

// Sign conventions pinned by calibration tests. See docs/CONVENTIONS.md.

namespace quotdt {

/// How a box (i,j,k) of a plane partition on a chart maps to a character.
enum class BoxConvention {
  /// x1^i x2^j x3^k with x_a the chart's coordinate characters t^{tangent_a}.
  kCoordinate,
  /// The bar of the above: x1^-i x2^-j x3^-k.
  kDual,
};

/// Sign of the Grothendieck relation for P(O + L) over a surface base. The
/// relative tangent class is always c(T_rel) = (1 + xi)(1 + xi + c1(L)).
enum class ProjectiveBundleConvention {
  /// xi^2 + c1(L) xi = 0: xi = c1(O(1)) on the bundle of lines.
  kMinusC1,
  /// xi^2 - c1(L) xi = 0.
  kPlusC1,
};

inline constexpr BoxConvention kDefaultBoxConvention = BoxConvention::kCoordinate;
inline constexpr ProjectiveBundleConvention kDefaultProjectiveBundleConvention =
    ProjectiveBundleConvention::kMinusC1;

}  // namespace quotdt
