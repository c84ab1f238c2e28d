#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quotdt/charalg.hpp"

namespace quotdt {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

struct Box {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Finite downward-closed set of boxes, stored sorted by (i,j,k).
class PlanePartition {
 public:
  PlanePartition() = default;
  /// Sorts and deduplicates; throws if the set is not downward closed.
  explicit PlanePartition(std::vector<Box> boxes);

  /// Builds from a stack of layers; layer k is a Young diagram (row lengths).
  static PlanePartition from_layers(const std::vector<Partition>& layers);

  const std::vector<Box>& boxes() const { return boxes_; }
  std::size_t size() const { return boxes_.size(); }
  bool contains(const Box& b) const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
  friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;

  std::string to_string() const;

 private:
  std::vector<Box> boxes_;
};

bool is_downward_closed(const std::vector<Box>& boxes);

struct ColoredPlanePartition {
  std::vector<PlanePartition> parts;

  int rank() const { return static_cast<int>(parts.size()); }
  std::size_t total_size() const;
  friend bool operator==(const ColoredPlanePartition&, const ColoredPlanePartition&) = default;
  friend auto operator<=>(const ColoredPlanePartition&, const ColoredPlanePartition&) = default;
};

/// A partition lambda with a sub-multiset mu of its parts, ell(mu) <= r.
struct PartitionPair {
  Partition lambda;
  Partition mu;
  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
  friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
  std::string to_string() const;
};

/// Partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> enum_partitions(int n);

/// Plane partitions of n, generated layer by layer.
std::vector<PlanePartition> enum_plane_partitions(int n);

/// Compositions of n into exactly `parts` nonnegative parts, lexicographic.
std::vector<std::vector<int>> enum_compositions(int n, int parts);

std::vector<ColoredPlanePartition> enum_colored(int n, int r);

std::vector<PartitionPair> enum_partition_pairs(int n, int r);

/// Sum over boxes of t1^i t2^j t3^k, as a rank-0 polynomial.
LaurentPoly pp_character(const PlanePartition& pp);

}  // namespace quotdt
