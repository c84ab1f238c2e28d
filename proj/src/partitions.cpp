#include "quotdt/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "quotdt/error.hpp"

namespace quotdt {

bool is_downward_closed(const std::vector<Box>& boxes) {
  std::set<Box> set(boxes.begin(), boxes.end());
  for (const Box& b : set) {
    if (b.i < 0 || b.j < 0 || b.k < 0) return false;
    // Closure under the three unit steps implies closure under all of them.
    if (b.i > 0 && !set.contains(Box{b.i - 1, b.j, b.k})) return false;
    if (b.j > 0 && !set.contains(Box{b.i, b.j - 1, b.k})) return false;
    if (b.k > 0 && !set.contains(Box{b.i, b.j, b.k - 1})) return false;
  }
  return true;
}

PlanePartition::PlanePartition(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  std::sort(boxes_.begin(), boxes_.end());
  boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
  if (!is_downward_closed(boxes_)) {
    throw Error(ErrorKind::kInvalidArgument, "box set is not downward closed");
  }
}

PlanePartition PlanePartition::from_layers(const std::vector<Partition>& layers) {
  std::vector<Box> boxes;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    for (std::size_t i = 0; i < layers[k].size(); ++i) {
      for (int j = 0; j < layers[k][i]; ++j) {
        boxes.push_back(Box{static_cast<int>(i), j, static_cast<int>(k)});
      }
    }
  }
  return PlanePartition(std::move(boxes));
}

bool PlanePartition::contains(const Box& b) const {
  return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

std::string PlanePartition::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t n = 0; n < boxes_.size(); ++n) {
    const Box& b = boxes_[n];
    os << (n ? "," : "") << "(" << b.i << "," << b.j << "," << b.k << ")";
  }
  os << "}";
  return os.str();
}

std::size_t ColoredPlanePartition::total_size() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  return n;
}

std::string PartitionPair::to_string() const {
  auto fmt = [](const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
  };
  return "[" + fmt(lambda) + "," + fmt(mu) + "]";
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

// Young diagrams of size `size` that fit inside `bound` (row by row).
void contained_partitions(int size, const Partition& bound, std::size_t row, int max_part,
                          Partition& current, std::vector<Partition>& out) {
  if (size == 0) {
    out.push_back(current);
    return;
  }
  if (row >= bound.size()) return;
  for (int p = std::min({size, max_part, bound[row]}); p >= 1; --p) {
    current.push_back(p);
    contained_partitions(size - p, bound, row + 1, p, current, out);
    current.pop_back();
  }
}

void plane_rec(int remaining, std::vector<Partition>& layers,
               std::vector<PlanePartition>& out) {
  if (remaining == 0) {
    out.push_back(PlanePartition::from_layers(layers));
    return;
  }
  const Partition below = layers.back();
  int below_size = 0;
  for (int x : below) below_size += x;
  for (int s = std::min(remaining, below_size); s >= 1; --s) {
    std::vector<Partition> next;
    Partition cur;
    contained_partitions(s, below, 0, s, cur, next);
    for (auto& layer : next) {
      layers.push_back(std::move(layer));
      plane_rec(remaining - s, layers, out);
      layers.pop_back();
    }
  }
}

void compositions_rec(int remaining, int parts, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    cur.push_back(a);
    compositions_rec(remaining - a, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enum_partitions(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative partition size");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<PlanePartition> enum_plane_partitions(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative plane partition size");
  std::vector<PlanePartition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Bottom layer: any Young diagram of size s <= n; upper layers nest inside.
  for (int s = n; s >= 1; --s) {
    for (auto& base : enum_partitions(s)) {
      std::vector<Partition> layers{base};
      plane_rec(n - s, layers, out);
    }
  }
  return out;
}

std::vector<std::vector<int>> enum_compositions(int n, int parts) {
  if (n < 0 || parts < 1) {
    throw Error(ErrorKind::kInvalidArgument, "compositions need n >= 0 and parts >= 1");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions_rec(n, parts, cur, out);
  return out;
}

std::vector<ColoredPlanePartition> enum_colored(int n, int r) {
  if (r < 1) throw Error(ErrorKind::kInvalidArgument, "rank must be positive");
  std::map<int, std::vector<PlanePartition>> cache;
  auto pps = [&](int k) -> const std::vector<PlanePartition>& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, enum_plane_partitions(k)).first;
    return it->second;
  };

  std::vector<ColoredPlanePartition> out;
  for (const auto& comp : enum_compositions(n, r)) {
    // Odometer over the Cartesian product of per-colour enumerations.
    std::vector<const std::vector<PlanePartition>*> lists;
    for (int k : comp) lists.push_back(&pps(k));
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    while (true) {
      ColoredPlanePartition cpp;
      cpp.parts.reserve(static_cast<std::size_t>(r));
      for (std::size_t c = 0; c < lists.size(); ++c) cpp.parts.push_back((*lists[c])[idx[c]]);
      out.push_back(std::move(cpp));
      bool done = true;
      for (std::size_t c = lists.size(); c-- > 0;) {
        if (++idx[c] < lists[c]->size()) {
          done = false;
          break;
        }
        idx[c] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

std::vector<PartitionPair> enum_partition_pairs(int n, int r) {
  if (r < 0) throw Error(ErrorKind::kInvalidArgument, "negative type");
  std::vector<PartitionPair> out;
  for (const auto& lambda : enum_partitions(n)) {
    // Distinct parts with multiplicities, largest first.
    std::vector<std::pair<int, int>> mult;
    for (int p : lambda) {
      if (!mult.empty() && mult.back().first == p) ++mult.back().second;
      else mult.emplace_back(p, 1);
    }
    // Choosing how many copies of each part go into mu identifies
    // sub-partitions that differ by permuting equal parts.
    std::vector<int> take(mult.size(), 0);
    while (true) {
      Partition mu;
      for (std::size_t d = 0; d < mult.size(); ++d) {
        for (int c = 0; c < take[d]; ++c) mu.push_back(mult[d].first);
      }
      if (static_cast<int>(mu.size()) <= r) out.push_back(PartitionPair{lambda, mu});
      std::size_t d = 0;
      for (; d < mult.size(); ++d) {
        if (++take[d] <= mult[d].second) break;
        take[d] = 0;
      }
      if (d == mult.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const PartitionPair& a, const PartitionPair& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    if (a.mu.size() != b.mu.size()) return a.mu.size() < b.mu.size();
    return a.mu > b.mu;
  });
  return out;
}

LaurentPoly pp_character(const PlanePartition& pp) {
  LaurentPoly out(0);
  for (const Box& b : pp.boxes()) out.add_term(Exponent{b.i, b.j, b.k}, 1);
  return out;
}

}  // namespace quotdt
