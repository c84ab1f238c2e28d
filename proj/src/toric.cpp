#include "quotdt/toric.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "quotdt/error.hpp"

namespace quotdt {

namespace {

Fan make_fan(const std::string& name) {
  Fan fan;
  if (name == "p3") {
    fan.rays = {Vec3{-1, -1, -1}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    // Chart i omits ray i.
    fan.cones = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    fan.picard_basis = {{1, 0, 0, 0}};
  } else if (name == "p2xp1" || name == "blp3") {
    const int a = name == "blp3" ? 1 : 0;
    fan.rays = {Vec3{-1, -1, a}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}, Vec3{0, 0, -1}};
    for (int fiber : {3, 4}) {
      fan.cones.push_back({1, 2, fiber});
      fan.cones.push_back({0, 2, fiber});
      fan.cones.push_back({0, 1, fiber});
    }
    fan.picard_basis = {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}};
  } else if (name == "p1cubed") {
    fan.rays = {Vec3{1, 0, 0}, Vec3{-1, 0, 0}, Vec3{0, 1, 0},
                Vec3{0, -1, 0}, Vec3{0, 0, 1}, Vec3{0, 0, -1}};
    for (int x : {0, 1}) {
      for (int y : {2, 3}) {
        for (int z : {4, 5}) fan.cones.push_back({x, y, z});
      }
    }
    fan.picard_basis = {{0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1}};
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown space '" + name + "'");
  }
  return fan;
}

std::array<Vec3, 3> cone_rays(const Fan& fan, std::size_t cone) {
  const auto& c = fan.cones[cone];
  return {fan.rays[static_cast<std::size_t>(c[0])], fan.rays[static_cast<std::size_t>(c[1])],
          fan.rays[static_cast<std::size_t>(c[2])]};
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

}  // namespace

void ToricSpace::validate() const {
  if (charts.empty()) throw Error(ErrorKind::kInvalidArgument, "space has no charts");
  for (std::size_t a = 0; a < charts.size(); ++a) {
    const auto d = det3(charts[a]);
    if (d != 1 && d != -1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "chart " + std::to_string(a) + " is not a lattice basis (det " +
                      std::to_string(d) + ")");
    }
  }
}

SplitBundle SplitBundle::trivial(const ToricSpace& space, int rank) {
  SplitBundle b;
  b.rank = rank;
  b.twists.assign(space.chart_count(), std::vector<Vec3>(static_cast<std::size_t>(rank), Vec3{}));
  return b;
}

void SplitBundle::validate(const ToricSpace& space) const {
  if (rank < 1) throw Error(ErrorKind::kInvalidArgument, "bundle rank must be positive");
  if (twists.size() != space.chart_count()) {
    throw Error(ErrorKind::kInvalidArgument, "bundle has data for " +
                                                 std::to_string(twists.size()) + " charts, space has " +
                                                 std::to_string(space.chart_count()));
  }
  for (const auto& t : twists) {
    if (static_cast<int>(t.size()) != rank) {
      throw Error(ErrorKind::kRankMismatch, "per-chart twist count differs from bundle rank");
    }
  }
}

const std::vector<std::string>& builtin_space_names() {
  static const std::vector<std::string> names{"p3", "p2xp1", "p1cubed", "blp3"};
  return names;
}

std::array<Vec3, 3> cone_dual_basis(const std::array<Vec3, 3>& rays) {
  const auto d = det3(rays);
  if (d != 1 && d != -1) throw Error(ErrorKind::kInvalidArgument, "cone is not smooth");
  // Rows of the inverse transpose are the cofactor rows divided by det.
  std::array<Vec3, 3> dual{};
  for (int i = 0; i < 3; ++i) {
    const Vec3& a = rays[(i + 1) % 3];
    const Vec3& b = rays[(i + 2) % 3];
    Vec3 cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    for (int k = 0; k < 3; ++k) dual[i][k] = static_cast<std::int32_t>(cross[k] / d);
  }
  return dual;
}

ToricSpace builtin_space(const std::string& name) {
  ToricSpace space;
  space.name = name;
  space.fan = make_fan(name);
  for (std::size_t c = 0; c < space.fan->cones.size(); ++c) {
    space.charts.push_back(cone_dual_basis(cone_rays(*space.fan, c)));
  }
  space.validate();
  return space;
}

std::vector<Vec3> line_bundle_characters(const ToricSpace& space,
                                         const std::vector<int>& degrees) {
  if (!space.fan) {
    throw Error(ErrorKind::kInvalidArgument,
                "space '" + space.name + "' has no fan; give per-chart characters instead");
  }
  const Fan& fan = *space.fan;
  if (degrees.size() != fan.picard_basis.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(fan.picard_basis.size()) + " degrees");
  }
  std::vector<int> divisor(fan.rays.size(), 0);
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    for (std::size_t r = 0; r < divisor.size(); ++r) divisor[r] += degrees[k] * fan.picard_basis[k][r];
  }
  // The generator chi^m on U_sigma satisfies <m, v_rho> = -a_rho for rho in sigma.
  std::vector<Vec3> out;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto dual = cone_dual_basis(cone_rays(fan, c));
    Vec3 m{};
    for (int j = 0; j < 3; ++j) {
      const int a = divisor[static_cast<std::size_t>(fan.cones[c][j])];
      for (int k = 0; k < 3; ++k) m[k] -= a * dual[j][k];
    }
    out.push_back(m);
  }
  return out;
}

SplitBundle split_bundle(const ToricSpace& space, const std::vector<std::vector<int>>& degrees) {
  SplitBundle b;
  b.rank = static_cast<int>(degrees.size());
  b.twists.assign(space.chart_count(), {});
  for (const auto& d : degrees) {
    const auto chars = line_bundle_characters(space, d);
    for (std::size_t a = 0; a < chars.size(); ++a) b.twists[a].push_back(chars[a]);
  }
  b.validate(space);
  return b;
}

std::vector<int> parse_line_bundle(const std::string& token, std::size_t picard_rank) {
  const std::string t = trim(token);
  if (t.empty() || (t[0] != 'O' && t[0] != 'o')) {
    throw Error(ErrorKind::kInvalidArgument, "bad line bundle '" + token + "'");
  }
  std::string body = trim(t.substr(1));
  if (body.empty()) return std::vector<int>(picard_rank, 0);
  if (body.front() == '(') {
    if (body.back() != ')') throw Error(ErrorKind::kInvalidArgument, "bad line bundle '" + token + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw Error(ErrorKind::kInvalidArgument, "bad degree '" + part + "' in '" + token + "'");
    }
    out.push_back(v);
  }
  if (out.size() == 1 && picard_rank > 1 && out[0] == 0) out.assign(picard_rank, 0);
  if (out.size() != picard_rank) {
    throw Error(ErrorKind::kInvalidArgument, "'" + token + "' needs " +
                                                 std::to_string(picard_rank) + " degrees");
  }
  return out;
}

std::vector<std::vector<int>> parse_bundle_list(const std::string& text, std::size_t picard_rank) {
  // Split on commas that are not inside parentheses.
  std::vector<std::vector<int>> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(parse_line_bundle(cur, picard_rank));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(parse_line_bundle(cur, picard_rank));
  return out;
}

ChartWeights chart_weights(const ToricSpace& space, const SplitBundle& bundle, std::size_t chart) {
  return ChartWeights::with_twists(space.charts.at(chart), bundle.twists.at(chart));
}

Integer ParamSampler::draw() {
  constexpr std::uint64_t range = 2 * kBound + 1;
  constexpr std::uint64_t limit = (~std::uint64_t{0} / range) * range;
  std::uint64_t x = 0;
  do {
    x = rng_();
  } while (x >= limit);
  return Integer(static_cast<long>(x % range) - kBound);
}

EquivParams ParamSampler::draw_params(int rank) {
  EquivParams p;
  for (int i = 0; i < 3; ++i) p.s.push_back(draw());
  for (int j = 0; j < rank; ++j) p.v.push_back(draw());
  return p;
}

namespace {

// Per-chart generating series of contributions at one parameter point.
Series chart_series(const ChartWeights& chart, int r, int nmax, const EquivParams& params) {
  std::vector<Rational> c(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) c[n] = chart_contribution(chart, r, n, params);
  return Series(std::move(c));
}

Series localize_once(const ToricSpace& space, const SplitBundle& bundle, int nmax,
                     ParamSampler& sampler, EquivParams& used) {
  for (int attempt = 0; attempt < ParamSampler::kMaxResamples; ++attempt) {
    used = sampler.draw_params(bundle.rank);
    try {
      Series total(nmax);
      for (std::size_t a = 0; a < space.chart_count(); ++a) {
        total = total * chart_series(chart_weights(space, bundle, a), bundle.rank, nmax, used);
      }
      return total;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kZeroWeight) throw;
    }
  }
  throw Error(ErrorKind::kZeroWeight, "no admissible parameter point after " +
                                          std::to_string(ParamSampler::kMaxResamples) + " draws");
}

}  // namespace

DtComputation localize_dt(const ToricSpace& space, const SplitBundle& bundle, int nmax,
                          std::uint64_t seed, int trials) {
  if (nmax < 0) throw Error(ErrorKind::kInvalidArgument, "nmax must be nonnegative");
  if (trials < 2) throw Error(ErrorKind::kInvalidArgument, "at least two trials are required");
  space.validate();
  bundle.validate(space);

  ParamSampler sampler(seed);
  DtComputation out{Series(nmax), {}};
  for (int t = 0; t < trials; ++t) {
    EquivParams used;
    Series s = localize_once(space, bundle, nmax, sampler, used);
    out.params.push_back(used);
    if (t == 0) {
      out.series = s;
      continue;
    }
    for (int n = 0; n <= nmax; ++n) {
      if (s[n] != out.series[n]) {
        throw Error(ErrorKind::kParameterDependence,
                    "q^" + std::to_string(n) + " coefficient " + to_string(out.series[n]) +
                        " at " + out.params.front().to_string() + " but " + to_string(s[n]) +
                        " at " + used.to_string());
      }
    }
  }
  for (int n = 0; n <= nmax; ++n) {
    if (!is_integer(out.series[n])) {
      throw Error(ErrorKind::kNonIntegral,
                  "q^" + std::to_string(n) + " coefficient " + to_string(out.series[n]));
    }
  }
  return out;
}

Integer dt_invariant(const ToricSpace& space, const SplitBundle& bundle, int n,
                     std::uint64_t seed, int trials) {
  const auto comp = localize_dt(space, bundle, n, seed, trials);
  return comp.series[n].get_num();
}

Series dt_series(const ToricSpace& space, const SplitBundle& bundle, int nmax,
                 std::uint64_t seed, int trials) {
  return localize_dt(space, bundle, nmax, seed, trials).series;
}

Integer c3_via_localization(const ToricSpace& space, std::uint64_t seed, int trials) {
  if (trials < 2) throw Error(ErrorKind::kInvalidArgument, "at least two trials are required");
  space.validate();
  ParamSampler sampler(seed);
  std::optional<Rational> first;
  for (int t = 0; t < trials; ++t) {
    std::optional<Rational> value;
    for (int attempt = 0; attempt < ParamSampler::kMaxResamples && !value; ++attempt) {
      const EquivParams p = sampler.draw_params(0);
      Rational sum = 0;
      bool admissible = true;
      for (const auto& chart : space.charts) {
        std::array<Integer, 3> a;
        for (std::size_t i = 0; i < 3; ++i) a[i] = weight_value(chart[i], p);
        if (a[0] == 0 || a[1] == 0 || a[2] == 0) {
          admissible = false;
          break;
        }
        const Integer sigma = a[0] + a[1] + a[2];
        sum += make_rational((a[0] - sigma) * (a[1] - sigma) * (a[2] - sigma), a[0] * a[1] * a[2]);
      }
      if (admissible) value = sum;
    }
    if (!value) throw Error(ErrorKind::kZeroWeight, "no admissible parameter point");
    value->canonicalize();
    if (!first) first = value;
    else if (*first != *value) {
      throw Error(ErrorKind::kParameterDependence,
                  "c3 localization gave " + to_string(*first) + " and " + to_string(*value));
    }
  }
  if (!is_integer(*first)) throw Error(ErrorKind::kNonIntegral, "c3 = " + to_string(*first));
  return first->get_num();
}

Integer count_fixed_points(const ToricSpace& space, int r, int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative number of points");
  std::vector<Integer> per_chart(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) per_chart[k] = enum_colored(k, r).size();
  // Convolve the per-chart counts once per chart.
  std::vector<Integer> total(static_cast<std::size_t>(n) + 1, 0);
  total[0] = 1;
  for (std::size_t a = 0; a < space.chart_count(); ++a) {
    std::vector<Integer> next(total.size(), 0);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) next[i + j] += total[i] * per_chart[j];
    }
    total = std::move(next);
  }
  return total[n];
}

}  // namespace quotdt
