#include "quotdt/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "quotdt/chern.hpp"
#include "quotdt/error.hpp"
#include "quotdt/toric.hpp"

namespace quotdt::cli {

using nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad integer '" + s + "' for " + what);
  return v;
}

Vec3 parse_vec3(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw UsageError(what + " needs three integers, got '" + s + "'");
  return {to_int(parts[0], what), to_int(parts[1], what), to_int(parts[2], what)};
}

std::string frac(const Rational& q) { return to_fraction_string(q); }

ordered_json series_json(const Series& s) {
  ordered_json out = ordered_json::array();
  for (const auto& c : s.coeffs()) out.push_back(frac(c));
  return out;
}

ordered_json params_json(const EquivParams& p) {
  ordered_json s = ordered_json::array();
  ordered_json v = ordered_json::array();
  for (const auto& x : p.s) s.push_back(x.get_str());
  for (const auto& x : p.v) v.push_back(x.get_str());
  return ordered_json{{"s", s}, {"v", v}};
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

struct Context {
  explicit Context(const RunConfig& c) : config(c) {}

  const RunConfig& config;
  ordered_json inputs = ordered_json::object();
  ordered_json values = ordered_json::object();
  ordered_json verdicts = ordered_json::object();
  std::ostringstream table;
  int exit_code = kExitOk;

  void fail(int code) {
    if (exit_code == kExitOk || code == kExitInvariant) exit_code = code;
  }
};

// ---------------------------------------------------------------------------
// Space and bundle resolution

struct ResolvedSpace {
  ToricSpace space;
  bool builtin = false;
};

ResolvedSpace resolve_space(const RunConfig& c) {
  if (!c.charts.empty()) {
    if (c.space) throw UsageError("give either space or chart data, not both");
    ToricSpace s;
    s.name = "inline";
    for (const auto& text : c.charts) {
      const auto rows = split(text, ';');
      if (rows.size() != 3) throw UsageError("chart needs three ';'-separated vectors: " + text);
      s.charts.push_back({parse_vec3(rows[0], "chart"), parse_vec3(rows[1], "chart"),
                          parse_vec3(rows[2], "chart")});
    }
    try {
      s.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return {std::move(s), false};
  }
  const std::string name = c.space.value_or("p3");
  try {
    return {builtin_space(name), true};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

SplitBundle resolve_bundle(const RunConfig& c, const ToricSpace& space) {
  if (!c.bundle_charts.empty()) {
    if (c.bundle) throw UsageError("give either bundle or bundle_chart data, not both");
    if (c.bundle_charts.size() != space.chart_count()) {
      throw UsageError("bundle_chart must be given once per chart");
    }
    SplitBundle b;
    for (const auto& text : c.bundle_charts) {
      std::vector<Vec3> twists;
      for (const auto& t : split(text, ';')) twists.push_back(parse_vec3(t, "bundle_chart"));
      b.twists.push_back(std::move(twists));
    }
    b.rank = static_cast<int>(b.twists.front().size());
    try {
      b.validate(space);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return b;
  }
  if (!c.bundle) return SplitBundle::trivial(space, c.rank.value_or(1));
  if (!space.fan) throw UsageError("line-bundle names need a built-in space");
  try {
    auto b = split_bundle(space, parse_bundle_list(*c.bundle, space.fan->picard_basis.size()));
    if (c.rank && *c.rank != b.rank) throw UsageError("rank disagrees with the bundle list");
    return b;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

ColoredPlanePartition parse_point(const std::string& text) {
  ColoredPlanePartition pt;
  for (const auto& colour : split(text, '|')) {
    std::vector<Box> boxes;
    if (!colour.empty()) {
      for (const auto& b : split(colour, ';')) {
        const Vec3 v = parse_vec3(b, "point");
        boxes.push_back(Box{v[0], v[1], v[2]});
      }
    }
    try {
      pt.parts.emplace_back(std::move(boxes));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  return pt;
}

std::string exponent_string(const Exponent& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i == 3 ? "|" : (i ? "," : "")) << e[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands

void cmd_toric(Context& ctx) {
  const RunConfig& c = ctx.config;
  const auto [space, builtin] = resolve_space(c);
  const SplitBundle bundle = resolve_bundle(c, space);
  const int nmax = c.nmax.value_or(2);
  const int trials = c.trials.value_or(2);
  const std::uint64_t seed = c.seed.value_or(1);
  if (nmax < 0) throw UsageError("nmax must be nonnegative");
  if (trials < 2) throw UsageError("trials must be at least 2");

  ctx.inputs["space"] = space.name;
  ctx.inputs["charts"] = space.chart_count();
  ctx.inputs["bundle"] = c.bundle.value_or(c.bundle_charts.empty() ? "trivial" : "per-chart");
  ctx.inputs["rank"] = bundle.rank;
  ctx.inputs["nmax"] = nmax;
  ctx.inputs["trials"] = trials;

  ordered_json counts = ordered_json::array();
  for (int n = 0; n <= nmax; ++n) counts.push_back(count_fixed_points(space, bundle.rank, n).get_str());
  ctx.values["fixed_points"] = counts;

  // Exponent of the closed formula.
  const Integer c3_loc = c3_via_localization(space, seed);
  Integer c3 = c3_loc;
  std::string c3_source = "localization";
  if (builtin) {
    c3 = c3_t_omega(named_ring(space.name));
    c3_source = "chern-ring";
    const bool agree = c3 == c3_loc;
    ctx.verdicts["c3_localization"] = verdict(agree);
    if (!agree) ctx.fail(kExitInvariant);
  }
  ctx.values["c3_t_omega"] = frac(Rational(c3));
  ctx.values["c3_source"] = c3_source;
  const Series closed = dt_closed_formula(bundle.rank, c3.get_si(), nmax);
  ctx.values["closed_formula"] = series_json(closed);

  ctx.table << "space " << space.name << " (" << space.chart_count() << " charts), rank "
            << bundle.rank << ", nmax " << nmax << ", seed " << seed << "\n";
  ctx.table << "c3(T (x) K) = " << c3 << " [" << c3_source << "]\n";

  DtComputation comp{Series(nmax), {}};
  try {
    comp = localize_dt(space, bundle, nmax, seed, trials);
  } catch (const Error& e) {
    ctx.values["error"] = e.what();
    ctx.verdicts["localization"] = "FAIL";
    ctx.table << "localization failed: " << e.what() << "\n";
    ctx.fail(kExitInvariant);
    return;
  }
  ctx.verdicts["localization"] = "PASS";
  ordered_json params = ordered_json::array();
  for (const auto& p : comp.params) params.push_back(params_json(p));
  ctx.values["parameters"] = params;
  ctx.values["series"] = series_json(comp.series);

  ordered_json per = ordered_json::array();
  bool all = true;
  ctx.table << std::left << std::setw(4) << "n" << std::setw(14) << "fixed pts" << std::setw(22)
            << "DT (localization)" << std::setw(22) << "closed formula" << "verdict\n";
  for (int n = 0; n <= nmax; ++n) {
    const bool ok = comp.series[n] == closed[n];
    all = all && ok;
    per.push_back(ok ? "MATCH" : "MISMATCH");
    ctx.table << std::setw(4) << n << std::setw(14) << counts[n].get<std::string>() << std::setw(22)
              << to_string(comp.series[n]) << std::setw(22) << to_string(closed[n])
              << (ok ? "MATCH" : "MISMATCH") << "\n";
  }
  ctx.verdicts["coefficients"] = per;
  ctx.verdicts["closed_formula"] = all ? "MATCH" : "MISMATCH";
  ctx.table << "verdict: " << (all ? "MATCH" : "MISMATCH") << "\n";
  if (!all) ctx.fail(kExitOracleMismatch);
}

void cmd_vertex(Context& ctx) {
  const RunConfig& c = ctx.config;
  const std::uint64_t seed = c.seed.value_or(1);
  const int nmax = c.nmax.value_or(2);
  if (nmax < 0) throw UsageError("nmax must be nonnegative");

  ColoredPlanePartition pt;
  if (c.point) pt = parse_point(*c.point);

  ChartWeights chart;
  if (c.space || !c.charts.empty()) {
    const auto [space, builtin] = resolve_space(c);
    RunConfig bc = c;
    if (!bc.rank && c.point && !c.bundle && c.bundle_charts.empty()) bc.rank = pt.rank();
    const SplitBundle bundle = resolve_bundle(bc, space);
    const std::size_t idx = static_cast<std::size_t>(c.chart_index.value_or(0));
    if (idx >= space.chart_count()) throw UsageError("chart index out of range");
    chart = chart_weights(space, bundle, idx);
    ctx.inputs["space"] = space.name;
    ctx.inputs["chart_index"] = idx;
  } else {
    chart = ChartWeights::standard(c.rank.value_or(c.point ? pt.rank() : 1));
    ctx.inputs["space"] = "affine";
  }
  const int r = chart.rank();
  if (!c.point) {
    pt.parts.assign(static_cast<std::size_t>(r), PlanePartition());
    pt.parts[0] = PlanePartition({Box{0, 0, 0}});
  }
  if (pt.rank() != r) throw UsageError("point has " + std::to_string(pt.rank()) + " colours, rank is " + std::to_string(r));

  ctx.inputs["rank"] = r;
  ordered_json pj = ordered_json::array();
  for (const auto& p : pt.parts) pj.push_back(p.to_string());
  ctx.inputs["point"] = pj;
  ctx.inputs["nmax"] = nmax;

  const LaurentPoly t = vertex_character_unchecked(pt, chart, kDefaultBoxConvention);
  const bool vd_zero = t.constant_term() == 0;
  const LaurentPoly sym = t + chart_canonical_inverse(chart) * poly_dual(t);
  const bool symmetric = sym.is_zero();
  ctx.verdicts["vd_zero"] = verdict(vd_zero);
  ctx.verdicts["symmetry"] = verdict(symmetric);
  if (!vd_zero || !symmetric) ctx.fail(kExitInvariant);

  ParamSampler sampler(seed);
  EquivParams params = sampler.draw_params(r);
  ordered_json contributions = ordered_json::array();
  std::optional<Rational> point_value;
  for (int attempt = 0;; ++attempt) {
    try {
      if (vd_zero) point_value = euler_inverse(VirtualCharacter{t}, params);
      contributions = ordered_json::array();
      for (int n = 0; n <= nmax; ++n) contributions.push_back(frac(chart_contribution(chart, r, n, params)));
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kZeroWeight || attempt + 1 >= ParamSampler::kMaxResamples) throw;
      params = sampler.draw_params(r);
    }
  }

  ordered_json terms = ordered_json::array();
  ctx.table << "T^vir at " << pj.dump() << " (rank " << r << "), " << t.size() << " terms\n";
  ctx.table << std::left << std::setw(28) << "exponent (t|u)" << std::setw(8) << "coeff" << "weight\n";
  for (const auto& [e, coeff] : t.terms()) {
    const Integer w = weight_value(e, params);
    terms.push_back(ordered_json{{"exponent", e}, {"coefficient", coeff.get_str()}, {"weight", w.get_str()}});
    ctx.table << std::setw(28) << exponent_string(e) << std::setw(8) << coeff.get_str() << w << "\n";
  }
  ctx.values["character"] = t.to_string();
  ctx.values["terms"] = terms;
  ctx.values["parameters"] = params_json(params);
  ctx.values["euler_inverse"] = point_value ? ordered_json(frac(*point_value)) : ordered_json(nullptr);
  ctx.values["chart_contributions"] = contributions;
  ctx.table << "parameters " << params.to_string() << "\n";
  if (point_value) ctx.table << "1/e(N^vir) = " << to_string(*point_value) << "\n";
  for (int n = 0; n <= nmax; ++n) {
    ctx.table << "chart contribution n=" << n << ": " << contributions[n].get<std::string>() << "\n";
  }
  ctx.table << "vd_zero " << verdict(vd_zero) << ", symmetry " << verdict(symmetric) << "\n";
}

struct RingChoice {
  ChernRing ring;
  std::string name;
  std::vector<ClassPoly> picard;
};

RingChoice resolve_ring(const RunConfig& c) {
  if (c.lambda) {
    Partition lambda;
    for (const auto& p : split(*c.lambda, ',')) lambda.push_back(to_int(p, "lambda"));
    std::sort(lambda.rbegin(), lambda.rend());
    try {
      ChernRing ring = ring_of_projective_product(lambda);
      std::vector<ClassPoly> pic;
      for (std::size_t i = 0; i < lambda.size(); ++i) pic.push_back(ring.gen(i));
      std::string name = ring.name;
      return {std::move(ring), name, std::move(pic)};
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const std::string name = c.space.value_or("p3");
  try {
    ChernRing ring = named_ring(name);
    auto pic = picard_generators(ring, name);
    return {std::move(ring), name, std::move(pic)};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

BundleClass resolve_bundle_class(const RunConfig& c, const RingChoice& rc) {
  std::vector<ClassPoly> lines;
  int rank = c.rank.value_or(1);
  if (c.bundle) {
    std::vector<std::vector<int>> degrees;
    try {
      degrees = parse_bundle_list(*c.bundle, rc.picard.size());
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!c.rank) rank = static_cast<int>(degrees.size());
    for (const auto& d : degrees) {
      ClassPoly l = rc.ring.zero();
      for (std::size_t k = 0; k < d.size(); ++k) l += Rational(d[k]) * rc.picard[k];
      if (!l.is_zero()) lines.push_back(l);
    }
  }
  if (rank < 1 || static_cast<int>(lines.size()) > rank) throw UsageError("bad bundle rank");
  return split_bundle_class(rc.ring, rank, lines);
}

ordered_json vector_json(const std::vector<std::string>& labels, const std::vector<Rational>& v) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < v.size(); ++i) out[labels[i]] = frac(v[i]);
  return out;
}

void cmd_chern(Context& ctx) {
  const RunConfig& c = ctx.config;
  const RingChoice rc = resolve_ring(c);
  const BundleClass f = resolve_bundle_class(c, rc);
  ctx.inputs["space"] = rc.name;
  ctx.inputs["bundle"] = c.bundle.value_or("O");
  ctx.inputs["rank"] = f.rank;

  const Integer c3 = c3_t_omega(rc.ring);
  const Rational chi = rc.ring.integrate(rc.ring.tangent[3]);
  const auto labels = mixed_chern_labels(f.rank);
  const auto vec = mixed_chern_vector(rc.ring, f);
  ctx.values["ring"] = rc.ring.name;
  ctx.values["total_chern_class"] = rc.ring.total_tangent().to_string(rc.ring.generator_names);
  ctx.values["euler_characteristic"] = frac(chi);
  ctx.values["c3_t_omega"] = frac(Rational(c3));
  ctx.values["mixed_chern_numbers"] = vector_json(labels, vec);

  ctx.table << "ring " << rc.ring.name << ", c(T) = " << rc.ring.total_tangent().to_string(rc.ring.generator_names) << "\n";
  ctx.table << "chi = " << to_string(chi) << ", c3(T (x) K) = " << c3 << "\n";

  const auto& toric_names = builtin_space_names();
  if (!c.lambda && std::find(toric_names.begin(), toric_names.end(), rc.name) != toric_names.end()) {
    const Integer loc = c3_via_localization(builtin_space(rc.name), c.seed.value_or(1));
    ctx.values["c3_via_localization"] = frac(Rational(loc));
    ctx.verdicts["c3_localization"] = verdict(loc == c3);
    ctx.table << "c3 via localization = " << loc << " " << verdict(loc == c3) << "\n";
    if (loc != c3) ctx.fail(kExitInvariant);
  }
  for (std::size_t i = 0; i < vec.size(); ++i) {
    ctx.table << "  " << std::left << std::setw(10) << labels[i] << to_string(vec[i]) << "\n";
  }
}

void cmd_cobordism(Context& ctx) {
  const RunConfig& c = ctx.config;
  const int r = c.rank.value_or(1);
  if (r < 1) throw UsageError("rank must be positive");

  if (c.builtin) {
    DoublePointRelation rel;
    try {
      rel = builtin_relation(*c.builtin, r);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    ctx.inputs["builtin"] = rel.name;
    ctx.inputs["rank"] = r;
    const auto& m = rel.members;
    const DprReport rep = dpr_check(m[0], m[1], m[2], m[3]);
    const std::array<const char*, 4> roles{"Y_xi", "A", "B", "P(pi)"};
    ordered_json members = ordered_json::array();
    ctx.table << rel.description << "\n";
    for (std::size_t i = 0; i < 4; ++i) {
      members.push_back(ordered_json{{"role", roles[i]},
                                     {"ring", m[i].ring.name},
                                     {"mixed_chern_numbers", vector_json(rep.labels, rep.vectors[i])},
                                     {"c3_t_omega", frac(Rational(rep.c3_values[i]))}});
      ctx.table << std::left << std::setw(8) << roles[i] << std::setw(24) << m[i].ring.name
                << "c3(T(x)K) = " << rep.c3_values[i] << "\n";
    }
    ctx.values["description"] = rel.description;
    ctx.values["members"] = members;
    // DT(Y_xi) DT(P(pi)) = DT(A) DT(B) under the closed formula.
    const int order = c.nmax.value_or(4);
    auto dt = [&](std::size_t i) { return dt_closed_formula(r, rep.c3_values[i].get_si(), order); };
    const bool multiplicative = dt(0) * dt(3) == dt(1) * dt(2);
    ctx.verdicts["chern_numbers"] = verdict(rep.chern_numbers_ok);
    ctx.verdicts["c3_exponent"] = verdict(rep.c3_ok);
    ctx.verdicts["dt_multiplicative"] = verdict(multiplicative);
    const bool ok = rep.passed() && multiplicative;
    ctx.verdicts["relation"] = verdict(ok);
    ctx.table << "chern numbers " << verdict(rep.chern_numbers_ok) << ", c3 exponent "
              << verdict(rep.c3_ok) << ", DT multiplicative " << verdict(multiplicative) << "\n";
    ctx.table << "relation " << verdict(ok) << "\n";
    if (!ok) ctx.fail(kExitInvariant);
    return;
  }

  const auto pairs = enum_partition_pairs(3, r);
  const Rational det = determinant_exact(cobordism_basis_matrix(r));
  ctx.inputs["rank"] = r;
  ordered_json pj = ordered_json::array();
  for (const auto& p : pairs) pj.push_back(p.to_string());
  ctx.values["partition_pairs"] = pj;
  ctx.values["basis_determinant"] = frac(det);
  ctx.verdicts["basis_invertible"] = verdict(det != 0);
  ctx.table << pairs.size() << " partition pairs of size 3, type " << r
            << "; basis determinant " << to_string(det) << "\n";
  if (det == 0) {
    ctx.fail(kExitInvariant);
    return;
  }

  if (c.space || c.lambda) {
    const RingChoice rc = resolve_ring(c);
    RunConfig bc = c;
    const BundleClass f = resolve_bundle_class(bc, rc);
    if (f.rank != r) throw UsageError("bundle rank must equal --rank for decomposition");
    ctx.inputs["space"] = rc.name;
    ctx.inputs["bundle"] = c.bundle.value_or("O");
    const auto coords = decompose(rc.ring, f, r);
    ordered_json cj = ordered_json::object();
    ctx.table << "decomposition of [" << rc.name << ", " << c.bundle.value_or("O") << "]:\n";
    for (const auto& [p, x] : coords) {
      cj[p.to_string()] = frac(x);
      ctx.table << "  " << std::left << std::setw(18) << p.to_string() << to_string(x) << "\n";
    }
    const bool ok = reconstruct(coords, r) == mixed_chern_vector(rc.ring, f);
    ctx.values["decomposition"] = cj;
    ctx.verdicts["reconstruction"] = verdict(ok);
    ctx.table << "reconstruction " << verdict(ok) << "\n";
    if (!ok) ctx.fail(kExitInvariant);
  }
}

void cmd_macmahon(Context& ctx) {
  const int nmax = ctx.config.nmax.value_or(4);
  if (nmax < 0) throw UsageError("nmax must be nonnegative");
  ctx.inputs["nmax"] = nmax;
  const Series m = macmahon(nmax);
  ctx.values["coefficients"] = series_json(m);
  ctx.table << "M(q) through q^" << nmax << ": " << m.to_string() << "\n";
  // Plane partition enumeration is exponential; cross-check the small orders.
  const int check = std::min(nmax, 10);
  bool ok = true;
  ordered_json counts = ordered_json::array();
  for (int n = 0; n <= check; ++n) {
    const auto count = enum_plane_partitions(n).size();
    counts.push_back(count);
    ok = ok && m[n] == Rational(static_cast<unsigned long>(count));
  }
  ctx.values["plane_partition_counts"] = counts;
  ctx.verdicts["enumeration"] = verdict(ok);
  ctx.table << "plane partition counts through n=" << check << " " << verdict(ok) << "\n";
  if (!ok) ctx.fail(kExitInvariant);
}

const std::map<std::string, std::function<void(Context&)>>& dispatch() {
  static const std::map<std::string, std::function<void(Context&)>> table{
      {"toric", cmd_toric}, {"vertex", cmd_vertex}, {"chern", cmd_chern},
      {"cobordism", cmd_cobordism}, {"macmahon", cmd_macmahon}};
  return table;
}

}  // namespace

void RunConfig::merge_defaults_from(const RunConfig& base) {
  auto fill = [](auto& mine, const auto& theirs) {
    if (!mine) mine = theirs;
  };
  fill(command, base.command);
  fill(space, base.space);
  if (charts.empty()) charts = base.charts;
  fill(bundle, base.bundle);
  if (bundle_charts.empty()) bundle_charts = base.bundle_charts;
  fill(nmax, base.nmax);
  fill(rank, base.rank);
  fill(seed, base.seed);
  fill(trials, base.trials);
  fill(format, base.format);
  fill(threads, base.threads);
  fill(point, base.point);
  fill(chart_index, base.chart_index);
  fill(builtin, base.builtin);
  fill(lambda, base.lambda);
  fill(timing, base.timing);
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string where = "config key '" + key + "'";
    try {
      if (key == "command") c.command = value;
      else if (key == "space") c.space = value;
      else if (key == "chart") c.charts.push_back(value);
      else if (key == "bundle") c.bundle = value;
      else if (key == "bundle_chart") c.bundle_charts.push_back(value);
      else if (key == "nmax") c.nmax = to_int(value, where);
      else if (key == "rank") c.rank = to_int(value, where);
      else if (key == "seed") c.seed = std::stoull(value);
      else if (key == "trials") c.trials = to_int(value, where);
      else if (key == "format") c.format = value;
      else if (key == "threads") c.threads = static_cast<unsigned>(to_int(value, where));
      else if (key == "point") c.point = value;
      else if (key == "chart_index") c.chart_index = to_int(value, where);
      else if (key == "builtin") c.builtin = value;
      else if (key == "lambda") c.lambda = value;
      else if (key == "timing") c.timing = value == "true" || value == "1" || value == "yes";
      else throw std::invalid_argument("unknown " + where);
    } catch (const UsageError& e) {
      throw std::invalid_argument(e.what());
    } catch (const std::logic_error& e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"toric", "vertex", "chern", "cobordism", "macmahon"};
  return names;
}

std::string CommandResult::render(const std::string& format) const {
  if (format == "json") return report.dump(2) + "\n";
  return table;
}

CommandResult run_command(const RunConfig& config) {
  const std::string command = config.command.value_or("");
  const auto& table = dispatch();
  auto it = table.find(command);
  if (it == table.end()) throw std::invalid_argument("unknown command '" + command + "'");
  if (config.format && *config.format != "json" && *config.format != "table") {
    throw std::invalid_argument("format must be 'table' or 'json'");
  }
  if (config.threads) set_default_thread_count(*config.threads);

  Context ctx(config);
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(ctx);
  } catch (const UsageError& e) {
    throw std::invalid_argument(e.what());
  } catch (const Error& e) {
    ctx.values["error"] = e.what();
    ctx.table << "error: " << e.what() << "\n";
    ctx.fail(kExitInvariant);
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  CommandResult result;
  result.report["command"] = command;
  result.report["inputs"] = ctx.inputs;
  result.report["seed"] = config.seed.value_or(1);
  result.report["values"] = ctx.values;
  result.report["verdicts"] = ctx.verdicts;
  // Timing breaks byte-for-byte reproducibility, so it is opt-in.
  if (config.timing.value_or(false)) {
    result.report["elapsed_ms"] = std::round(elapsed.count() * 1000.0) / 1000.0;
  } else {
    result.report["elapsed_ms"] = nullptr;
  }
  ctx.table << "elapsed " << std::fixed << std::setprecision(3) << elapsed.count() << " ms\n";
  result.table = ctx.table.str();
  result.exit_code = ctx.exit_code;
  return result;
}

}  // namespace quotdt::cli
