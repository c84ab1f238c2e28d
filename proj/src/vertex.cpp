#include "quotdt/vertex.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "quotdt/error.hpp"

namespace quotdt {

namespace {

std::atomic<unsigned> g_threads{0};

Exponent torus_exponent(int rank, const Vec3& a) {
  Exponent e(static_cast<std::size_t>(3 + rank), 0);
  for (std::size_t i = 0; i < 3; ++i) e[i] = a[i];
  return e;
}

// Character of a box in chart coordinates.
Exponent box_exponent(int rank, const ChartWeights& chart, const Box& b, BoxConvention conv) {
  const int sign = conv == BoxConvention::kCoordinate ? 1 : -1;
  Vec3 a{};
  for (std::size_t d = 0; d < 3; ++d) {
    a[d] = sign * (b.i * chart.tangent[0][d] + b.j * chart.tangent[1][d] +
                   b.k * chart.tangent[2][d]);
  }
  return torus_exponent(rank, a);
}

}  // namespace

ChartWeights ChartWeights::with_twists(const std::array<Vec3, 3>& tangent,
                                       const std::vector<Vec3>& twists) {
  ChartWeights c;
  c.tangent = tangent;
  const int r = static_cast<int>(twists.size());
  for (int j = 0; j < r; ++j) {
    Exponent e = torus_exponent(r, twists[static_cast<std::size_t>(j)]);
    e[static_cast<std::size_t>(3 + j)] = 1;
    c.colors.push_back(std::move(e));
  }
  return c;
}

ChartWeights ChartWeights::standard(int r) {
  return with_twists({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}},
                     std::vector<Vec3>(static_cast<std::size_t>(r), Vec3{0, 0, 0}));
}

std::int64_t det3(const std::array<Vec3, 3>& m) {
  auto x = [&](int i, int j) { return static_cast<std::int64_t>(m[i][j]); };
  return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) -
         x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
         x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
}

LaurentPoly chart_canonical_inverse(const ChartWeights& chart) {
  Vec3 k{};
  for (std::size_t d = 0; d < 3; ++d) {
    k[d] = -(chart.tangent[0][d] + chart.tangent[1][d] + chart.tangent[2][d]);
  }
  return LaurentPoly::monomial(torus_exponent(chart.rank(), k));
}

LaurentPoly vertex_character_unchecked(const ColoredPlanePartition& pt, const ChartWeights& chart,
                                       BoxConvention convention) {
  const int r = chart.rank();
  if (pt.rank() != r) {
    throw Error(ErrorKind::kRankMismatch, "fixed point has " + std::to_string(pt.rank()) +
                                              " colours, chart has " + std::to_string(r));
  }
  LaurentPoly f(r);
  LaurentPoly q(r);
  for (int j = 0; j < r; ++j) {
    const Exponent& w = chart.colors[static_cast<std::size_t>(j)];
    f.add_term(w, 1);
    for (const Box& b : pt.parts[static_cast<std::size_t>(j)].boxes()) {
      q.add_term(exponent_add(w, box_exponent(r, chart, b, convention)), 1);
    }
  }
  if (q.is_zero()) return LaurentPoly(r);

  LaurentPoly p = LaurentPoly::constant(r, 1);
  for (const Vec3& a : chart.tangent) {
    p *= LaurentPoly::constant(r, 1) - LaurentPoly::monomial(torus_exponent(r, a));
  }
  const LaurentPoly kinv = chart_canonical_inverse(chart);
  const LaurentPoly qbar = poly_dual(q);

  LaurentPoly t = poly_dual(f) * q;
  t -= qbar * f * kinv;
  t += qbar * q * p * kinv;
  return t;
}

VirtualCharacter vertex_character(const ColoredPlanePartition& pt, const ChartWeights& chart,
                                  BoxConvention convention) {
  LaurentPoly t = vertex_character_unchecked(pt, chart, convention);
  if (Integer c = t.constant_term(); c != 0) {
    throw Error(ErrorKind::kNonzeroFixedPart,
                "vertex character has constant term " + c.get_str());
  }
  return VirtualCharacter{std::move(t)};
}

Rational euler_inverse(const VirtualCharacter& ch, const EquivParams& params) {
  if (ch.value.constant_term() != 0) {
    throw Error(ErrorKind::kNonzeroFixedPart, "character has a fixed part");
  }
  Integer num = 1;
  Integer den = 1;
  Integer w;
  Integer pw;
  for (const auto& [e, c] : ch.value.terms()) {
    w = weight_value(e, params);
    if (w == 0) {
      throw Error(ErrorKind::kZeroWeight, "monomial evaluates to zero at " + params.to_string());
    }
    const unsigned long k = Integer(abs(c)).get_ui();
    mpz_pow_ui(pw.get_mpz_t(), w.get_mpz_t(), k);
    if (c < 0) num *= pw;
    else den *= pw;
  }
  return make_rational(num, den);
}

unsigned default_thread_count() {
  unsigned n = g_threads.load();
  if (n != 0) return n;
  if (const char* env = std::getenv("QUOTDT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

void set_default_thread_count(unsigned n) { g_threads.store(n); }

Rational chart_contribution(const ChartWeights& chart, int r, int n, const EquivParams& params,
                            BoxConvention convention, unsigned threads) {
  if (chart.rank() != r || params.rank() != r) {
    throw Error(ErrorKind::kRankMismatch, "chart, rank and parameters disagree");
  }
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative number of points");
  const auto points = enum_colored(n, r);
  if (threads == 0) threads = default_thread_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));

  auto sum_range = [&](std::size_t begin, std::size_t end) {
    Rational acc = 0;
    for (std::size_t i = begin; i < end; ++i) {
      acc += euler_inverse(vertex_character(points[i], chart, convention), params);
    }
    return acc;
  };
  if (threads == 1) return sum_range(0, points.size());

  // Contiguous chunks, reduced in chunk order.
  std::vector<Rational> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (points.size() + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      const std::size_t b = std::min(points.size(), w * chunk);
      const std::size_t e = std::min(points.size(), b + chunk);
      try {
        partial[w] = sum_range(b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Rational total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace quotdt
