#include "gaugecount/counting.hpp"

#include <algorithm>
#include <bit>

#include "gaugecount/enumerate.hpp"
#include "gaugecount/errors.hpp"

namespace gaugecount {

WalkSpec subset_walk(const Multigraph& g) {
  WalkSpec spec;
  spec.vertices = g.vertex_count();
  spec.base.assign(g.vertex_count(), 0);
  for (const auto& e : g.edges()) spec.toggles.push_back({e.u, 1, e.v, 1});
  return spec;
}

WalkSpec orientation_walk(const Multigraph& g) {
  if (g.has_loops()) throw InputError("orientations are not defined for graphs with loops");
  WalkSpec spec;
  spec.vertices = g.vertex_count();
  spec.base.assign(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++spec.base[e.u];
    spec.toggles.push_back({e.u, -1, e.v, 1});
  }
  return spec;
}

namespace {

struct Overflow {};

/// Gaussian integer in __int128 with overflow detection on every operation.
struct Gauss128 {
  __int128 re = 0;
  __int128 im = 0;

  Gauss128() = default;
  Gauss128(int v) : re(v) {}  // NOLINT
  Gauss128(__int128 r, __int128 i) : re(r), im(i) {}

  static __int128 add(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static __int128 sub(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static __int128 mul(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }

  friend Gauss128 operator*(const Gauss128& a, const Gauss128& b) {
    if (a.im == 0 && b.im == 0) return {mul(a.re, b.re), 0};
    return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
  }
  Gauss128& operator+=(const Gauss128& o) {
    re = add(re, o.re);
    im = add(im, o.im);
    return *this;
  }
  friend bool operator==(const Gauss128&, const Gauss128&) = default;
};

struct GaussZ {
  Integer re;
  Integer im;

  GaussZ() = default;
  GaussZ(int v) : re(v) {}  // NOLINT
  GaussZ(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

  friend GaussZ operator*(const GaussZ& a, const GaussZ& b) {
    if (sgn(a.im) == 0 && sgn(b.im) == 0) return {Integer(a.re * b.re), Integer(0)};
    return {Integer(a.re * b.re - a.im * b.im), Integer(a.re * b.im + a.im * b.re)};
  }
  GaussZ& operator+=(const GaussZ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend bool operator==(const GaussZ& a, const GaussZ& b) { return a.re == b.re && a.im == b.im; }
};

Integer from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer r = (hi << 64) + lo;
  return negative ? Integer(-r) : r;
}

void check_guard(std::size_t m, unsigned guard_bits) {
  if (m > guard_bits || m > 62)
    throw GuardExceeded("graph has " + std::to_string(m) + " edges; enumeration of 2^" +
                        std::to_string(m) + " masks exceeds the guard of 2^" + std::to_string(guard_bits));
}

void check_lengths(const Multigraph& g, const std::vector<SignatureVector>& w) {
  if (w.size() != g.vertex_count())
    throw InputError("expected " + std::to_string(g.vertex_count()) + " signature vectors, got " +
                     std::to_string(w.size()));
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (w[v].size() != g.degree(v) + 1u)
      throw InputError("signature at vertex " + std::to_string(v) + " has length " +
                       std::to_string(w[v].size()) + ", expected deg+1 = " + std::to_string(g.degree(v) + 1));
}

/// Exact sum over the walk. Each vertex table is cleared of denominators, the
/// walk runs in checked 128-bit Gaussian integers and is repeated with GMP
/// integers if anything overflows.
GaussianRational exact_walk_sum(const WalkSpec& spec, const std::vector<SignatureVector>& tables,
                                unsigned workers) {
  std::vector<std::vector<GaussZ>> scaled(tables.size());
  Integer denominator = 1;
  bool fits = true;
  for (std::size_t v = 0; v < tables.size(); ++v) {
    Integer lcm = 1;
    for (const auto& x : tables[v].entries()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.re().get_den_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.im().get_den_mpz_t());
    }
    denominator *= lcm;
    for (const auto& x : tables[v].entries()) {
      Integer re = x.re().get_num() * (lcm / x.re().get_den());
      Integer im = x.im().get_num() * (lcm / x.im().get_den());
      fits = fits && re.fits_slong_p() && im.fits_slong_p();
      scaled[v].emplace_back(std::move(re), std::move(im));
    }
  }

  GaussZ sum;
  bool done = false;
  if (fits) {
    std::vector<std::vector<Gauss128>> narrow(scaled.size());
    for (std::size_t v = 0; v < scaled.size(); ++v)
      for (const auto& x : scaled[v]) narrow[v].emplace_back(x.re.get_si(), x.im.get_si());
    try {
      Gauss128 r = weighted_walk_sum(spec, narrow, workers);
      sum = GaussZ(from_int128(r.re), from_int128(r.im));
      done = true;
    } catch (const Overflow&) {
    }
  }
  if (!done) sum = weighted_walk_sum(spec, scaled, workers);
  return GaussianRational(Rational(sum.re, denominator), Rational(sum.im, denominator));
}

void require_even_degrees(const Multigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0)
      throw InputError("vertex " + std::to_string(v) + " has odd degree " + std::to_string(g.degree(v)) +
                       "; the graph is not Eulerian");
}

Integer require_integer(const GaussianRational& z, const char* what) {
  if (!z.is_integer())
    throw InternalError(std::string(what) + " evaluated to the non-integer " + to_string(z));
  return z.re().get_num();
}

void require_cubic(const Multigraph& g) {
  if (g.has_loops()) throw InputError("cubic graph must be loop-free");
  if (regular_degree(g) != 3u) throw InputError("graph is not 3-regular");
  if (!is_connected(g)) throw InputError("graph is not connected");
}

}  // namespace

WeightAssignment uniform_weights(const Multigraph& g, const SignatureVector& x) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != x.degree())
      throw InputError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                       ", signature has degree " + std::to_string(x.degree()));
  return WeightAssignment(g.vertex_count(), x);
}

GaussianRational subgraph_poly_eval(const Multigraph& g, const WeightAssignment& w,
                                    const EnumerationOptions& opts) {
  check_guard(g.edge_count(), opts.guard_bits);
  check_lengths(g, w);
  return exact_walk_sum(subset_walk(g), w, opts.workers);
}

double subgraph_poly_eval(const Multigraph& g, const std::vector<std::vector<double>>& w,
                          const EnumerationOptions& opts) {
  check_guard(g.edge_count(), opts.guard_bits);
  if (w.size() != g.vertex_count()) throw InputError("need one signature vector per vertex");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (w[v].size() != g.degree(v) + 1u)
      throw InputError("signature at vertex " + std::to_string(v) + " must have length deg+1");
  return weighted_walk_sum<double>(subset_walk(g), w, opts.workers);
}

GaussianRational orientation_sum(const Multigraph& g, const OrientationWeights& y,
                                 const EnumerationOptions& opts) {
  WalkSpec spec = orientation_walk(g);
  check_guard(g.edge_count(), opts.guard_bits);
  check_lengths(g, y);
  return exact_walk_sum(spec, y, opts.workers);
}

std::vector<int> oriented_degrees(const Multigraph& g, std::uint64_t flipped) {
  if (g.has_loops()) throw InputError("orientations are not defined for graphs with loops");
  std::vector<int> d(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [tail, head] = g.edge(e);
    if ((flipped >> e) & 1u) std::swap(tail, head);
    ++d[tail];
    --d[head];
  }
  return d;
}

Integer count_eulerian_bruteforce(const Multigraph& g, const EnumerationOptions& opts) {
  require_even_degrees(g);
  OrientationWeights y;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<GaussianRational> indicator(g.degree(v) + 1);
    indicator[g.degree(v) / 2] = 1;  // out-degree = in-degree
    y.emplace_back(std::move(indicator));
  }
  return require_integer(orientation_sum(g, y, opts), "orientation count");
}

Integer count_eulerian_eval(const Multigraph& g, const EnumerationOptions& opts) {
  require_even_degrees(g);
  WeightAssignment w;
  for (Vertex v = 0; v < g.vertex_count(); ++v) w.push_back(s_vector(g.degree(v)));
  return require_integer(subgraph_poly_eval(g, w, opts), "F_G(s)");
}

Integer count_half_graphs_bruteforce(const Multigraph& g, const EnumerationOptions& opts) {
  require_even_degrees(g);
  const std::size_t m = g.edge_count();
  check_guard(m, opts.guard_bits);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> plain(n, 0), loops(n, 0);
  for (EdgeId e = 0; e < m; ++e) {
    const auto& [u, v] = g.edge(e);
    if (u == v) {
      loops[u] |= std::uint64_t{1} << e;
    } else {
      plain[u] |= std::uint64_t{1} << e;
      plain[v] |= std::uint64_t{1} << e;
    }
  }
  auto block = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) {
        const auto deg = std::popcount(mask & plain[v]) + 2 * std::popcount(mask & loops[v]);
        ok = 2u * static_cast<unsigned>(deg) == g.degree(v);
      }
      count += ok;
    }
    return count;
  };
  Integer total = 0;
  for (auto c : run_blocks<std::uint64_t>(std::uint64_t{1} << m, opts.workers, block))
    total += Integer(static_cast<unsigned long>(c));
  return total;
}

Integer count_half_graphs_eval(const Multigraph& g, const EnumerationOptions& opts) {
  require_even_degrees(g);
  WeightAssignment w;
  for (Vertex v = 0; v < g.vertex_count(); ++v) w.push_back(c_vector(g.degree(v)));
  return require_integer(subgraph_poly_eval(g, w, opts), "F_G(c)");
}

std::optional<Integer> count_half_graphs_krawtchouk(const Multigraph& g, const EnumerationOptions& opts) {
  require_even_degrees(g);
  auto d = regular_degree(g);
  if (!d) return std::nullopt;
  const Matrix k = krawtchouk_matrix(*d).rational();
  std::vector<GaussianRational> column;
  for (unsigned r = 0; r <= *d; ++r) column.push_back(k(r, *d / 2));
  return require_integer(subgraph_poly_eval(g, uniform_weights(g, SignatureVector(column)), opts),
                         "F_G(R_{pi/4} e_{d/2})");
}

DualityResult duality_check(const Multigraph& g, const WeightAssignment& w, const EnumerationOptions& opts) {
  if (g.has_loops()) throw InputError("duality needs a loop-free graph");
  check_guard(g.edge_count(), std::min(opts.guard_bits, opts.duality_guard_bits));
  check_lengths(g, w);
  DualityResult result;
  result.left = subgraph_poly_eval(g, w, opts);
  OrientationWeights y;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = static_cast<int>(g.degree(v));
    std::vector<GaussianRational> by_out(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) by_out[j] = q_coefficients(d, 2 * j - d).evaluate(w[v]);
    y.emplace_back(std::move(by_out));
  }
  result.right = orientation_sum(g, y, opts) * GaussianRational(pow2(-static_cast<int>(g.edge_count())));
  result.equal = result.left == result.right;
  return result;
}

CountReport schrijver_report(const Multigraph& g, const EnumerationOptions& opts) {
  require_even_degrees(g);
  CountReport report;
  report.graph = describe(g);
  report.quantity = "eulerian-orientations";
  report.method = Method::Evaluation;

  WeightAssignment s;
  for (Vertex v = 0; v < g.vertex_count(); ++v) s.push_back(s_vector(g.degree(v)));
  const Integer eps = count_eulerian_eval(g, opts);
  report.add_value("eulerian_orientations", Rational(eps));

  Rational bound = 1;
  GaussianRational empty_term(1), full_term(1);
  bool nonnegative = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const unsigned d = g.degree(v);
    Rational factor(binomial(d, d / 2), Integer(1));
    bound *= factor * pow2(-static_cast<int>(d / 2));
    empty_term *= s[v][0];
    full_term *= s[v][d];
    for (const auto& x : s[v].entries()) nonnegative = nonnegative && x.is_real() && sgn(x.re()) >= 0;
  }
  const Rational improved = 2 * bound;
  report.add_bound("schrijver", bound);
  report.add_bound("improved", improved);
  report.add_check("nonnegative_terms", nonnegative);
  report.add_check("extreme_terms_equal_bound", empty_term == bound && full_term == bound);
  if (g.edge_count() > 0) {
    report.add_check("improved_bound_holds", Rational(eps) >= improved);
    report.add_flag("improved_bound_tight", Rational(eps) == improved);
  } else {
    report.add_check("schrijver_bound_holds", Rational(eps) >= bound);
  }
  return report;
}

CountReport eulerian_vs_halfgraphs(const Multigraph& g, const EnumerationOptions& opts) {
  require_even_degrees(g);
  CountReport report;
  report.graph = describe(g);
  report.quantity = "eulerian-vs-half-graphs";
  report.method = Method::Evaluation;
  const Integer eps = count_eulerian_eval(g, opts);
  const Integer half = count_half_graphs_eval(g, opts);
  report.add_value("eulerian_orientations", Rational(eps));
  report.add_value("half_graphs", Rational(half));
  if (!g.has_loops()) report.add_check("eulerian_oracle_agrees", eps == count_eulerian_bruteforce(g, opts));
  report.add_check("half_graph_oracle_agrees", half == count_half_graphs_bruteforce(g, opts));
  const bool bipartite = is_bipartite(g);
  report.add_check("inequality_holds", eps >= half);
  report.add_check("equality_iff_bipartite", (eps == half) == bipartite);
  report.add_flag("bipartite", bipartite);
  report.add_flag("equal", eps == half);
  return report;
}

Rational cubic_closed_form(std::size_t n, int k) {
  const long idx = static_cast<long>(n / 2) - 2L * k;
  if (n % 2 != 0 || idx < 0 || idx > static_cast<long>(n)) return 0;
  Rational p(binomial(static_cast<unsigned>(n), static_cast<unsigned>(idx)), Integer(1));
  return p * pow2(1 - static_cast<int>(n));
}

CubicDistribution cubic_distribution(const Multigraph& g, const EnumerationOptions& opts) {
  require_cubic(g);
  const std::size_t m = g.edge_count();
  check_guard(m, opts.guard_bits);
  const std::size_t n = g.vertex_count();
  const WalkSpec spec = orientation_walk(g);

  using Histogram = std::vector<std::uint64_t>;  // index k + n
  auto block = [&](std::uint64_t begin, std::uint64_t end) {
    Histogram h(2 * n + 1, 0);
    walk_gray_block(spec, begin, end, [&](const std::vector<int>& out, std::uint64_t) {
      int diff = 0;
      for (int o : out) diff += (o == 3) - (o == 0);
      ++h[static_cast<std::size_t>(diff + static_cast<int>(n))];
    });
    return h;
  };
  Histogram total(2 * n + 1, 0);
  for (const auto& h : run_blocks<Histogram>(std::uint64_t{1} << m, opts.workers, block))
    for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];

  CubicDistribution result;
  result.vertices = n;
  result.match = true;
  const Rational scale = pow2(-static_cast<int>(m));
  for (std::size_t i = 0; i < total.size(); ++i) {
    const int k = static_cast<int>(i) - static_cast<int>(n);
    const Rational closed = cubic_closed_form(n, k);
    const Rational observed = Rational(Integer(static_cast<unsigned long>(total[i]))) * scale;
    if (total[i] != 0) {
      result.counts[k] = Integer(static_cast<unsigned long>(total[i]));
      result.enumerated[k] = observed;
    }
    if (sgn(closed) != 0) result.closed_form[k] = closed;
    result.match = result.match && observed == closed;
  }
  return result;
}

CubicIdentity cubic_hg_identity_check(const Multigraph& g, const Rational& tau, const EnumerationOptions& opts) {
  if (sgn(tau) == 0) throw InputError("tau must be non-zero");
  require_cubic(g);
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  CubicIdentity result;
  result.tau = tau;

  const Rational t = tau * tau * tau * tau;
  const Rational inv_t = 1 / t;
  // Out-degree 0 has oriented degree -3, out-degree 3 has +3.
  const SignatureVector y({GaussianRational(inv_t), 1, 1, GaussianRational(t)});
  result.orientation_side = orientation_sum(g, OrientationWeights(n, y), opts);

  const Rational half(1, 2);
  const GaussianRational a(half * (tau + 1 / tau));
  const GaussianRational b(Rational(0), half * (tau - 1 / tau));
  const SignatureVector x({a, 0, 0, b});
  const GaussianRational scale(pow2(static_cast<int>(m)));
  result.subgraph_side = scale * subgraph_poly_eval(g, WeightAssignment(n, x), opts);
  result.closed_form = scale * (a.pow(static_cast<unsigned>(n)) + b.pow(static_cast<unsigned>(n)));
  result.equal = result.orientation_side == result.subgraph_side;
  result.closed_form_equal = result.subgraph_side == result.closed_form;
  return result;
}

}  // namespace gaugecount
