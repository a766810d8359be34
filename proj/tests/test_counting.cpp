#include "doctest.h"

#include <cmath>
#include <random>

#include "gaugecount/counting.hpp"
#include "gaugecount/errors.hpp"
#include "gaugecount/random.hpp"
#include "oracles.hpp"

using namespace gaugecount;

namespace {

using GR = GaussianRational;

GR q(long p, long d = 1) { return GR(Rational(p, d)); }
SignatureVector vec(std::vector<GR> x) { return SignatureVector(std::move(x)); }

WeightAssignment uniform(const Multigraph& g, std::vector<GR> x) { return WeightAssignment(g.vertex_count(), vec(x)); }

GR value(const CountReport& r, const std::string& name) {
  for (const auto& [k, v] : r.values)
    if (k == name) return v;
  for (const auto& [k, v] : r.bounds)
    if (k == name) return v;
  FAIL("missing value " << name);
  return {};
}

bool flag(const CountReport& r, const std::string& name) {
  for (const auto& [k, v] : r.flags)
    if (k == name) return v;
  FAIL("missing flag " << name);
  return false;
}

WeightAssignment random_weights(Rng& rng, const Multigraph& g) {
  WeightAssignment w;
  for (Vertex v = 0; v < g.vertex_count(); ++v) w.push_back(random_signature(rng, g.degree(v)));
  return w;
}

// The expanded K4 polynomial, coefficient by coefficient.
GR k4_polynomial(const GR& x0, const GR& x1, const GR& x2, const GR& x3) {
  auto p = [](const GR& x, unsigned e) { return x.pow(e); };
  return p(x0, 4) + GR(6) * p(x0, 2) * p(x1, 2) + GR(3) * p(x1, 4) + GR(12) * x0 * p(x1, 2) * x2 +
         GR(12) * p(x1, 2) * p(x2, 2) + GR(4) * x0 * p(x2, 3) + GR(3) * p(x2, 4) + GR(4) * p(x1, 3) * x3 +
         GR(12) * x1 * p(x2, 2) * x3 + GR(6) * p(x2, 2) * p(x3, 2) + p(x3, 4);
}

const std::vector<const char*> kEulerianCorpus = {"C3", "C4", "C5", "C6", "C7", "C8", "K5", "octahedron", "K4,4", "C3+C3"};

}  // namespace

TEST_CASE("subgraph polynomial examples") {
  auto k4 = complete_graph(4);
  CHECK(subgraph_poly_eval(k4, uniform(k4, {0, 1, 0, 0})) == GR(3));
  CHECK(subgraph_poly_eval(k4, uniform(k4, {1, 1, 1, 1})) == GR(64));
  Multigraph two_loops(1, {{0, 0}, {0, 0}});
  CHECK(subgraph_poly_eval(two_loops, uniform(two_loops, {1, 0, 1, 0, 1})) == GR(4));
  CHECK(subgraph_poly_eval(two_loops, uniform(two_loops, {q(1, 3), 5, 7, 11, 13})) == q(1, 3) + GR(14) + GR(13));
  CHECK(subgraph_poly_eval(Multigraph(3, {}), uniform(Multigraph(3, {}), {q(2)})) == GR(8));
}

TEST_CASE("K4 polynomial matches its expansion at random points") {
  Rng rng(3);
  auto k4 = complete_graph(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_signature(rng, 3);
    CHECK(subgraph_poly_eval(k4, uniform(k4, x.entries())) == k4_polynomial(x[0], x[1], x[2], x[3]));
  }
}

TEST_CASE("subgraph polynomial agrees with the naive oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_loop_free_graph(rng, 6, 11);
    if (trial % 3 == 0) g = disjoint_union(g, Multigraph(1, {{0, 0}}));
    auto w = random_weights(rng, g);
    CHECK(subgraph_poly_eval(g, w) == oracle::subgraph_poly(g, w));
  }
}

TEST_CASE("subgraph polynomial equals a symmetric factor graph partition function") {
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_loop_free_graph(rng, 5, 8);
    auto w = random_weights(rng, g);
    std::vector<std::vector<GR>> by_weight;
    for (const auto& x : w) by_weight.push_back(x.entries());
    CHECK(subgraph_poly_eval(g, w) == partition_function(symmetric_factor_graph(g, by_weight)));
  }
}

TEST_CASE("large integer weights take the arbitrary-precision path") {
  auto g = complete_graph(5);
  GR big(Rational(Integer("123456789012345678901234567"), Integer(7)), Rational(Integer("-98765432109876543210"), Integer(3)));
  auto w = uniform(g, {big, q(-5, 11), big * big, q(1, 13), big});
  CHECK(subgraph_poly_eval(g, w) == oracle::subgraph_poly(g, w));
}

TEST_CASE("floating point evaluation matches exact") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_loop_free_graph(rng, 6, 10);
    auto w = random_weights(rng, g);
    for (auto& x : w)
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = GR(x[k].re());
    std::vector<std::vector<double>> wf;
    for (const auto& x : w) {
      wf.emplace_back();
      for (const auto& e : x.entries()) wf.back().push_back(e.re().get_d());
    }
    double exact = subgraph_poly_eval(g, w).re().get_d();
    CHECK(subgraph_poly_eval(g, wf) == doctest::Approx(exact).epsilon(1e-9));
  }
}

TEST_CASE("subgraph polynomial errors") {
  auto g = cycle_graph(3);
  CHECK_THROWS_AS(subgraph_poly_eval(g, uniform(g, {1, 1})), InputError);
  CHECK_THROWS_AS(subgraph_poly_eval(g, WeightAssignment(2, vec({1, 1, 1}))), InputError);
  EnumerationOptions tight;
  tight.guard_bits = 2;
  CHECK_THROWS_AS(subgraph_poly_eval(g, uniform(g, {1, 1, 1}), tight), GuardExceeded);
  CHECK_THROWS_AS(uniform_weights(g, vec({1, 1, 1, 1})), InputError);
}

TEST_CASE("orientation sums") {
  auto c3 = cycle_graph(3);
  CHECK(orientation_sum(c3, uniform(c3, {0, 1, 0})) == GR(2));
  auto k4 = complete_graph(4);
  CHECK(orientation_sum(k4, uniform(k4, {1, 1, 1, 1})) == GR(64));
  auto no_source_sink = uniform(k4, {0, 1, 1, 0});
  CHECK(orientation_sum(k4, no_source_sink) == GR(oracle::orientation_sum(k4, no_source_sink)));
  CHECK(orientation_sum(k4, no_source_sink) == GR(24));
  CHECK_THROWS_AS(orientation_sum(Multigraph(1, {{0, 0}}), uniform(Multigraph(1, {{0, 0}}), {1, 1, 1})), InputError);

  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_loop_free_graph(rng, 6, 11);
    auto y = random_weights(rng, g);
    CHECK(orientation_sum(g, y) == oracle::orientation_sum(g, y));
  }
}

TEST_CASE("oriented degrees") {
  auto c3 = cycle_graph(3);
  CHECK(oriented_degrees(c3, 0) == std::vector<int>{0, 0, 0});
  auto k4 = complete_graph(4);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    auto d = oriented_degrees(k4, mask);
    auto out = oracle::out_degrees(k4, mask);
    for (Vertex v = 0; v < 4; ++v) CHECK(d[v] == 2 * static_cast<int>(out[v]) - 3);
  }
}

TEST_CASE("Eulerian orientation examples") {
  CHECK(count_eulerian_bruteforce(cycle_graph(3)) == 2);
  CHECK(count_eulerian_bruteforce(cycle_graph(4)) == 2);
  CHECK(count_eulerian_eval(cycle_graph(3)) == 2);
  CHECK(count_eulerian_eval(generate("C3+C3")) == 4);
  CHECK(count_eulerian_eval(complete_graph(5)) == 24);
  CHECK(count_eulerian_bruteforce(complete_graph(5)) == 24);
  CHECK(count_eulerian_eval(generate("octahedron")) == 38);
  CHECK(count_eulerian_eval(generate("K4,4")) == 90);
  CHECK(count_eulerian_eval(Multigraph(2, {})) == 1);
}

TEST_CASE("half-graph examples") {
  CHECK(count_half_graphs_bruteforce(cycle_graph(4)) == 2);
  CHECK(count_half_graphs_eval(cycle_graph(4)) == 2);
  CHECK(count_half_graphs_eval(cycle_graph(3)) == 0);
  CHECK(count_half_graphs_bruteforce(complete_graph(5)) == 12);
  CHECK(count_half_graphs_eval(complete_graph(5)) == 12);
  CHECK(count_half_graphs_krawtchouk(complete_graph(5)) == Integer(12));
  CHECK_FALSE(count_half_graphs_krawtchouk(generate("C3+K5")).has_value());
  CHECK(count_half_graphs_eval(generate("octahedron")) == 20);
  CHECK(count_half_graphs_eval(generate("K4,4")) == 90);
}

TEST_CASE("counts agree with naive oracles on the corpus") {
  for (const char* spec : kEulerianCorpus) {
    CAPTURE(spec);
    auto g = generate(spec);
    const Integer eps(oracle::eulerian_orientations(g));
    const Integer half(oracle::half_graphs(g));
    CHECK(count_eulerian_bruteforce(g) == eps);
    CHECK(count_eulerian_eval(g) == eps);
    CHECK(count_half_graphs_bruteforce(g) == half);
    CHECK(count_half_graphs_eval(g) == half);
    if (regular_degree(g)) CHECK(count_half_graphs_krawtchouk(g) == half);
  }
}

TEST_CASE("counts agree with naive oracles on random Eulerian multigraphs") {
  Rng rng(31);
  int tested = 0;
  for (int trial = 0; tested < 40 && trial < 5000; ++trial) {
    auto g = random_loop_free_graph(rng, 6, 12);
    if (!is_eulerian(g)) continue;
    ++tested;
    CHECK(count_eulerian_eval(g) == count_eulerian_bruteforce(g));
    CHECK(count_eulerian_eval(g) == Integer(oracle::eulerian_orientations(g)));
    CHECK(count_half_graphs_eval(g) == Integer(oracle::half_graphs(g)));
  }
  CHECK(tested == 40);
}

TEST_CASE("loops in evaluation paths") {
  Multigraph one_loop(1, {{0, 0}});
  Multigraph two_loops(1, {{0, 0}, {0, 0}});
  CHECK(count_eulerian_eval(one_loop) == 2);
  CHECK(count_eulerian_eval(two_loops) == 4);
  CHECK(count_half_graphs_eval(one_loop) == 0);
  CHECK(count_half_graphs_eval(two_loops) == 2);
  CHECK(count_half_graphs_bruteforce(two_loops) == 2);
  CHECK_THROWS_AS(count_eulerian_bruteforce(one_loop), InputError);
}

TEST_CASE("counting preconditions") {
  CHECK_THROWS_AS(count_eulerian_eval(complete_graph(4)), InputError);
  CHECK_THROWS_AS(count_eulerian_bruteforce(complete_graph(4)), InputError);
  CHECK_THROWS_AS(count_half_graphs_eval(complete_graph(4)), InputError);
  CHECK_THROWS_AS(count_half_graphs_bruteforce(complete_graph(4)), InputError);
  EnumerationOptions tight;
  tight.guard_bits = 9;
  CHECK_THROWS_AS(count_eulerian_eval(complete_graph(5), tight), GuardExceeded);
  CHECK_THROWS_AS(count_eulerian_bruteforce(complete_graph(5), tight), GuardExceeded);
}

TEST_CASE("worker count does not change results") {
  EnumerationOptions one, many;
  many.workers = 4;
  for (const char* spec : {"K5", "K4,4", "octahedron", "C3+C3", "K7"}) {
    auto g = generate(spec);
    CHECK(count_eulerian_eval(g, one) == count_eulerian_eval(g, many));
    CHECK(count_eulerian_bruteforce(g, one) == count_eulerian_bruteforce(g, many));
    CHECK(count_half_graphs_eval(g, one) == count_half_graphs_eval(g, many));
  }
  Rng rng(37);
  auto g = generate("K4,4");
  auto w = random_weights(rng, g);
  CHECK(subgraph_poly_eval(g, w, one) == subgraph_poly_eval(g, w, many));
  CHECK(orientation_sum(g, w, one) == orientation_sum(g, w, many));
}

TEST_CASE("duality examples") {
  auto c3 = cycle_graph(3);
  auto r = duality_check(c3, uniform(c3, {1, 0, 1}));
  CHECK(r.left == GR(2));
  CHECK(r.right == GR(2));
  CHECK(r.equal);
  auto k4 = complete_graph(4);
  auto z = duality_check(k4, uniform(k4, {0, 0, 0, 0}));
  CHECK(z.left == GR(0));
  CHECK(z.right == GR(0));
  CHECK_THROWS_AS(duality_check(Multigraph(1, {{0, 0}}), uniform(Multigraph(1, {{0, 0}}), {1, 1, 1})), InputError);
  EnumerationOptions tight;
  tight.duality_guard_bits = 5;
  CHECK_THROWS_AS(duality_check(k4, uniform(k4, {1, 1, 1, 1}), tight), GuardExceeded);
}

TEST_CASE("duality holds exactly for random Gaussian-rational weights") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = trial < 10 ? complete_graph(4) : random_loop_free_graph(rng, 6, 10);
    auto r = duality_check(g, random_weights(rng, g));
    CHECK(r.equal);
    CHECK(r.left == r.right);
  }
}

TEST_CASE("product lower bound report") {
  auto c4 = schrijver_report(cycle_graph(4));
  CHECK(c4.ok());
  CHECK(value(c4, "eulerian_orientations") == GR(2));
  CHECK(value(c4, "schrijver") == GR(1));
  CHECK(value(c4, "improved") == GR(2));
  CHECK(flag(c4, "improved_bound_tight"));

  auto k5 = schrijver_report(complete_graph(5));
  CHECK(k5.ok());
  CHECK(value(k5, "improved") == q(243, 16));
  CHECK_FALSE(flag(k5, "improved_bound_tight"));

  auto cc = schrijver_report(generate("C3+C3"));
  CHECK(cc.ok());
  CHECK(value(cc, "eulerian_orientations") == GR(4));
  CHECK(value(cc, "improved") == GR(2));

  CHECK(schrijver_report(Multigraph(3, {})).ok());
  CHECK_THROWS_AS(schrijver_report(complete_graph(4)), InputError);
}

TEST_CASE("every subset term at s is nonnegative and the extreme terms equal the product bound") {
  for (const char* spec : {"C4", "K5", "octahedron", "C3+C3", "K4,4"}) {
    CAPTURE(spec);
    auto g = generate(spec);
    WeightAssignment s;
    Rational bound = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      s.push_back(s_vector(g.degree(v)));
      bound *= Rational(binomial(g.degree(v), g.degree(v) / 2)) * pow2(-static_cast<int>(g.degree(v) / 2));
    }
    const std::uint64_t full = (std::uint64_t{1} << g.edge_count()) - 1;
    bool nonnegative = true;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      auto d = oracle::subset_degrees(g, mask);
      GR term(1);
      for (Vertex v = 0; v < g.vertex_count(); ++v) term *= s[v][d[v]];
      nonnegative = nonnegative && term.is_real() && sgn(term.re()) >= 0;
      if (mask == 0 || mask == full) CHECK(term == GR(bound));
    }
    CHECK(nonnegative);
  }
}

TEST_CASE("Eulerian orientations versus half-graphs") {
  auto c4 = eulerian_vs_halfgraphs(cycle_graph(4));
  CHECK(c4.ok());
  CHECK(flag(c4, "equal"));
  auto c3 = eulerian_vs_halfgraphs(cycle_graph(3));
  CHECK(c3.ok());
  CHECK(value(c3, "half_graphs") == GR(0));
  CHECK_FALSE(flag(c3, "equal"));
  auto k5 = eulerian_vs_halfgraphs(complete_graph(5));
  CHECK(k5.ok());
  CHECK(value(k5, "half_graphs") == GR(12));
  CHECK(value(k5, "eulerian_orientations") == GR(24));
  for (const char* spec : kEulerianCorpus) {
    CAPTURE(spec);
    auto g = generate(spec);
    auto r = eulerian_vs_halfgraphs(g);
    CHECK(r.ok());
    CHECK(flag(r, "equal") == is_bipartite(g));
  }
}

TEST_CASE("cubic closed form") {
  CHECK(cubic_closed_form(4, 0) == Rational(3, 4));
  CHECK(cubic_closed_form(4, 1) == Rational(1, 8));
  CHECK(cubic_closed_form(4, -1) == Rational(1, 8));
  CHECK(cubic_closed_form(4, 2) == 0);
  CHECK(cubic_closed_form(6, 0) == Rational(5, 8));
  CHECK(cubic_closed_form(6, 1) == Rational(3, 16));
  for (std::size_t n = 4; n <= 20; n += 2) {
    Rational total = 0;
    for (int k = -static_cast<int>(n); k <= static_cast<int>(n); ++k) total += cubic_closed_form(n, k);
    CHECK(total == 1);
  }
}

TEST_CASE("cubic distribution matches enumeration") {
  for (const char* spec : {"K4", "K3,3", "petersen"}) {
    CAPTURE(spec);
    auto g = generate(spec);
    auto d = cubic_distribution(g);
    CHECK(d.match);
    CHECK(d.vertices == g.vertex_count());
    auto hist = oracle::cubic_histogram(g);
    Rational total = 0;
    Integer first_moment = 0;
    for (const auto& [k, c] : d.counts) {
      CHECK(c == Integer(hist[k]));
      first_moment += Integer(k) * c;
    }
    for (const auto& [k, p] : d.closed_form) {
      total += p;
      CHECK(d.enumerated.at(k) == p);
    }
    CHECK(total == 1);
    CHECK(first_moment == 0);
  }
  auto k4 = cubic_distribution(complete_graph(4));
  CHECK(k4.enumerated.at(0) == Rational(3, 4));
  CHECK(k4.enumerated.at(1) == Rational(1, 8));
  CHECK(k4.enumerated.at(-1) == Rational(1, 8));
}

TEST_CASE("cubic distribution preconditions") {
  CHECK_THROWS_AS(cubic_distribution(cycle_graph(4)), InputError);
  CHECK_THROWS_AS(cubic_distribution(generate("K4+K4")), InputError);
  CHECK_THROWS_AS(cubic_hg_identity_check(complete_graph(4), 0), InputError);
}

TEST_CASE("cubic orientation identity") {
  auto k4 = complete_graph(4);
  auto one = cubic_hg_identity_check(k4, 1);
  CHECK(one.orientation_side == GR(64));
  CHECK(one.subgraph_side == GR(64));
  CHECK(one.equal);
  CHECK(one.closed_form_equal);

  auto two = cubic_hg_identity_check(k4, 2);
  CHECK(two.equal);
  CHECK(two.closed_form_equal);
  // t = 16: 48 orientations with n+ = n-, 8 with one extra source, 8 with one extra sink.
  std::vector<SignatureVector> y(4, vec({q(1, 16), 1, 1, q(16)}));
  CHECK(two.orientation_side == oracle::orientation_sum(k4, y));
  CHECK(two.orientation_side == q(353, 2));

  for (const char* spec : {"K4", "K3,3", "petersen"})
    for (long tau : {1L, 2L, 3L, -2L}) {
      CAPTURE(spec);
      CAPTURE(tau);
      auto r = cubic_hg_identity_check(generate(spec), tau);
      CHECK(r.equal);
      CHECK(r.closed_form_equal);
    }
  auto frac = cubic_hg_identity_check(generate("K3,3"), Rational(2, 3));
  CHECK(frac.equal);
  CHECK(frac.closed_form_equal);
}

TEST_CASE("rotation invariance for regular graphs") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (const char* spec : {"C5", "K4", "K5", "K3,3", "octahedron", "K4,4", "petersen"}) {
    CAPTURE(spec);
    auto g = generate(spec);
    const unsigned d = *regular_degree(g);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> x(d + 1);
      for (auto& v : x) v = unit(rng);
      const double base = subgraph_poly_eval(g, std::vector<std::vector<double>>(g.vertex_count(), x));
      for (int a = 0; a < 5; ++a) {
        auto rx = rotation_matrix(d, angle(rng)).apply(x);
        const double rotated = subgraph_poly_eval(g, std::vector<std::vector<double>>(g.vertex_count(), rx));
        CHECK(std::abs(rotated - base) <= 1e-9 * (1 + std::abs(base)));
      }
    }
  }
}

TEST_CASE("exact invariance under the Krawtchouk matrix") {
  Rng rng(47);
  for (const char* spec : {"K4", "C6", "K5", "octahedron", "K4,4", "K3,3"}) {
    CAPTURE(spec);
    auto g = generate(spec);
    const unsigned d = *regular_degree(g);
    auto k = rotation_quarter_pi(d, 2).rational();
    for (int trial = 0; trial < 3; ++trial) {
      auto x = random_signature(rng, d);
      CHECK(subgraph_poly_eval(g, uniform_weights(g, apply(k, x))) == subgraph_poly_eval(g, uniform_weights(g, x)));
      if (d % 2 == 0) {
        auto kq = krawtchouk_matrix(d).rational();
        CHECK(subgraph_poly_eval(g, uniform_weights(g, apply(kq, x))) == subgraph_poly_eval(g, uniform_weights(g, x)));
      }
    }
  }
  for (const char* spec : {"octahedron", "K4,4", "K5"}) {
    auto g = generate(spec);
    CHECK(subgraph_poly_eval(g, uniform(g, {0, 0, 1, 0, 0})) ==
          subgraph_poly_eval(g, uniform(g, {q(3, 2), 0, q(-1, 2), 0, q(3, 2)})));
  }
}
