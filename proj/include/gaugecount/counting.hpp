#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gaugecount/factor_graph.hpp"
#include "gaugecount/graph.hpp"
#include "gaugecount/rational.hpp"
#include "gaugecount/report.hpp"
#include "gaugecount/signatures.hpp"

namespace gaugecount {

struct EnumerationOptions {
  /// Refuse to enumerate more than 2^guard_bits subsets or orientations.
  unsigned guard_bits = kDefaultGuardBits;
  /// duality_check enumerates both sides; it has its own, tighter limit.
  unsigned duality_guard_bits = 20;
  unsigned workers = 1;
};

/// One SignatureVector per vertex; vector v has deg(v)+1 entries.
using WeightAssignment = std::vector<SignatureVector>;

/// Per-vertex weights for orientation sums, indexed by out-degree j in 0..deg(v).
/// The oriented degree (out minus in) is 2j - deg(v).
using OrientationWeights = std::vector<SignatureVector>;

/// Same signature on every vertex; throws InputError unless g is regular of that degree.
WeightAssignment uniform_weights(const Multigraph& g, const SignatureVector& x);

/// F_G(x) = sum over edge subsets A of prod_v x^v_{d_A(v)}. A selected loop adds 2.
GaussianRational subgraph_poly_eval(const Multigraph& g, const WeightAssignment& w,
                                    const EnumerationOptions& opts = {});
double subgraph_poly_eval(const Multigraph& g, const std::vector<std::vector<double>>& w,
                          const EnumerationOptions& opts = {});

/// Sum over all 2^m orientations of prod_v y^v[out-degree(v)]. Loops are rejected.
GaussianRational orientation_sum(const Multigraph& g, const OrientationWeights& y,
                                 const EnumerationOptions& opts = {});

/// Out-degree minus in-degree per vertex; bit e of `flipped` reverses edge e,
/// whose stored orientation is first endpoint -> second endpoint.
std::vector<int> oriented_degrees(const Multigraph& g, std::uint64_t flipped);

Integer count_eulerian_bruteforce(const Multigraph& g, const EnumerationOptions& opts = {});
/// F_G at s^(deg v) per vertex; the exact result must be an integer.
Integer count_eulerian_eval(const Multigraph& g, const EnumerationOptions& opts = {});

/// Subsets with d_A(v) = deg(v)/2 everywhere, counted directly.
Integer count_half_graphs_bruteforce(const Multigraph& g, const EnumerationOptions& opts = {});
/// F_G at c^(deg v) per vertex.
Integer count_half_graphs_eval(const Multigraph& g, const EnumerationOptions& opts = {});
/// Regular g only: F_G at column d/2 of the Krawtchouk matrix. nullopt when g is not regular.
std::optional<Integer> count_half_graphs_krawtchouk(const Multigraph& g, const EnumerationOptions& opts = {});

struct DualityResult {
  GaussianRational left;   // F_G(w)
  GaussianRational right;  // 2^-m sum_O prod_v Q_(d_O(v))(w_v)
  bool equal = false;
};

DualityResult duality_check(const Multigraph& g, const WeightAssignment& w, const EnumerationOptions& opts = {});

/// Eulerian count against the product bound and twice the product bound.
CountReport schrijver_report(const Multigraph& g, const EnumerationOptions& opts = {});

/// Eulerian orientations against half-graphs; equal exactly when g is bipartite.
CountReport eulerian_vs_halfgraphs(const Multigraph& g, const EnumerationOptions& opts = {});

struct CubicDistribution {
  std::size_t vertices = 0;
  std::map<int, Integer> counts;        // orientations with n_+ - n_- = k
  std::map<int, Rational> enumerated;   // counts / 2^m
  std::map<int, Rational> closed_form;  // C(n, n/2 - 2k) / 2^(n-1)
  bool match = false;
};

/// Closed-form probability that n_+ - n_- = k for a connected cubic graph on n vertices.
Rational cubic_closed_form(std::size_t n, int k);

/// Exact distribution of (#out-degree-3 vertices) - (#in-degree-3 vertices) over
/// uniformly random orientations of a connected cubic graph.
CubicDistribution cubic_distribution(const Multigraph& g, const EnumerationOptions& opts = {});

struct CubicIdentity {
  Rational tau;
  GaussianRational orientation_side;  // H_G(1/t, 1, 1, t), t = tau^4
  GaussianRational subgraph_side;     // 2^m F_G(a, 0, 0, b)
  GaussianRational closed_form;       // 2^m (a^n + b^n)
  bool equal = false;
  bool closed_form_equal = false;
};

CubicIdentity cubic_hg_identity_check(const Multigraph& g, const Rational& tau,
                                      const EnumerationOptions& opts = {});

}  // namespace gaugecount
