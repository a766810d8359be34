#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gaugecount/graph.hpp"
#include "gaugecount/matrix.hpp"
#include "gaugecount/rational.hpp"

namespace gaugecount {

inline constexpr unsigned kDefaultGuardBits = 30;

/// Dense table f: {0..q-1}^arity -> Gaussian rationals.
///
/// The table is row-major with the first argument most significant. When attached
/// to a vertex, argument i is the value of the edge in slot i of
/// Multigraph::slots(v): incident edges in id order, a loop occupying two
/// consecutive slots that always receive the same value.
class LocalFunction {
 public:
  LocalFunction() = default;
  /// All-zero table.
  LocalFunction(unsigned arity, unsigned alphabet);
  /// Throws InputError unless table.size() == alphabet^arity.
  LocalFunction(unsigned arity, unsigned alphabet, std::vector<GaussianRational> table);

  /// Binary symmetric function: value by_weight[k] when exactly k arguments are 1.
  static LocalFunction symmetric(unsigned arity, std::span<const GaussianRational> by_weight);

  unsigned arity() const { return arity_; }
  unsigned alphabet() const { return q_; }
  std::size_t size() const { return table_.size(); }

  const GaussianRational& operator[](std::size_t index) const { return table_[index]; }
  GaussianRational& operator[](std::size_t index) { return table_[index]; }
  const GaussianRational& at(std::span<const unsigned> args) const;

  const std::vector<GaussianRational>& table() const { return table_; }

  friend bool operator==(const LocalFunction&, const LocalFunction&) = default;

 private:
  unsigned arity_ = 0;
  unsigned q_ = 2;
  std::vector<GaussianRational> table_{GaussianRational(0)};
};

/// A multigraph with one local function per vertex over a common alphabet.
///
/// `log2_scale` records a global factor 2^log2_scale that multiplies the raw
/// sum-product; gauge transformations with power-of-two normalisation adjust it
/// instead of storing irrational entries.
class NormalFactorGraph {
 public:
  /// Throws InputError unless every f_v has arity deg(v) and alphabet q.
  NormalFactorGraph(Multigraph g, unsigned alphabet, std::vector<LocalFunction> functions,
                    int log2_scale = 0);

  const Multigraph& graph() const { return g_; }
  unsigned alphabet() const { return q_; }
  const LocalFunction& function(Vertex v) const { return f_[v]; }
  const std::vector<LocalFunction>& functions() const { return f_; }
  int log2_scale() const { return log2_scale_; }

 private:
  Multigraph g_;
  unsigned q_;
  std::vector<LocalFunction> f_;
  int log2_scale_;
};

/// Binary factor graph whose f_v depends only on the number of incident ones.
NormalFactorGraph symmetric_factor_graph(const Multigraph& g,
                                         const std::vector<std::vector<GaussianRational>>& by_weight);

/// Gauge matrices for one edge (u, v) as stored: `at_first` is G_uv (applied at u),
/// `at_second` is G_vu (applied at v), both |Y| x |X|. The represented gauges are
/// 2^{-scale_exp/2} times the stored ones, so at_first^T * at_second = 2^scale_exp * Id.
struct EdgeGauge {
  Matrix at_first;
  Matrix at_second;
  int scale_exp = 0;
};

class GaugePair {
 public:
  /// Validates shapes and the transpose-product identity exactly; throws InputError.
  explicit GaugePair(std::vector<EdgeGauge> edges);

  std::size_t edge_count() const { return edges_.size(); }
  const EdgeGauge& edge(EdgeId e) const { return edges_[e]; }
  unsigned from_alphabet() const { return from_q_; }
  unsigned to_alphabet() const { return to_q_; }
  int total_scale_exp() const;

 private:
  std::vector<EdgeGauge> edges_;
  unsigned from_q_ = 0;
  unsigned to_q_ = 0;
};

GaugePair identity_gauges(std::size_t edges, unsigned alphabet);
/// Same (first, second) pair on every edge.
GaugePair uniform_gauges(std::size_t edges, const Matrix& first, const Matrix& second, int scale_exp = 0);
/// Per-edge (M^T)^{-1} at the first endpoint and M at the second.
GaugePair gauges_from_invertible(const std::vector<Matrix>& per_edge);
/// Orientation gauges: [[1,-i],[1,i]] at the tail (first endpoint) and
/// [[1,i],[1,-i]] at the head, stored unscaled with scale_exp 1 per edge.
GaugePair orientation_gauges(std::size_t edges);
/// Per-edge inverses; compose_gauges(gp, inverse_gauges(gp)) is the identity.
GaugePair inverse_gauges(const GaugePair& gp);

/// Apply `first`, then `second`: per-edge products second * first.
GaugePair compose_gauges(const GaugePair& first, const GaugePair& second);

/// Transformed factor graph over the gauge's target alphabet.
/// Throws InputError on a missing edge gauge, alphabet mismatch, or a loop.
NormalFactorGraph apply_gauge(const NormalFactorGraph& h, const GaugePair& gp);

/// Sum over all assignments of the product of local functions, without the
/// global 2^log2_scale factor. Guard: alphabet^m <= 2^guard_bits.
GaussianRational raw_partition_function(const NormalFactorGraph& h,
                                        unsigned guard_bits = kDefaultGuardBits);

/// Z(h) = 2^log2_scale * raw_partition_function(h).
GaussianRational partition_function(const NormalFactorGraph& h, unsigned guard_bits = kDefaultGuardBits);

}  // namespace gaugecount
