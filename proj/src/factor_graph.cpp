#include "gaugecount/factor_graph.hpp"

#include <bit>
#include <cmath>

#include "gaugecount/errors.hpp"

namespace gaugecount {

namespace {

std::size_t table_size(unsigned arity, unsigned q) {
  std::size_t size = 1;
  for (unsigned i = 0; i < arity; ++i) size *= q;
  return size;
}

void check_guard(std::size_t m, unsigned q, unsigned guard_bits) {
  const double bits = static_cast<double>(m) * std::log2(static_cast<double>(q));
  if (bits > static_cast<double>(guard_bits) + 1e-9)
    throw GuardExceeded("enumeration of " + std::to_string(q) + "^" + std::to_string(m) +
                        " assignments exceeds the guard of 2^" + std::to_string(guard_bits));
}

}  // namespace

LocalFunction::LocalFunction(unsigned arity, unsigned alphabet)
    : arity_(arity), q_(alphabet), table_(table_size(arity, alphabet)) {
  if (alphabet == 0) throw InputError("alphabet must be non-empty");
}

LocalFunction::LocalFunction(unsigned arity, unsigned alphabet, std::vector<GaussianRational> table)
    : arity_(arity), q_(alphabet), table_(std::move(table)) {
  if (alphabet == 0) throw InputError("alphabet must be non-empty");
  if (table_.size() != table_size(arity, alphabet))
    throw InputError("local function table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(table_size(arity, alphabet)));
}

LocalFunction LocalFunction::symmetric(unsigned arity, std::span<const GaussianRational> by_weight) {
  if (by_weight.size() != arity + 1u)
    throw InputError("symmetric signature needs arity+1 = " + std::to_string(arity + 1) + " values");
  LocalFunction f(arity, 2);
  for (std::size_t idx = 0; idx < f.size(); ++idx) f.table_[idx] = by_weight[std::popcount(idx)];
  return f;
}

const GaussianRational& LocalFunction::at(std::span<const unsigned> args) const {
  if (args.size() != arity_) throw InputError("wrong number of arguments to local function");
  std::size_t idx = 0;
  for (unsigned a : args) {
    if (a >= q_) throw InputError("argument outside the alphabet");
    idx = idx * q_ + a;
  }
  return table_[idx];
}

NormalFactorGraph::NormalFactorGraph(Multigraph g, unsigned alphabet,
                                     std::vector<LocalFunction> functions, int log2_scale)
    : g_(std::move(g)), q_(alphabet), f_(std::move(functions)), log2_scale_(log2_scale) {
  if (f_.size() != g_.vertex_count())
    throw InputError("need one local function per vertex");
  for (Vertex v = 0; v < g_.vertex_count(); ++v) {
    if (f_[v].arity() != g_.degree(v))
      throw InputError("local function at vertex " + std::to_string(v) + " has arity " +
                       std::to_string(f_[v].arity()) + " but degree is " +
                       std::to_string(g_.degree(v)));
    if (f_[v].alphabet() != q_)
      throw InputError("local function at vertex " + std::to_string(v) + " uses another alphabet");
  }
}

NormalFactorGraph symmetric_factor_graph(const Multigraph& g,
                                         const std::vector<std::vector<GaussianRational>>& by_weight) {
  if (by_weight.size() != g.vertex_count()) throw InputError("need one signature per vertex");
  std::vector<LocalFunction> fs;
  fs.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    fs.push_back(LocalFunction::symmetric(g.degree(v), by_weight[v]));
  return NormalFactorGraph(g, 2, std::move(fs));
}

GaugePair::GaugePair(std::vector<EdgeGauge> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) return;
  from_q_ = static_cast<unsigned>(edges_.front().at_first.cols());
  to_q_ = static_cast<unsigned>(edges_.front().at_first.rows());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& g = edges_[e];
    for (const Matrix* m : {&g.at_first, &g.at_second})
      if (m->rows() != to_q_ || m->cols() != from_q_)
        throw InputError("gauge on edge " + std::to_string(e) + " has shape " +
                         std::to_string(m->rows()) + "x" + std::to_string(m->cols()) +
                         ", expected " + std::to_string(to_q_) + "x" + std::to_string(from_q_));
    Matrix expected = Matrix::identity(from_q_);
    expected *= GaussianRational(pow2(g.scale_exp));
    if (g.at_first.transpose() * g.at_second != expected)
      throw InputError("gauge on edge " + std::to_string(e) +
                       " violates G_uv^T G_vu = 2^k Id");
  }
}

int GaugePair::total_scale_exp() const {
  int total = 0;
  for (const auto& g : edges_) total += g.scale_exp;
  return total;
}

GaugePair identity_gauges(std::size_t edges, unsigned alphabet) {
  return uniform_gauges(edges, Matrix::identity(alphabet), Matrix::identity(alphabet));
}

GaugePair uniform_gauges(std::size_t edges, const Matrix& first, const Matrix& second, int scale_exp) {
  return GaugePair(std::vector<EdgeGauge>(edges, EdgeGauge{first, second, scale_exp}));
}

GaugePair gauges_from_invertible(const std::vector<Matrix>& per_edge) {
  std::vector<EdgeGauge> edges;
  edges.reserve(per_edge.size());
  for (const auto& m : per_edge) edges.push_back({m.transpose().inverse(), m, 0});
  return GaugePair(std::move(edges));
}

GaugePair orientation_gauges(std::size_t edges) {
  const auto i = GaussianRational::i();
  const Matrix tail{{1, -i}, {1, i}};
  const Matrix head{{1, i}, {1, -i}};
  return uniform_gauges(edges, tail, head, 1);
}

GaugePair inverse_gauges(const GaugePair& gp) {
  std::vector<EdgeGauge> edges;
  edges.reserve(gp.edge_count());
  for (EdgeId e = 0; e < gp.edge_count(); ++e) {
    const auto& g = gp.edge(e);
    // Stored product A^T B = 2^k Id gives (A^{-1})^T B^{-1} = 2^{-k} Id.
    edges.push_back({g.at_first.inverse(), g.at_second.inverse(), -g.scale_exp});
  }
  return GaugePair(std::move(edges));
}

GaugePair compose_gauges(const GaugePair& first, const GaugePair& second) {
  if (first.edge_count() != second.edge_count())
    throw InputError("gauge pairs cover different edge sets");
  if (first.edge_count() != 0 && second.from_alphabet() != first.to_alphabet())
    throw InputError("inner alphabet mismatch when composing gauges");
  std::vector<EdgeGauge> edges;
  edges.reserve(first.edge_count());
  for (EdgeId e = 0; e < first.edge_count(); ++e) {
    const auto& a = first.edge(e);
    const auto& b = second.edge(e);
    edges.push_back({b.at_first * a.at_first, b.at_second * a.at_second, a.scale_exp + b.scale_exp});
  }
  return GaugePair(std::move(edges));
}

NormalFactorGraph apply_gauge(const NormalFactorGraph& h, const GaugePair& gp) {
  const Multigraph& g = h.graph();
  if (gp.edge_count() != g.edge_count())
    throw InputError("gauge pair covers " + std::to_string(gp.edge_count()) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  if (g.has_loops()) throw InputError("gauge transformations on loops are not supported");
  const unsigned from = h.alphabet();
  const unsigned to = gp.edge_count() == 0 ? from : gp.to_alphabet();
  if (gp.edge_count() != 0 && gp.from_alphabet() != from)
    throw InputError("gauge source alphabet does not match the factor graph");

  std::vector<LocalFunction> out;
  out.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& slots = g.slots(v);
    const unsigned k = static_cast<unsigned>(slots.size());
    // Contract one slot at a time; dims[i] is the current alphabet of slot i.
    std::vector<unsigned> dims(k, from);
    std::vector<GaussianRational> table = h.function(v).table();
    for (unsigned i = 0; i < k; ++i) {
      const EdgeGauge& eg = gp.edge(slots[i]);
      const Matrix& m = g.edge(slots[i]).u == v ? eg.at_first : eg.at_second;
      std::size_t outer = 1, inner = 1;
      for (unsigned j = 0; j < i; ++j) outer *= dims[j];
      for (unsigned j = i + 1; j < k; ++j) inner *= dims[j];
      std::vector<GaussianRational> next(outer * to * inner);
      for (std::size_t a = 0; a < outer; ++a)
        for (unsigned sigma = 0; sigma < from; ++sigma)
          for (std::size_t b = 0; b < inner; ++b) {
            const auto& x = table[(a * from + sigma) * inner + b];
            if (x.is_zero()) continue;
            for (unsigned tau = 0; tau < to; ++tau) {
              const auto& w = m(tau, sigma);
              if (!w.is_zero()) next[(a * to + tau) * inner + b] += w * x;
            }
          }
      table = std::move(next);
      dims[i] = to;
    }
    out.emplace_back(k, to, std::move(table));
  }
  return NormalFactorGraph(g, to, std::move(out), h.log2_scale() - gp.total_scale_exp());
}

GaussianRational raw_partition_function(const NormalFactorGraph& h, unsigned guard_bits) {
  const Multigraph& g = h.graph();
  const std::size_t m = g.edge_count();
  const unsigned q = h.alphabet();
  check_guard(m, q, guard_bits);

  std::vector<unsigned> sigma(m, 0);
  GaussianRational total;
  while (true) {
    GaussianRational term(1);
    for (Vertex v = 0; v < g.vertex_count() && !term.is_zero(); ++v) {
      std::size_t idx = 0;
      for (EdgeId e : g.slots(v)) idx = idx * q + sigma[e];
      term *= h.function(v)[idx];
    }
    total += term;
    // Mixed-radix increment over X^E.
    std::size_t e = 0;
    while (e < m && ++sigma[e] == q) sigma[e++] = 0;
    if (e == m) break;
  }
  return total;
}

GaussianRational partition_function(const NormalFactorGraph& h, unsigned guard_bits) {
  return raw_partition_function(h, guard_bits) * GaussianRational(pow2(h.log2_scale()));
}

}  // namespace gaugecount
