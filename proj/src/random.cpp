#include "gaugecount/random.hpp"

#include "gaugecount/errors.hpp"

namespace gaugecount {

namespace {

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

GaussianRational random_gaussian_rational(Rng& rng, bool real_only) {
  Rational re = random_rational(rng);
  if (real_only) return GaussianRational(re);
  return GaussianRational(re, random_rational(rng));
}

SignatureVector random_signature(Rng& rng, unsigned d, bool real_only) {
  std::vector<GaussianRational> x;
  for (unsigned k = 0; k <= d; ++k) x.push_back(random_gaussian_rational(rng, real_only));
  return SignatureVector(std::move(x));
}

Matrix random_invertible(Rng& rng, unsigned q) {
  while (true) {
    Matrix m(q, q);
    for (unsigned r = 0; r < q; ++r)
      for (unsigned c = 0; c < q; ++c) m(r, c) = random_gaussian_rational(rng);
    try {
      (void)m.inverse();
      return m;
    } catch (const InputError&) {
    }
  }
}

Multigraph random_loop_free_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(2, max_vertices), ne(1, max_edges);
  const std::size_t n = nv(rng);
  const std::size_t m = ne(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Edge> edges;
  while (edges.size() < m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u != v) edges.push_back({u, v});
  }
  return Multigraph(n, std::move(edges));
}

NormalFactorGraph random_factor_graph(Rng& rng, const Multigraph& g, unsigned q) {
  std::vector<LocalFunction> fs;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    LocalFunction f(g.degree(v), q);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = random_gaussian_rational(rng);
    fs.push_back(std::move(f));
  }
  return NormalFactorGraph(g, q, std::move(fs));
}

GaugePair random_gauges(Rng& rng, std::size_t edges, unsigned q) {
  std::vector<Matrix> ms;
  for (std::size_t e = 0; e < edges; ++e) ms.push_back(random_invertible(rng, q));
  return gauges_from_invertible(ms);
}

}  // namespace gaugecount
