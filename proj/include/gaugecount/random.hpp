#pragma once

#include <random>

#include "gaugecount/factor_graph.hpp"
#include "gaugecount/graph.hpp"
#include "gaugecount/signatures.hpp"

namespace gaugecount {

using Rng = std::mt19937_64;

/// Small-height Gaussian rational: numerators in [-9, 9], denominators in [1, 6].
GaussianRational random_gaussian_rational(Rng& rng, bool real_only = false);
SignatureVector random_signature(Rng& rng, unsigned d, bool real_only = false);
/// Random invertible q x q Gaussian-rational matrix.
Matrix random_invertible(Rng& rng, unsigned q);
/// Loop-free multigraph with 1..max_edges edges on 2..max_vertices vertices.
Multigraph random_loop_free_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges);
/// Factor graph with dense random tables over alphabet q.
NormalFactorGraph random_factor_graph(Rng& rng, const Multigraph& g, unsigned q);
/// Per-edge (M^T)^{-1}, M gauges for random invertible M.
GaugePair random_gauges(Rng& rng, std::size_t edges, unsigned q);

}  // namespace gaugecount
