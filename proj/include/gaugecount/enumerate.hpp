#pragma once

// Gray-code walks over the 2^m edge bitmasks of a multigraph.
//
// Each edge toggles a per-vertex integer state: for subsets the state is the
// subgraph degree, for orientations it is the out-degree. Consecutive Gray codes
// differ in one bit, so every step is an O(1) update of two vertex states. The
// index range is split into contiguous blocks, each re-seeded from gray(begin),
// and partial results are reduced in block order.

#include <bit>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <vector>

#include "gaugecount/graph.hpp"

namespace gaugecount {

/// Setting the bit adds (da, db) to the states of (a, b); clearing subtracts them.
struct EdgeToggle {
  Vertex a;
  int da;
  Vertex b;
  int db;
};

struct WalkSpec {
  std::size_t vertices = 0;
  std::vector<EdgeToggle> toggles;  // one per edge, bit e <-> toggles[e]
  std::vector<int> base;            // states for the all-zero mask
};

/// State = number of selected incident edges (a selected loop counts twice).
WalkSpec subset_walk(const Multigraph& g);
/// State = out-degree; bit e = 0 orients edge e from its first to its second endpoint.
/// Throws InputError on loops.
WalkSpec orientation_walk(const Multigraph& g);

inline constexpr std::uint64_t gray_code(std::uint64_t i) { return i ^ (i >> 1); }

/// Calls visit(state, mask) for Gray indices begin..end-1 in order.
template <typename Visitor>
void walk_gray_block(const WalkSpec& spec, std::uint64_t begin, std::uint64_t end, Visitor&& visit) {
  if (begin >= end) return;
  std::vector<int> state = spec.base;
  std::uint64_t mask = gray_code(begin);
  for (std::size_t e = 0; e < spec.toggles.size(); ++e) {
    if ((mask >> e) & 1u) {
      const auto& t = spec.toggles[e];
      state[t.a] += t.da;
      state[t.b] += t.db;
    }
  }
  for (std::uint64_t i = begin;;) {
    visit(static_cast<const std::vector<int>&>(state), mask);
    if (++i == end) break;
    const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
    mask ^= std::uint64_t{1} << bit;
    const auto& t = spec.toggles[bit];
    const int sign = ((mask >> bit) & 1u) ? 1 : -1;
    state[t.a] += sign * t.da;
    state[t.b] += sign * t.db;
  }
}

/// Runs block(begin, end) over `workers` contiguous slices of [0, total) and
/// returns the partial results in slice order. Exceptions from any worker are
/// rethrown after all workers finish.
template <typename Partial, typename Block>
std::vector<Partial> run_blocks(std::uint64_t total, unsigned workers, Block&& block) {
  if (workers <= 1 || total < 4096) return {block(std::uint64_t{0}, total)};
  const std::uint64_t slices = std::min<std::uint64_t>(workers, total);
  std::vector<Partial> partials(slices);
  std::vector<std::exception_ptr> errors(slices);
  std::vector<std::thread> threads;
  threads.reserve(slices);
  for (std::uint64_t s = 0; s < slices; ++s) {
    const std::uint64_t begin = total * s / slices;
    const std::uint64_t end = total * (s + 1) / slices;
    threads.emplace_back([&, s, begin, end] {
      try {
        partials[s] = block(begin, end);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return partials;
}

/// Sum over all masks of prod_v table[v][state[v]]. Ring needs +=, *, == and
/// construction from 0 and 1. Terms with a zero factor are skipped via a running
/// count of vertices whose current entry is zero.
template <typename Ring>
Ring weighted_walk_sum(const WalkSpec& spec, const std::vector<std::vector<Ring>>& tables, unsigned workers) {
  const std::size_t m = spec.toggles.size();
  const std::uint64_t total = std::uint64_t{1} << m;
  const Ring zero(0);
  auto block = [&](std::uint64_t begin, std::uint64_t end) {
    Ring sum(0);
    walk_gray_block(spec, begin, end, [&](const std::vector<int>& state, std::uint64_t) {
      Ring term(1);
      for (std::size_t v = 0; v < spec.vertices; ++v) {
        const Ring& x = tables[v][static_cast<std::size_t>(state[v])];
        if (x == zero) return;
        term = term * x;
      }
      sum += term;
    });
    return sum;
  };
  auto partials = run_blocks<Ring>(total, workers, block);
  Ring result(0);
  for (auto& p : partials) result += p;
  return result;
}

}  // namespace gaugecount
