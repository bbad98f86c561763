#pragma once

#include <random>
#include <vector>

#include "finc/graph.hpp"
#include "finc/incidence.hpp"
#include "finc/rng.hpp"
#include "finc/sumproduct.hpp"

namespace finc {

// Seeded instance generators: uniform without replacement, sizes
// log-uniform between 1 and the maximum.

inline PointSet random_point_set(const Field& f, std::mt19937_64& rng) {
  const std::uint64_t max = f.q() * f.q();
  auto codes = sample_distinct(rng, max, log_uniform_size(rng, max));
  std::vector<AffinePoint> pts;
  pts.reserve(codes.size());
  for (auto c : codes) pts.push_back({c / f.q(), c % f.q()});
  return PointSet::of(f, std::move(pts));
}

inline LineSet random_line_set(const Field& f, std::mt19937_64& rng) {
  auto all = enumerate_affine_lines(f);
  auto idx = sample_distinct(rng, all.size(), log_uniform_size(rng, all.size()));
  std::vector<AffineLine> lines;
  lines.reserve(idx.size());
  for (auto i : idx) lines.push_back(all[i]);
  return LineSet::of(f, std::move(lines));
}

inline std::vector<std::uint32_t> random_vertex_subset(const IncidenceGraph& g,
                                                       std::mt19937_64& rng) {
  auto v = sample_distinct(rng, g.n(), log_uniform_size(rng, g.n()));
  return {v.begin(), v.end()};
}

inline SubsetA random_subset(const Field& f, std::uint64_t max_size,
                             std::mt19937_64& rng, bool allow_zero) {
  const std::uint64_t universe = allow_zero ? f.q() : f.q() - 1;
  max_size = std::min(max_size, universe);
  auto picks = sample_distinct(rng, universe, log_uniform_size(rng, max_size));
  std::vector<Elt> elems;
  elems.reserve(picks.size());
  for (auto p : picks) elems.push_back(allow_zero ? p : p + 1);
  return SubsetA::of(f, std::move(elems));
}

}  // namespace finc
