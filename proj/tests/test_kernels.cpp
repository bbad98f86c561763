#include <doctest.h>

#include <random>

#include "finc/graph.hpp"
#include "finc/incidence.hpp"
#include "finc/kernels.hpp"
#include "finc/rng.hpp"

using namespace finc;
using kernels::Mode;

// The OpenMP kernels must match the serial reference bit for bit.

TEST_CASE("adjacency build: serial == parallel") {
  for (const char* des : {"3", "7", "3^2", "13"}) {
    Field f = Field::parse(des);
    IncidenceGraph gs = IncidenceGraph::build(f, 2, Mode::Serial);
    IncidenceGraph gp = IncidenceGraph::build(f, 2, Mode::Parallel);
    CHECK(std::equal(gs.bits().begin(), gs.bits().end(), gp.bits().begin()));
  }
}

TEST_CASE("gram identity: serial == parallel") {
  Field f = Field::make(7, 1);
  IncidenceGraph g = IncidenceGraph::build(f, 2);
  CHECK(kernels::gram_identity(g.bits(), g.n(), g.words(), g.mu(),
                               g.lambda_squared(), Mode::Serial));
  CHECK(kernels::gram_identity(g.bits(), g.n(), g.words(), g.mu(),
                               g.lambda_squared(), Mode::Parallel));
  // both modes must also agree on a falsified identity
  CHECK_FALSE(kernels::gram_identity(g.bits(), g.n(), g.words(), g.mu() + 1,
                                     g.lambda_squared(), Mode::Serial));
  CHECK_FALSE(kernels::gram_identity(g.bits(), g.n(), g.words(), g.mu() + 1,
                                     g.lambda_squared(), Mode::Parallel));
}

TEST_CASE("pair count: serial == parallel") {
  Field f = Field::make(11, 1);
  IncidenceGraph g = IncidenceGraph::build(f, 2);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    auto b64 = sample_distinct(rng, g.n(), log_uniform_size(rng, g.n()));
    auto c64 = sample_distinct(rng, g.n(), log_uniform_size(rng, g.n()));
    std::vector<std::uint32_t> B(b64.begin(), b64.end());
    std::vector<std::uint64_t> cmask(g.words(), 0);
    for (auto v : c64) cmask[v >> 6] |= std::uint64_t{1} << (v & 63);
    CHECK(kernels::pair_count(g.bits(), g.words(), B, cmask, Mode::Serial) ==
          kernels::pair_count(g.bits(), g.words(), B, cmask, Mode::Parallel));
  }
}

TEST_CASE("brute incidence count: serial == parallel") {
  Field f = Field::make(3, 2);
  std::mt19937_64 rng(8);
  auto all_lines = enumerate_affine_lines(f);
  for (int t = 0; t < 30; ++t) {
    auto pcodes = sample_distinct(rng, f.q() * f.q(),
                                  log_uniform_size(rng, f.q() * f.q()));
    std::vector<AffinePoint> pts;
    for (auto c : pcodes) pts.push_back({c / f.q(), c % f.q()});
    auto lidx = sample_distinct(rng, all_lines.size(),
                                log_uniform_size(rng, all_lines.size()));
    std::vector<AffineLine> lines;
    for (auto i : lidx) lines.push_back(all_lines[i]);
    CHECK(kernels::incidence_count_brute(f, pts, lines, Mode::Serial) ==
          kernels::incidence_count_brute(f, pts, lines, Mode::Parallel));
  }
}
