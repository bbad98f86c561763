#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "finc/graph.hpp"
#include "finc/rng.hpp"

using namespace finc;

TEST_CASE("polarity graph at q=3") {
  IncidenceGraph g = IncidenceGraph::build(Field::make(3, 1), 2);
  CHECK(g.n() == 13);
  CHECK(g.degree() == 4);
  for (std::size_t i = 0; i < g.n(); ++i) CHECK(g.row_sum(i) == 4);
  CHECK(g.loop_count() == 4);

  SpectralCertificate cert = verify_spectral_identity(g);
  CHECK(cert.identity_holds);
  CHECK(cert.mu == 1);
  CHECK(cert.c == 3);
  REQUIRE(cert.numeric_second_eigenvalue.has_value());
  CHECK(*cert.numeric_second_eigenvalue ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("regularity across fields") {
  for (const char* des : {"2", "3", "2^2", "5", "7", "2^3", "3^2", "11", "13"}) {
    Field f = Field::parse(des);
    IncidenceGraph g = IncidenceGraph::build(f, 2);
    CHECK(g.n() == f.q() * f.q() + f.q() + 1);
    for (std::size_t i = 0; i < g.n(); ++i) CHECK(g.row_sum(i) == f.q() + 1);
    if (f.odd_characteristic()) CHECK(g.loop_count() == f.q() + 1);
    CHECK(verify_spectral_identity(g, /*with_spectrum=*/false).identity_holds);
  }
}

TEST_CASE("fano plane") {
  IncidenceGraph g = IncidenceGraph::build(Field::make(2, 1), 2);
  CHECK(g.n() == 7);
  CHECK(g.degree() == 3);
  // even q: loop count recorded, not asserted against q+1
  MESSAGE("q=2 loop count: ", g.loop_count());
}

TEST_CASE("loop counts at odd q") {
  CHECK(IncidenceGraph::build(Field::make(5, 1), 2).loop_count() == 6);
  CHECK(IncidenceGraph::build(Field::make(3, 2), 2).loop_count() == 10);
}

TEST_CASE("dimension 3") {
  IncidenceGraph g = IncidenceGraph::build(Field::make(3, 1), 3);
  CHECK(g.n() == 40);
  CHECK(g.degree() == 13);
  SpectralCertificate cert = verify_spectral_identity(g);
  CHECK(cert.identity_holds);
  CHECK(cert.mu == 4);
  CHECK(cert.c == 9);
  REQUIRE(cert.numeric_second_eigenvalue.has_value());
  CHECK(*cert.numeric_second_eigenvalue == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(IncidenceGraph::build(Field::make(101, 1), 2), SizeGuardError);
}

TEST_CASE("mixing on full and empty sets") {
  IncidenceGraph g = IncidenceGraph::build(Field::make(5, 1), 2);
  std::vector<std::uint32_t> all(g.n());
  for (std::uint32_t i = 0; i < g.n(); ++i) all[i] = i;

  BoundCertificate full = mixing_check(g, all, all);
  CHECK(full.observed == g.n() * g.degree());  // e(V,V) = nk
  CHECK(full.verdict);
  CHECK(full.observed * static_cast<std::uint64_t>(full.main_den) ==
        static_cast<std::uint64_t>(full.main_num));  // lhs = 0 exactly

  std::vector<std::uint32_t> empty;
  BoundCertificate none = mixing_check(g, empty, all);
  CHECK(none.observed == 0);
  CHECK(none.verdict);
}

TEST_CASE("mixing holds on random pairs and is symmetric") {
  IncidenceGraph g = IncidenceGraph::build(Field::make(7, 1), 2);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    auto bsize = log_uniform_size(rng, g.n());
    auto csize = log_uniform_size(rng, g.n());
    auto b64 = sample_distinct(rng, g.n(), bsize);
    auto c64 = sample_distinct(rng, g.n(), csize);
    std::vector<std::uint32_t> B(b64.begin(), b64.end());
    std::vector<std::uint32_t> C(c64.begin(), c64.end());
    BoundCertificate bc = mixing_check(g, B, C);
    BoundCertificate cb = mixing_check(g, C, B);
    CHECK(bc.verdict);
    CHECK(bc.observed == cb.observed);  // e(B,C) = e(C,B)
  }
  std::vector<std::uint32_t> bad{static_cast<std::uint32_t>(g.n())};
  CHECK_THROWS_AS(mixing_check(g, bad, bad), std::invalid_argument);
}

TEST_CASE("edge list export") {
  IncidenceGraph g = IncidenceGraph::build(Field::make(2, 1), 2);
  std::ostringstream os;
  g.write_edge_list(os);
  std::istringstream is(os.str());
  std::size_t edges = 0, loops = 0;
  std::size_t i, j;
  std::size_t prev_i = 0, prev_j = 0;
  bool first = true;
  while (is >> i >> j) {
    CHECK(i <= j);
    if (!first) CHECK(std::pair(prev_i, prev_j) < std::pair(i, j));
    first = false;
    prev_i = i;
    prev_j = j;
    ++edges;
    if (i == j) ++loops;
  }
  // sum of row sums nk counts loops once and off-diagonal edges twice
  CHECK(2 * (edges - loops) + loops == g.n() * g.degree());
  CHECK(loops == g.loop_count());
}
