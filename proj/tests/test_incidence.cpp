#include <doctest.h>

#include <random>

#include "finc/incidence.hpp"
#include "finc/rng.hpp"

using namespace finc;

namespace {

PointSet random_points(const Field& f, std::mt19937_64& rng) {
  std::uint64_t sz = log_uniform_size(rng, f.q() * f.q());
  auto codes = sample_distinct(rng, f.q() * f.q(), sz);
  std::vector<AffinePoint> pts;
  for (auto c : codes) pts.push_back({c / f.q(), c % f.q()});
  return PointSet::of(f, std::move(pts));
}

LineSet random_lines(const Field& f, std::mt19937_64& rng) {
  auto all = enumerate_affine_lines(f);
  std::uint64_t sz = log_uniform_size(rng, all.size());
  auto idx = sample_distinct(rng, all.size(), sz);
  std::vector<AffineLine> lines;
  for (auto i : idx) lines.push_back(all[i]);
  return LineSet::of(f, std::move(lines));
}

}  // namespace

TEST_CASE("incidence counts, closed forms") {
  for (std::uint64_t p : {3ull, 5ull}) {
    Field f = Field::make(p, 1);
    std::uint64_t q = f.q();
    // each of the q^2+q lines carries exactly q points
    CHECK(count_incidences(PointSet::full_grid(f), LineSet::all_lines(f)) ==
          q * q * q + q * q);
  }
  Field f5 = Field::make(5, 1);
  CHECK(count_incidences(PointSet::of(f5, {{0, 0}}),
                         LineSet::of(f5, {{false, 0, 0}})) == 1);
  CHECK(count_incidences(PointSet::of(f5, {}), LineSet::all_lines(f5)) == 0);
  CHECK(count_incidences(PointSet::full_grid(f5), LineSet::of(f5, {})) == 0);

  Field f7 = Field::make(7, 1);
  CHECK_THROWS_AS(count_incidences(PointSet::full_grid(f5),
                                   LineSet::all_lines(f7)),
                  std::invalid_argument);
}

TEST_CASE("brute and bucketed strategies agree") {
  for (const char* des : {"5", "7", "3^2"}) {
    Field f = Field::parse(des);
    std::mt19937_64 rng(7 + f.q());
    for (int t = 0; t < 100; ++t) {
      PointSet P = random_points(f, rng);
      LineSet L = random_lines(f, rng);
      CHECK(count_incidences(P, L, CountStrategy::Brute) ==
            count_incidences(P, L, CountStrategy::Bucketed));
    }
  }
}

TEST_CASE("monotonicity of the count") {
  Field f = Field::make(7, 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    PointSet P = random_points(f, rng);
    LineSet L = random_lines(f, rng);
    std::uint64_t base = count_incidences(P, L);
    std::vector<AffinePoint> more = P.pts;
    more.push_back({static_cast<Elt>(t % 7), static_cast<Elt>((t * 3) % 7)});
    CHECK(count_incidences(PointSet::of(f, more), L) >= base);
    std::vector<AffineLine> morel = L.lines;
    morel.push_back({false, static_cast<Elt>(t % 7), 0});
    CHECK(count_incidences(P, LineSet::of(f, morel)) >= base);
  }
}

TEST_CASE("theorem3 certificate") {
  Field f5 = Field::make(5, 1);
  BoundCertificate full =
      certify_theorem3(PointSet::full_grid(f5), LineSet::all_lines(f5));
  CHECK(full.observed == 150);
  CHECK(full.main_num == 25 * 30);
  CHECK(full.main_den == 5);
  CHECK(full.verdict);
  CHECK(full.verdict_exact);

  BoundCertificate single = certify_theorem3(
      PointSet::of(f5, {{1, 1}}), LineSet::of(f5, {{false, 0, 0}}));
  CHECK(single.observed <= 1);
  CHECK(single.verdict);

  for (const char* des : {"7", "3^2", "11"}) {
    Field f = Field::parse(des);
    std::mt19937_64 rng(f.q());
    for (int t = 0; t < 100; ++t) {
      BoundCertificate c = certify_theorem3(random_points(f, rng),
                                            random_lines(f, rng));
      CHECK(c.verdict);
      CHECK(c.verdict_exact);
    }
  }
}

TEST_CASE("corollary4 regimes") {
  Field f9 = Field::make(3, 2);
  // alpha=1.5, eps=0.5: N = 27, bound = 2*27^1.375
  PointSet P = PointSet::of(f9, [] {
    std::vector<AffinePoint> v;
    for (Elt x = 0; x < 5; ++x)
      for (Elt y = 0; y < 5; ++y) v.push_back({x, y});
    return v;
  }());
  LineSet L = LineSet::of(f9, [] {
    std::vector<AffineLine> v;
    for (Elt s = 0; s < 5; ++s)
      for (Elt t = 0; t < 5; ++t) v.push_back({false, s, t});
    return v;
  }());
  RegimeCertificate c = certify_corollary4(f9, 1.5, 0.5, P, L);
  CHECK(c.status == "ok");
  CHECK(c.bound == doctest::Approx(2.0 * std::pow(27.0, 1.375)));
  CHECK(c.verdict);
  CHECK(c.step1_holds);
  CHECK(c.step2_holds);

  // boundary alpha = 2 - eps: N^2/q = N^{3/2 - eps/4} exactly
  RegimeCertificate b = certify_corollary4(f9, 1.5, 0.5, P, L);
  CHECK(b.step1_lhs <= b.step1_rhs * (1 + 1e-9));

  RegimeCertificate out = certify_corollary4(f9, 0.5, 0.5, P, L);
  CHECK(out.status == "regime-out-of-range");
}

TEST_CASE("corollary4 boundary: |P| = |L| = N saturates the N^2/q step") {
  // alpha = 2 - eps with eps = 0.5: N = 27 and |P||L|/q meets N^2/q exactly
  Field f9 = Field::make(3, 2);
  std::vector<AffinePoint> pv;
  for (Elt x = 0; x < 3; ++x)
    for (Elt y = 0; y < 9; ++y) pv.push_back({x, y});
  std::vector<AffineLine> lv;
  for (Elt s = 0; s < 3; ++s)
    for (Elt t = 0; t < 9; ++t) lv.push_back({false, s, t});
  PointSet P = PointSet::of(f9, pv);
  LineSet L = LineSet::of(f9, lv);
  REQUIRE(P.size() == 27);
  REQUIRE(L.size() == 27);

  RegimeCertificate c = certify_corollary4(f9, 1.5, 0.5, P, L);
  CHECK(c.status == "ok");
  CHECK(c.step1_holds);
  CHECK(c.step2_holds);
  CHECK(c.verdict);
  BoundCertificate t3 = certify_theorem3(P, L);
  CHECK(static_cast<double>(t3.main_num) / static_cast<double>(t3.main_den) ==
        doctest::Approx(c.step1_lhs));  // |P||L|/q == N^2/q
}

TEST_CASE("duality route matches the direct count") {
  for (const char* des : {"5", "7", "3^2"}) {
    Field f = Field::parse(des);
    IncidenceGraph g = IncidenceGraph::build(f, 2);
    std::mt19937_64 rng(31 + f.q());
    for (int t = 0; t < 50; ++t) {
      PointSet P = random_points(f, rng);
      LineSet L = random_lines(f, rng);
      auto B = embed_point_indices(g, P);
      auto C = dual_line_indices(g, L);
      BoundCertificate mix = mixing_check(g, B, C);
      CHECK(mix.observed == count_incidences(P, L));
    }
  }
}

TEST_CASE("hyperplane bound in dimension 3") {
  Field f3 = Field::make(3, 1);
  IncidenceGraph g = IncidenceGraph::build(f3, 3);
  std::vector<std::uint32_t> all(g.n());
  for (std::uint32_t i = 0; i < g.n(); ++i) all[i] = i;
  BoundCertificate full = certify_hyperplane_bound(g, all, all);
  CHECK(full.observed == 40 * 13);  // every point on k = 13 hyperplanes
  CHECK(full.verdict);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    auto b64 = sample_distinct(rng, g.n(), log_uniform_size(rng, g.n()));
    auto c64 = sample_distinct(rng, g.n(), log_uniform_size(rng, g.n()));
    std::vector<std::uint32_t> B(b64.begin(), b64.end());
    std::vector<std::uint32_t> C(c64.begin(), c64.end());
    BoundCertificate c = certify_hyperplane_bound(g, B, C);
    CHECK(c.verdict);
    CHECK(c.verdict_exact);
  }
}
