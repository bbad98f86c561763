#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "finc/rng.hpp"
#include "finc/sumproduct.hpp"

using namespace finc;

TEST_CASE("sum and product sets") {
  Field f5 = Field::make(5, 1);
  SubsetA a = SubsetA::of(f5, {1, 2, 3});
  CHECK(sum_set(a) == std::vector<Elt>{0, 1, 2, 3, 4});
  CHECK(product_set(a) == std::vector<Elt>{1, 2, 3, 4});

  SubsetA zero = SubsetA::of(f5, {0});
  CHECK(sum_set(zero) == std::vector<Elt>{0});
  CHECK(product_set(zero) == std::vector<Elt>{0});

  Field f7 = Field::make(7, 1);
  SubsetA full = SubsetA::of(f7, f7.elements());
  CHECK(sum_set(full).size() == 7);
  CHECK(product_set(full).size() == 7);

  CHECK_THROWS_AS(SubsetA::of(f5, {}), std::invalid_argument);
  CHECK_THROWS_AS(SubsetA::of(f5, {5}), std::invalid_argument);
}

TEST_CASE("elekes construction") {
  Field f5 = Field::make(5, 1);
  ElekesSystem one = elekes_construct(SubsetA::of(f5, {1}));
  CHECK(one.points.pts == std::vector<AffinePoint>{{2, 1}});
  CHECK(one.lines.size() == 1);
  CHECK(count_incidences(one.points, one.lines) == 1);

  // 0 in A: the b = 0 lines all coincide as y = 0
  Field f13 = Field::make(13, 1);
  SubsetA withzero = SubsetA::of(f13, {0, 1, 2, 3});
  ElekesSystem sys = elekes_construct(withzero);
  CHECK(sys.raw_line_count == 16);
  CHECK(sys.dedup_line_count == 4 * 3 + 1);

  // |P| = |A+A||A.A|
  SubsetA a = SubsetA::of(f13, {1, 2, 4});
  ElekesSystem s2 = elekes_construct(a);
  CHECK(s2.points.size() == sum_set(a).size() * product_set(a).size());
  CHECK(s2.raw_line_count == 9);
  CHECK(s2.dedup_line_count == 9);
}

TEST_CASE("elekes witness property, exhaustive for small A") {
  Field f = Field::make(13, 1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto sample = sample_distinct(rng, 13, 1 + t % 6);
    SubsetA a = SubsetA::of(f, {sample.begin(), sample.end()});
    ElekesSystem sys = elekes_construct(a);
    for (Elt x : a.elems)
      for (Elt b : a.elems)
        for (Elt c : a.elems) {
          AffinePoint w{f.add(x, c), f.mul(b, c)};
          CHECK(std::binary_search(sys.points.pts.begin(),
                                   sys.points.pts.end(), w));
          CHECK(on_line(f, w, AffineLine{false, b, f.neg(f.mul(x, b))}));
        }
  }
}

TEST_CASE("elekes incidence floor") {
  Field f7 = Field::make(7, 1);
  BoundCertificate c1 = certify_elekes(SubsetA::of(f7, {1, 2, 4}));
  CHECK(c1.observed >= 27);
  CHECK(c1.verdict);

  BoundCertificate c2 = certify_elekes(SubsetA::of(f7, {1}));
  CHECK(c2.observed == 1);

  Field f11 = Field::make(11, 1);
  BoundCertificate c3 = certify_elekes(SubsetA::of(f11, {1, 2, 3, 4, 5}));
  CHECK(c3.observed >= 125);
  CHECK(c3.verdict);

  BoundCertificate cz = certify_elekes(SubsetA::of(f11, {0, 1, 2}));
  CHECK(cz.status != "ok");  // collapse documented, floor not asserted
}

TEST_CASE("theorem5 report") {
  Field f7 = Field::make(7, 1);
  SumProductReport full = certify_theorem5(SubsetA::of(f7, f7.elements()));
  CHECK(full.m == 7);
  CHECK(full.n == 7);
  CHECK(full.lhs == 49);
  CHECK(full.theorem5_verdict);
  CHECK(full.lower_bound_verdict);
  CHECK(full.quadratic_step_holds);
  CHECK(full.regime == "high");

  SumProductReport r = certify_theorem5(SubsetA::of(f7, {1, 2, 3}));
  CHECK(r.theorem5_verdict);
  CHECK(r.lower_bound_verdict);
  CHECK(r.a <= r.m);
  CHECK(r.m <= std::min<std::uint64_t>(7, r.a * (r.a + 1) / 2));
  CHECK(r.n <= std::min<std::uint64_t>(7, r.a * (r.a + 1) / 2));

  Field f4 = Field::make(2, 2);
  CHECK_THROWS_AS(certify_theorem5(SubsetA::of(f4, {1, 2})),
                  std::invalid_argument);
  SumProductReport even = certify_theorem5(SubsetA::of(f4, {1, 2}), true);
  CHECK(even.non_theorem);
}

TEST_CASE("theorem5 exhaustive over F_7, |A| <= 3") {
  Field f = Field::make(7, 1);
  int count = 0;
  for (unsigned mask = 1; mask < (1u << 7); ++mask) {
    if (std::popcount(mask) > 3) continue;
    std::vector<Elt> elems;
    for (unsigned i = 0; i < 7; ++i)
      if (mask & (1u << i)) elems.push_back(i);
    SumProductReport r = certify_theorem5(SubsetA::of(f, elems));
    CHECK(r.theorem5_verdict);
    CHECK(r.lower_bound_verdict);
    CHECK(r.quadratic_step_holds);
    ++count;
  }
  CHECK(count == 7 + 21 + 35);
}

TEST_CASE("regime classification") {
  Field f = Field::make(13, 1);
  CHECK(certify_theorem5(SubsetA::of(f, {1, 2, 3})).regime == "below-sqrt");
  CHECK(certify_theorem5(SubsetA::of(f, {1, 2, 3, 4})).regime == "mid");
  auto e = f.elements();
  CHECK(certify_theorem5(SubsetA::of(f, {e.begin(), e.begin() + 8})).regime ==
        "high");
  // |A|^2 == q at q = 9, |A| = 3
  Field f9 = Field::make(3, 2);
  CHECK(certify_theorem5(SubsetA::of(f9, {1, 2, 3})).regime == "boundary-sqrt");
}

TEST_CASE("sweep families") {
  Field f13 = Field::make(13, 1);
  auto interval = experiment_sweep(f13, Family::Interval, {3}, 10, 42);
  REQUIRE(interval.size() == 10);
  for (const auto& r : interval) {
    CHECK(r.a == 3);
    CHECK(r.m == 5);  // non-wrapping interval: |I+I| = 2|I|-1
    CHECK(r.family == "interval");
  }

  Field f9 = Field::make(3, 2);
  auto subfield = experiment_sweep(f9, Family::Subfield, {3}, 2, 1);
  for (const auto& r : subfield) {
    CHECK(r.a == 3);
    CHECK(r.m == 3);  // F_3 closed under both operations
    CHECK(r.n == 3);
  }

  auto subgroup = experiment_sweep(f13, Family::Subgroup, {4}, 2, 1);
  for (const auto& r : subgroup) {
    CHECK(r.a == 4);   // unique subgroup of order 4 in F_13^*
    CHECK(r.n == 4);   // multiplicatively closed
  }

  CHECK(experiment_sweep(f13, Family::UniformRandom, {4}, 0, 0).empty());
  CHECK_THROWS_AS(experiment_sweep(f9, Family::Interval, {3}, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(experiment_sweep(f13, Family::Subfield, {3}, 1, 0),
                  std::invalid_argument);
  Field f4 = Field::make(2, 2);
  CHECK_THROWS_AS(experiment_sweep(f4, Family::UniformRandom, {2}, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("sweep determinism") {
  Field f = Field::make(11, 1);
  auto a = experiment_sweep(f, Family::UniformRandom, {2, 5}, 8, 777);
  auto b = experiment_sweep(f, Family::UniformRandom, {2, 5}, 8, 777);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].m == b[i].m);
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].max_mn == b[i].max_mn);
  }
}
