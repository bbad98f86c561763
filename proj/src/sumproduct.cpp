#include "finc/sumproduct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "finc/rng.hpp"

namespace finc {

SubsetA SubsetA::of(const Field& f, std::vector<Elt> elems) {
  if (elems.empty()) throw std::invalid_argument("A must be non-empty");
  for (Elt e : elems) f.check(e);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return SubsetA{f, std::move(elems)};
}

bool SubsetA::contains_zero() const {
  return !elems.empty() && elems.front() == 0;
}

std::vector<Elt> sum_set(const SubsetA& a) {
  std::set<Elt> out;
  for (std::size_t i = 0; i < a.elems.size(); ++i)
    for (std::size_t j = i; j < a.elems.size(); ++j)
      out.insert(a.field.add(a.elems[i], a.elems[j]));
  return {out.begin(), out.end()};
}

std::vector<Elt> product_set(const SubsetA& a) {
  std::set<Elt> out;
  for (std::size_t i = 0; i < a.elems.size(); ++i)
    for (std::size_t j = i; j < a.elems.size(); ++j)
      out.insert(a.field.mul(a.elems[i], a.elems[j]));
  return {out.begin(), out.end()};
}

ElekesSystem elekes_construct(const SubsetA& a) {
  const Field& f = a.field;
  auto sums = sum_set(a);
  auto prods = product_set(a);
  std::vector<AffinePoint> pts;
  pts.reserve(sums.size() * prods.size());
  for (Elt s : sums)
    for (Elt pr : prods) pts.push_back({s, pr});

  // l(a0, b) : y = b x - a0 b
  std::vector<AffineLine> lines;
  for (Elt a0 : a.elems)
    for (Elt b : a.elems)
      lines.push_back({false, b, f.neg(f.mul(a0, b))});
  std::uint64_t raw = lines.size();
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  ElekesSystem sys{PointSet::of(f, std::move(pts)),
                   LineSet::of(f, std::move(lines)), raw, 0};
  sys.dedup_line_count = sys.lines.size();
  return sys;
}

BoundCertificate certify_elekes(const SubsetA& a) {
  ElekesSystem sys = elekes_construct(a);
  const std::uint64_t cube =
      static_cast<std::uint64_t>(a.size()) * a.size() * a.size();

  BoundCertificate cert;
  cert.context = "elekes q=" + a.field.designator() +
                 " |A|=" + std::to_string(a.size());
  cert.observed = count_incidences(sys.points, sys.lines);
  cert.main_num = static_cast<std::int64_t>(cube);
  cert.main_den = 1;
  cert.total = static_cast<double>(cube);
  if (a.contains_zero()) {
    // b = 0 lines collapse to y = 0; the |A|^3 floor is not asserted
    cert.status = "not-asserted: 0 in A collapses the b=0 lines";
    cert.verdict = true;
    cert.verdict_exact = true;
  } else {
    cert.verdict = cert.observed >= cube;
    cert.verdict_exact = cert.verdict;
  }
  return cert;
}

namespace {

std::string classify_regime(std::uint64_t a, std::uint64_t q) {
  const std::uint64_t a2 = a * a;
  if (a2 < q) return "below-sqrt";
  if (a2 == q) return "boundary-sqrt";
  const std::uint64_t a3 = a2 * a;
  const std::uint64_t q2 = q * q;
  if (a3 < q2) return "mid";
  if (a3 == q2) return "boundary-2/3";
  return "high";
}

}  // namespace

SumProductReport certify_theorem5(const SubsetA& a, bool allow_even_q) {
  const Field& f = a.field;
  if (!f.odd_characteristic() && !allow_even_q)
    throw std::invalid_argument(
        "theorem requires odd q; pass the even-q override for exploration");

  SumProductReport r;
  r.q = f.q();
  r.a = a.size();
  r.m = sum_set(a).size();
  r.n = product_set(a).size();
  r.max_mn = std::max(r.m, r.n);
  r.lhs = r.a * r.a;
  r.non_theorem = !f.odd_characteristic();
  r.contains_zero = a.contains_zero();

  const double q = static_cast<double>(r.q);
  const double mn = static_cast<double>(r.m) * static_cast<double>(r.n);
  r.rhs_main_num = static_cast<std::int64_t>(r.m * r.n * r.a);
  r.rhs_main = static_cast<double>(r.rhs_main_num) / q;
  r.rhs_error = std::sqrt(q) * std::sqrt(mn);
  r.theorem5_verdict = static_cast<double>(r.lhs) <=
                       (r.rhs_main + r.rhs_error) * (1.0 + kRelativeSlack);

  const double a1 = static_cast<double>(r.a);
  r.lower_bound =
      2.0 * a1 * a1 / (std::sqrt(q) + std::sqrt(q + 4.0 * a1 * a1 * a1 / q));
  r.lower_bound_verdict = static_cast<double>(r.max_mn) >=
                          r.lower_bound * (1.0 - kRelativeSlack);
  r.ratio = static_cast<double>(r.max_mn) / r.lower_bound;
  r.implied_c = static_cast<double>(r.max_mn) * std::sqrt(q) / (a1 * a1);

  const double x = static_cast<double>(r.max_mn);
  const double quad = a1 * x * x + std::pow(q, 1.5) * x - q * a1 * a1;
  r.quadratic_step_holds =
      quad >= -kRelativeSlack * (a1 * x * x + std::pow(q, 1.5) * x + q * a1 * a1);
  r.regime = classify_regime(r.a, r.q);
  return r;
}

Family parse_family(const std::string& name) {
  if (name == "uniform-random") return Family::UniformRandom;
  if (name == "interval") return Family::Interval;
  if (name == "geometric") return Family::Geometric;
  if (name == "subgroup") return Family::Subgroup;
  if (name == "subfield") return Family::Subfield;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::UniformRandom: return "uniform-random";
    case Family::Interval: return "interval";
    case Family::Geometric: return "geometric";
    case Family::Subgroup: return "subgroup";
    case Family::Subfield: return "subfield";
  }
  return "?";
}

namespace {

// Multiplicative order divides q-1; true order via divisor scan.
std::uint64_t mult_order(const Field& f, Elt g) {
  std::uint64_t best = f.q() - 1;
  for (std::uint64_t t = 1; t * t <= f.q() - 1; ++t) {
    if ((f.q() - 1) % t != 0) continue;
    if (f.pow(g, t) == 1) return t;
    std::uint64_t other = (f.q() - 1) / t;
    if (other < best && f.pow(g, other) == 1) best = other;
  }
  return best;
}

Elt primitive_element(const Field& f) {
  for (Elt g = 1; g < f.q(); ++g)
    if (mult_order(f, g) == f.q() - 1) return g;
  throw std::logic_error("no primitive element");  // unreachable
}

std::vector<Elt> make_family_subset(const Field& f, Family family,
                                    std::uint64_t size, std::mt19937_64& rng) {
  const std::uint64_t q = f.q();
  size = std::min(size, q);
  switch (family) {
    case Family::UniformRandom: {
      auto s = sample_distinct(rng, q, size);
      return {s.begin(), s.end()};
    }
    case Family::Interval: {
      if (f.k() != 1)
        throw std::invalid_argument("interval family needs a prime field");
      std::uniform_int_distribution<Elt> d(0, q - 1);
      Elt start = d(rng);
      std::vector<Elt> out;
      for (std::uint64_t i = 0; i < size; ++i) out.push_back((start + i) % q);
      return out;
    }
    case Family::Geometric: {
      std::uniform_int_distribution<Elt> d(1, q - 1);
      Elt g = d(rng);
      Elt r = q > 2 ? d(rng) : 1;
      std::vector<Elt> out;
      Elt cur = g;
      for (std::uint64_t i = 0; i < size; ++i) {
        out.push_back(cur);
        cur = f.mul(cur, r);
      }
      return out;
    }
    case Family::Subgroup: {
      // unique subgroup of order t for each t | q-1; take the t nearest size
      std::uint64_t best_t = 1;
      for (std::uint64_t t = 1; t <= q - 1; ++t) {
        if ((q - 1) % t != 0) continue;
        if (std::llabs(static_cast<long long>(t) - static_cast<long long>(size)) <
            std::llabs(static_cast<long long>(best_t) -
                       static_cast<long long>(size)))
          best_t = t;
      }
      Elt gamma = primitive_element(f);
      Elt step = f.pow(gamma, (q - 1) / best_t);
      std::vector<Elt> out;
      Elt cur = 1;
      for (std::uint64_t i = 0; i < best_t; ++i) {
        out.push_back(cur);
        cur = f.mul(cur, step);
      }
      return out;
    }
    case Family::Subfield: {
      if (f.k() <= 1)
        throw std::invalid_argument("subfield family needs an extension field");
      // proper subfields are F_{p^j}, j | k, j < k; nearest order to size
      std::uint64_t best_j = 1, best_order = f.p();
      for (unsigned j = 1; j < f.k(); ++j) {
        if (f.k() % j != 0) continue;
        std::uint64_t order = 1;
        for (unsigned i = 0; i < j; ++i) order *= f.p();
        if (std::llabs(static_cast<long long>(order) -
                       static_cast<long long>(size)) <
            std::llabs(static_cast<long long>(best_order) -
                       static_cast<long long>(size))) {
          best_j = j;
          best_order = order;
        }
      }
      (void)best_j;
      std::vector<Elt> out;
      for (Elt a = 0; a < q; ++a)
        if (f.pow(a, best_order) == a) out.push_back(a);
      return out;
    }
  }
  throw std::logic_error("unhandled family");
}

}  // namespace

std::vector<SumProductReport> experiment_sweep(
    const Field& f, Family family, const std::vector<std::uint64_t>& sizes,
    unsigned trials, std::uint64_t seed, bool allow_even_q) {
  if (!f.odd_characteristic() && !allow_even_q)
    throw std::invalid_argument(
        "theorem requires odd q; pass the even-q override for exploration");
  // probe family availability before spawning trials
  {
    std::mt19937_64 probe(mix_seed(seed, 0));
    make_family_subset(f, family, sizes.empty() ? 1 : sizes.front(), probe);
  }
  std::vector<SumProductReport> out(sizes.size() * trials);
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (long long si = 0; si < static_cast<long long>(sizes.size()); ++si) {
    for (long long t = 0; t < static_cast<long long>(trials); ++t) {
      std::size_t idx = static_cast<std::size_t>(si) * trials + t;
      std::mt19937_64 rng(mix_seed(seed, idx));
      auto elems = make_family_subset(f, family, sizes[si], rng);
      SumProductReport r =
          certify_theorem5(SubsetA::of(f, std::move(elems)), allow_even_q);
      r.family = family_name(family);
      out[idx] = std::move(r);
    }
  }
  return out;
}

}  // namespace finc
