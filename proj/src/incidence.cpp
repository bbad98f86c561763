#include "finc/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace finc {

PointSet PointSet::of(const Field& f, std::vector<AffinePoint> pts) {
  for (const auto& p : pts) {
    f.check(p.x);
    f.check(p.y);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return PointSet{f, std::move(pts)};
}

PointSet PointSet::full_grid(const Field& f) {
  std::vector<AffinePoint> pts;
  pts.reserve(f.q() * f.q());
  for (Elt x = 0; x < f.q(); ++x)
    for (Elt y = 0; y < f.q(); ++y) pts.push_back({x, y});
  return PointSet{f, std::move(pts)};
}

LineSet LineSet::of(const Field& f, std::vector<AffineLine> lines) {
  for (const auto& l : lines) {
    f.check(l.slope);
    f.check(l.intercept);
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return LineSet{f, std::move(lines)};
}

LineSet LineSet::all_lines(const Field& f) {
  auto lines = enumerate_affine_lines(f);
  std::sort(lines.begin(), lines.end());
  return LineSet{f, std::move(lines)};
}

std::uint64_t count_incidences(const PointSet& P, const LineSet& L,
                               CountStrategy strategy, kernels::Mode mode) {
  if (P.field != L.field)
    throw std::invalid_argument("point and line sets over different fields");
  if (P.pts.empty() || L.lines.empty()) return 0;
  if (strategy == CountStrategy::Auto)
    strategy = P.size() > P.field.q() ? CountStrategy::Bucketed
                                      : CountStrategy::Brute;
  if (strategy == CountStrategy::Bucketed)
    return kernels::incidence_count_bucketed(P.field, P.pts, L.lines);
  return kernels::incidence_count_brute(P.field, P.pts, L.lines, mode);
}

BoundCertificate certify_theorem3(const PointSet& P, const LineSet& L,
                                  CountStrategy strategy, kernels::Mode mode) {
  const Field& f = P.field;
  const std::uint64_t q = f.q();
  const std::uint64_t pl =
      static_cast<std::uint64_t>(P.size()) * static_cast<std::uint64_t>(L.size());

  BoundCertificate cert;
  cert.context = "theorem3 q=" + f.designator();
  cert.observed = count_incidences(P, L, strategy, mode);
  cert.main_num = static_cast<std::int64_t>(pl);
  cert.main_den = static_cast<std::int64_t>(q);
  cert.error_term =
      std::sqrt(static_cast<double>(q)) * std::sqrt(static_cast<double>(pl));
  cert.total = static_cast<double>(pl) / static_cast<double>(q) + cert.error_term;
  cert.alt_main = static_cast<double>((q + 1) * pl) /
                  static_cast<double>(q * q + q + 1);
  cert.verdict =
      static_cast<double>(cert.observed) <= cert.total * (1.0 + kRelativeSlack);
  // observed - pl/q <= sqrt(q pl)  <=>  (observed q - pl)^2 <= q^3 pl when
  // the left side is positive
  __int128 diff = static_cast<__int128>(cert.observed) * q - static_cast<__int128>(pl);
  cert.verdict_exact =
      diff <= 0 ||
      diff * diff <= static_cast<__int128>(q) * q * q * static_cast<__int128>(pl);
  return cert;
}

RegimeCertificate certify_corollary4(const Field& f, double alpha, double eps,
                                     const PointSet& P, const LineSet& L) {
  RegimeCertificate cert;
  const double q = static_cast<double>(f.q());
  cert.n_cap = std::pow(q, alpha);
  if (eps <= 0 || alpha < 1 + eps || alpha > 2 - eps ||
      static_cast<double>(P.size()) > cert.n_cap ||
      static_cast<double>(L.size()) > cert.n_cap) {
    cert.status = "regime-out-of-range";
    cert.verdict = false;
    return cert;
  }
  const double exponent = 1.5 - eps / 4.0;
  const double n_pow = std::pow(cert.n_cap, exponent);
  cert.observed = count_incidences(P, L);
  cert.bound = 2.0 * n_pow;
  cert.verdict =
      static_cast<double>(cert.observed) <= cert.bound * (1.0 + kRelativeSlack);
  cert.step1_lhs = cert.n_cap * cert.n_cap / q;
  cert.step1_rhs = n_pow;
  cert.step1_holds = cert.step1_lhs <= cert.step1_rhs * (1.0 + kRelativeSlack);
  cert.step2_lhs = std::sqrt(q) * cert.n_cap;
  cert.step2_rhs = n_pow;
  cert.step2_holds = cert.step2_lhs <= cert.step2_rhs * (1.0 + kRelativeSlack);
  return cert;
}

BoundCertificate certify_hyperplane_bound(const IncidenceGraph& g,
                                          std::span<const std::uint32_t> B,
                                          std::span<const std::uint32_t> C) {
  BoundCertificate cert = mixing_check(g, B, C);
  cert.context = "hyperplane-bound q=" + g.field().designator() +
                 " d=" + std::to_string(g.dim());
  const std::uint64_t q = g.field().q();
  const std::uint64_t bc =
      static_cast<std::uint64_t>(B.size()) * static_cast<std::uint64_t>(C.size());
  // published form: |P||H|/q + q^{(d-1)/2} sqrt(|P||H|); the tighter k/n
  // main term stays in alt_main (set by mixing_check)
  cert.main_num = static_cast<std::int64_t>(bc);
  cert.main_den = static_cast<std::int64_t>(q);
  cert.total = static_cast<double>(bc) / static_cast<double>(q) + cert.error_term;
  cert.verdict =
      static_cast<double>(cert.observed) <= cert.total * (1.0 + kRelativeSlack);
  __int128 diff = static_cast<__int128>(cert.observed) * q - static_cast<__int128>(bc);
  cert.verdict_exact =
      diff <= 0 || diff * diff <= static_cast<__int128>(g.lambda_squared()) *
                                      static_cast<__int128>(q) * q *
                                      static_cast<__int128>(bc);
  return cert;
}

std::vector<std::uint32_t> embed_point_indices(const IncidenceGraph& g,
                                               const PointSet& P) {
  std::map<ProjPoint, std::uint32_t> index;
  for (std::uint32_t i = 0; i < g.n(); ++i) index[g.vertices()[i]] = i;
  std::vector<std::uint32_t> out;
  out.reserve(P.size());
  for (const AffinePoint& p : P.pts)
    out.push_back(index.at(embed_affine(P.field, p)));
  return out;
}

std::vector<std::uint32_t> dual_line_indices(const IncidenceGraph& g,
                                             const LineSet& L) {
  std::map<ProjPoint, std::uint32_t> index;
  for (std::uint32_t i = 0; i < g.n(); ++i) index[g.vertices()[i]] = i;
  std::vector<std::uint32_t> out;
  out.reserve(L.size());
  for (const AffineLine& l : L.lines)
    out.push_back(index.at(line_to_dual(L.field, l)));
  return out;
}

}  // namespace finc
