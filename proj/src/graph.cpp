#include "finc/graph.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace finc {

IncidenceGraph::IncidenceGraph(Field f, unsigned d)
    : field_(std::move(f)), d_(d) {}

IncidenceGraph IncidenceGraph::build(const Field& f, unsigned d,
                                     kernels::Mode mode) {
  if (d < 2) throw std::invalid_argument("graph dimension must be >= 2");
  std::uint64_t q = f.q();
  std::uint64_t n = 0, pw = 1;
  for (unsigned i = 0; i <= d; ++i) {
    n += pw;
    pw *= q;
  }
  if (n > kMaxVertices)
    throw SizeGuardError("graph would have " + std::to_string(n) +
                         " vertices (guard: " + std::to_string(kMaxVertices) +
                         ")");

  IncidenceGraph g(f, d);
  g.vertices_ = enumerate_projective(f, d);
  g.n_ = g.vertices_.size();
  g.words_ = (g.n_ + 63) / 64;

  std::uint64_t qd = 1;
  for (unsigned i = 0; i < d; ++i) qd *= q;
  g.degree_ = (qd - 1) / (q - 1);        // (q^d-1)/(q-1)
  g.c_ = qd / q;                          // q^{d-1}
  g.mu_ = g.degree_ - g.c_;               // hyperplanes through 2 points

  std::vector<Elt> flat(g.n_ * (d + 1));
  for (std::size_t i = 0; i < g.n_; ++i)
    std::copy(g.vertices_[i].x.begin(), g.vertices_[i].x.end(),
              flat.begin() + i * (d + 1));
  kernels::build_adjacency(f, flat, d + 1, g.n_, g.bits_, g.words_, mode);
  return g;
}

double IncidenceGraph::lambda() const {
  return std::sqrt(static_cast<double>(c_));
}

bool IncidenceGraph::edge(std::size_t i, std::size_t j) const {
  return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1;
}

std::uint64_t IncidenceGraph::row_sum(std::size_t i) const {
  std::uint64_t s = 0;
  for (std::size_t w = 0; w < words_; ++w)
    s += std::popcount(bits_[i * words_ + w]);
  return s;
}

std::size_t IncidenceGraph::loop_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n_; ++i) c += edge(i, i);
  return c;
}

void IncidenceGraph::write_edge_list(std::ostream& os) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (edge(i, j)) os << i << ' ' << j << '\n';
}

SpectralCertificate verify_spectral_identity(const IncidenceGraph& g,
                                             bool with_spectrum,
                                             kernels::Mode mode) {
  SpectralCertificate cert;
  cert.mu = g.mu();
  cert.c = g.lambda_squared();
  cert.claimed_lambda = g.lambda();
  cert.identity_holds =
      kernels::gram_identity(g.bits(), g.n(), g.words(), cert.mu, cert.c, mode);

  if (with_spectrum && g.n() <= 500) {
    Eigen::MatrixXd a(g.n(), g.n());
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j)
        a(i, j) = g.edge(i, j) ? 1.0 : 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a,
                                                          Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = solver.eigenvalues();  // ascending
    // drop the single principal eigenvalue k, take max |.| of the rest
    Eigen::Index top = ev.size() - 1;
    double second = 0.0;
    for (Eigen::Index i = 0; i < top; ++i)
      second = std::max(second, std::abs(ev(i)));
    cert.numeric_second_eigenvalue = second;
  }
  return cert;
}

BoundCertificate mixing_check(const IncidenceGraph& g,
                              std::span<const std::uint32_t> B,
                              std::span<const std::uint32_t> C,
                              kernels::Mode mode) {
  for (std::uint32_t v : B)
    if (v >= g.n()) throw std::invalid_argument("vertex index out of range");
  std::vector<std::uint64_t> cmask(g.words(), 0);
  for (std::uint32_t v : C) {
    if (v >= g.n()) throw std::invalid_argument("vertex index out of range");
    cmask[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  std::uint64_t e = kernels::pair_count(g.bits(), g.words(), B, cmask, mode);

  const std::uint64_t n = g.n(), k = g.degree();
  const std::uint64_t bc =
      static_cast<std::uint64_t>(B.size()) * static_cast<std::uint64_t>(C.size());

  BoundCertificate cert;
  cert.context = "mixing q=" + g.field().designator() +
                 " d=" + std::to_string(g.dim());
  cert.observed = e;
  cert.main_num = static_cast<std::int64_t>(k * bc);
  cert.main_den = static_cast<std::int64_t>(n);
  cert.error_term = g.lambda() * std::sqrt(static_cast<double>(bc));
  cert.alt_main = static_cast<double>(k * bc) / static_cast<double>(n);
  cert.total = cert.alt_main + cert.error_term;

  // |e - k bc / n| <= sqrt(q^{d-1} bc): square both sides, scale by n^2.
  __int128 diff = static_cast<__int128>(e) * n - static_cast<__int128>(k) * bc;
  __int128 lhs2 = diff * diff;
  __int128 rhs2 = static_cast<__int128>(g.lambda_squared()) * bc *
                  (static_cast<__int128>(n) * n);
  cert.verdict_exact = lhs2 <= rhs2;
  cert.verdict = cert.verdict_exact;
  return cert;
}

}  // namespace finc
