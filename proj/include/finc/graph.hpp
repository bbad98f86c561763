#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "finc/certificates.hpp"
#include "finc/field.hpp"
#include "finc/kernels.hpp"
#include "finc/projective.hpp"

namespace finc {

struct SpectralCertificate {
  bool identity_holds = false;
  std::uint64_t mu = 0;  // off-diagonal entry of A*A^T
  std::uint64_t c = 0;   // q^{d-1}
  double claimed_lambda = 0.0;
  // Second-largest |eigenvalue| from the dense numeric solve; only filled
  // for n <= 500.
  std::optional<double> numeric_second_eigenvalue;
};

/// The polarity graph on PG(d, q): vertices are projective classes, [x]~[y]
/// iff <x, y> = 0, loops at the absolute points. (q^d-1)/(q-1)-regular with
/// a loop counting 1 toward its row sum.
class IncidenceGraph {
 public:
  static constexpr std::size_t kMaxVertices = 10'000;

  /// Throws SizeGuardError when n = (q^{d+1}-1)/(q-1) exceeds kMaxVertices.
  static IncidenceGraph build(const Field& f, unsigned d,
                              kernels::Mode mode = kernels::Mode::Parallel);

  const Field& field() const { return field_; }
  unsigned dim() const { return d_; }
  std::size_t n() const { return n_; }
  std::uint64_t degree() const { return degree_; }
  double lambda() const;  // q^{(d-1)/2}
  std::uint64_t lambda_squared() const { return c_; }
  std::uint64_t mu() const { return mu_; }

  const std::vector<ProjPoint>& vertices() const { return vertices_; }
  bool edge(std::size_t i, std::size_t j) const;
  std::uint64_t row_sum(std::size_t i) const;
  std::size_t loop_count() const;

  std::size_t words() const { return words_; }
  std::span<const std::uint64_t> bits() const { return bits_; }

  /// Sorted edge list, one "i j" per line with i <= j, loops as "i i".
  void write_edge_list(std::ostream& os) const;

 private:
  IncidenceGraph(Field f, unsigned d);

  Field field_;
  unsigned d_;
  std::size_t n_ = 0;
  std::uint64_t degree_ = 0;
  std::uint64_t mu_ = 0;
  std::uint64_t c_ = 0;
  std::size_t words_ = 0;
  std::vector<ProjPoint> vertices_;
  std::vector<std::uint64_t> bits_;
};

/// Exact integer check of A*A^T = mu*J + q^{d-1}*I; optionally a dense
/// numeric eigensolve (n <= 500) recording the second-largest |eigenvalue|.
SpectralCertificate verify_spectral_identity(
    const IncidenceGraph& g, bool with_spectrum = true,
    kernels::Mode mode = kernels::Mode::Parallel);

/// Expander mixing inequality |e(B,C) - (k/n)|B||C|| <= lambda sqrt(|B||C|)
/// on the given vertex-index sets. The verdict is decided exactly: both
/// sides are squared and compared in integer arithmetic.
BoundCertificate mixing_check(const IncidenceGraph& g,
                              std::span<const std::uint32_t> B,
                              std::span<const std::uint32_t> C,
                              kernels::Mode mode = kernels::Mode::Parallel);

}  // namespace finc
