#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace finc {

// Field element, encoded as the coefficient vector read as a base-p integer
// (constant term is the least significant digit). For prime fields this is
// just the residue. Always < q for the owning field.
using Elt = std::uint64_t;

/// Exact arithmetic in F_q, q = p^k. Immutable after construction; all
/// operations are pure, so a Field may be shared across threads freely.
class Field {
 public:
  /// Builds F_{p^k}. For k > 1 the modulus is the lexicographically smallest
  /// monic irreducible polynomial of degree k over F_p (candidates scanned in
  /// increasing base-p encoding of the non-leading coefficients), so the
  /// construction is deterministic across runs and platforms.
  /// Throws std::invalid_argument on non-prime p, k = 0, or p^k overflow.
  static Field make(std::uint64_t p, unsigned k);

  /// Parses a designator of the form "p" or "p^k".
  static Field parse(std::string_view designator);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  bool odd_characteristic() const { return p_ != 2; }

  /// Monic modulus polynomial, constant term first, size k+1. Empty for k=1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  /// Throws std::invalid_argument on a = 0.
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t e) const;

  /// Coefficient vector of a, length k, constant term first.
  std::vector<std::uint64_t> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<std::uint64_t>& c) const;

  /// All q elements in increasing encoding order, starting at 0.
  std::vector<Elt> elements() const;

  /// Range check used by operations that take externally supplied encodings.
  void check(Elt a) const;

  std::string designator() const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  Field(std::uint64_t p, unsigned k, std::uint64_t q,
        std::vector<std::uint64_t> modulus);

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

bool is_prime(std::uint64_t n);

}  // namespace finc
