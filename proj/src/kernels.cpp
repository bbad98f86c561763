#include "finc/kernels.hpp"

#include <bit>
#include <unordered_set>

namespace finc::kernels {

namespace {

inline bool orthogonal(const Field& f, std::span<const Elt> a,
                       std::span<const Elt> b) {
  Elt s = 0;
  for (std::size_t t = 0; t < a.size(); ++t) s = f.add(s, f.mul(a[t], b[t]));
  return s == 0;
}

void build_row(const Field& f, std::span<const Elt> coords, unsigned dim,
               std::size_t n, std::uint64_t* row, std::size_t i) {
  std::span<const Elt> vi = coords.subspan(i * dim, dim);
  for (std::size_t j = 0; j < n; ++j) {
    if (orthogonal(f, vi, coords.subspan(j * dim, dim)))
      row[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
}

}  // namespace

void build_adjacency(const Field& f, std::span<const Elt> coords, unsigned dim,
                     std::size_t n, std::vector<std::uint64_t>& bits,
                     std::size_t words, Mode mode) {
  bits.assign(n * words, 0);
  if (mode == Mode::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      build_row(f, coords, dim, n, bits.data() + i * words, i);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      build_row(f, coords, dim, n, bits.data() + i * words, i);
  }
}

namespace {

bool gram_row_ok(std::span<const std::uint64_t> bits, std::size_t n,
                 std::size_t words, std::uint64_t mu, std::uint64_t c,
                 std::size_t i) {
  const std::uint64_t* ri = bits.data() + i * words;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t* rj = bits.data() + j * words;
    std::uint64_t dot = 0;
    for (std::size_t w = 0; w < words; ++w) dot += std::popcount(ri[w] & rj[w]);
    std::uint64_t want = (i == j) ? mu + c : mu;
    if (dot != want) return false;
  }
  return true;
}

}  // namespace

bool gram_identity(std::span<const std::uint64_t> bits, std::size_t n,
                   std::size_t words, std::uint64_t mu, std::uint64_t c,
                   Mode mode) {
  if (mode == Mode::Parallel) {
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      ok = ok && gram_row_ok(bits, n, words, mu, c, i);
    return ok;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!gram_row_ok(bits, n, words, mu, c, i)) return false;
  return true;
}

std::uint64_t pair_count(std::span<const std::uint64_t> bits, std::size_t words,
                         std::span<const std::uint32_t> B,
                         std::span<const std::uint64_t> cmask, Mode mode) {
  std::uint64_t total = 0;
  if (mode == Mode::Parallel) {
#pragma omp parallel for reduction(+ : total)
    for (long long bi = 0; bi < static_cast<long long>(B.size()); ++bi) {
      const std::uint64_t* row = bits.data() + std::size_t{B[bi]} * words;
      std::uint64_t s = 0;
      for (std::size_t w = 0; w < words; ++w)
        s += std::popcount(row[w] & cmask[w]);
      total += s;
    }
  } else {
    for (std::uint32_t u : B) {
      const std::uint64_t* row = bits.data() + std::size_t{u} * words;
      for (std::size_t w = 0; w < words; ++w)
        total += std::popcount(row[w] & cmask[w]);
    }
  }
  return total;
}

std::uint64_t incidence_count_brute(const Field& f,
                                    std::span<const AffinePoint> points,
                                    std::span<const AffineLine> lines,
                                    Mode mode) {
  std::uint64_t total = 0;
  if (mode == Mode::Parallel) {
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (long long i = 0; i < static_cast<long long>(points.size()); ++i) {
      std::uint64_t s = 0;
      for (const AffineLine& l : lines)
        if (on_line(f, points[i], l)) ++s;
      total += s;
    }
  } else {
    for (const AffinePoint& p : points)
      for (const AffineLine& l : lines)
        if (on_line(f, p, l)) ++total;
  }
  return total;
}

std::uint64_t incidence_count_bucketed(const Field& f,
                                       std::span<const AffinePoint> points,
                                       std::span<const AffineLine> lines) {
  std::unordered_set<std::uint64_t> members;
  members.reserve(points.size() * 2);
  for (const AffinePoint& p : points) members.insert(p.x * f.q() + p.y);
  std::uint64_t total = 0;
  for (const AffineLine& l : lines) {
    if (l.vertical) {
      for (Elt y = 0; y < f.q(); ++y)
        total += members.count(l.intercept * f.q() + y);
    } else {
      for (Elt x = 0; x < f.q(); ++x) {
        Elt y = f.add(f.mul(l.slope, x), l.intercept);
        total += members.count(x * f.q() + y);
      }
    }
  }
  return total;
}

}  // namespace finc::kernels
