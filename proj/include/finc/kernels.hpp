#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "finc/field.hpp"
#include "finc/projective.hpp"

namespace finc::kernels {

/// Serial is the reference path; Parallel is the OpenMP path. Every kernel
/// must produce identical results in both modes (checked by the unit tests
/// and timed by tools/bench).
enum class Mode { Serial, Parallel };

/// Fills the n x n adjacency bitset (row-major, `words` 64-bit words per
/// row) of the polarity graph on `coords`, a flat n x dim array of
/// canonical projective coordinates: bit (i,j) set iff <v_i, v_j> = 0.
void build_adjacency(const Field& f, std::span<const Elt> coords,
                     unsigned dim, std::size_t n, std::vector<std::uint64_t>& bits,
                     std::size_t words, Mode mode);

/// Checks A*A^T == mu*J + c*I exactly over the integers: every off-diagonal
/// entry popcount(row_i & row_j) equals mu and every diagonal entry equals
/// mu + c.
bool gram_identity(std::span<const std::uint64_t> bits, std::size_t n,
                   std::size_t words, std::uint64_t mu, std::uint64_t c,
                   Mode mode);

/// e(B, C): ordered pairs (u, v), u in B, v in C, uv an edge. A loop at
/// u in B∩C contributes the single pair (u, u). `cmask` is a words-long
/// bitmask of C.
std::uint64_t pair_count(std::span<const std::uint64_t> bits,
                         std::size_t words,
                         std::span<const std::uint32_t> B,
                         std::span<const std::uint64_t> cmask, Mode mode);

/// Point-line incidences by direct evaluation over P x L.
std::uint64_t incidence_count_brute(const Field& f,
                                    std::span<const AffinePoint> points,
                                    std::span<const AffineLine> lines,
                                    Mode mode);

/// Point-line incidences by walking the q points of each line and probing
/// a membership table. Cost |L|*q instead of |P||L|. Serial only; acts as
/// the independent second route for the brute-force counter.
std::uint64_t incidence_count_bucketed(const Field& f,
                                       std::span<const AffinePoint> points,
                                       std::span<const AffineLine> lines);

}  // namespace finc::kernels
