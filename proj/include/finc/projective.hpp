#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finc/field.hpp"

namespace finc {

/// A point of PG(d, q): canonical representative of a scalar-equivalence
/// class, first nonzero coordinate normalized to 1. Also used for the duals
/// of lines/hyperplanes. Equality of canonical vectors is class equality.
struct ProjPoint {
  std::vector<Elt> x;  // length d+1

  bool operator==(const ProjPoint&) const = default;
  bool operator<(const ProjPoint& o) const { return x < o.x; }
};

struct AffinePoint {
  Elt x = 0;
  Elt y = 0;

  bool operator==(const AffinePoint&) const = default;
  auto operator<=>(const AffinePoint&) const = default;
};

/// A line of F_q^2: y = slope*x + intercept, or the vertical x = x0
/// (stored in `intercept` with `vertical` set).
struct AffineLine {
  bool vertical = false;
  Elt slope = 0;      // unused when vertical
  Elt intercept = 0;  // x0 when vertical

  bool operator==(const AffineLine&) const = default;
  auto operator<=>(const AffineLine&) const = default;
};

/// Throws std::invalid_argument on the zero vector.
ProjPoint canonicalize(const Field& f, std::vector<Elt> raw);

/// All (q^{d+1}-1)/(q-1) canonical points, in increasing lexicographic order
/// of the coordinate vector (highest index most significant is NOT used;
/// order is plain std::vector comparison of canonical vectors).
std::vector<ProjPoint> enumerate_projective(const Field& f, unsigned d);

/// Bilinear incidence: sum x_i * h_i == 0. Well defined on classes.
bool incident(const Field& f, const ProjPoint& a, const ProjPoint& b);

ProjPoint embed_affine(const Field& f, AffinePoint p);

/// Affine point of F_q^d embedded as (x_1,...,x_d,1).
ProjPoint embed_affine_d(const Field& f, const std::vector<Elt>& coords);

/// Dual class h with: p on l (affinely) iff <embed_affine(p), h> = 0.
ProjPoint line_to_dual(const Field& f, AffineLine l);

/// Inverse of line_to_dual; nullopt for the line at infinity (h = (0,0,*)).
std::optional<AffineLine> line_from_dual(const Field& f, const ProjPoint& h);

/// Membership in the affine sense (y = slope*x + intercept, or x = x0).
bool on_line(const Field& f, AffinePoint p, AffineLine l);

/// q^2 + q lines: the q^2 slope-intercept lines first (slope-major), then
/// the q verticals.
std::vector<AffineLine> enumerate_affine_lines(const Field& f);

// Text forms: "x0:x1:x2", "(x,y)", "y=s*x+c" / "x=c".
std::string to_string(const ProjPoint& p);
std::string to_string(const AffinePoint& p);
std::string to_string(const AffineLine& l);
AffinePoint parse_affine_point(const Field& f, const std::string& s);
AffineLine parse_affine_line(const Field& f, const std::string& s);

}  // namespace finc
