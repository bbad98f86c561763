#include "finc/projective.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace finc {

ProjPoint canonicalize(const Field& f, std::vector<Elt> raw) {
  std::size_t lead = raw.size();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    f.check(raw[i]);
    if (lead == raw.size() && raw[i] != 0) lead = i;
  }
  if (lead == raw.size())
    throw std::invalid_argument("zero vector has no projective class");
  if (raw[lead] != 1) {
    Elt s = f.inv(raw[lead]);
    for (auto& c : raw) c = f.mul(c, s);
  }
  return ProjPoint{std::move(raw)};
}

std::vector<ProjPoint> enumerate_projective(const Field& f, unsigned d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  // Canonical points are exactly (0,...,0,1,a_{j+1},...,a_d): pick the
  // position j of the leading 1, free coordinates to its right.
  std::vector<ProjPoint> out;
  std::uint64_t q = f.q();
  for (unsigned lead = 0; lead <= d; ++lead) {
    unsigned free = d - lead;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < free; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Elt> x(d + 1, 0);
      x[lead] = 1;
      // digits filled least-significant-last so vectors ascend
      // lexicographically within a block
      std::uint64_t rem = code;
      for (unsigned i = free; i-- > 0;) {
        x[lead + 1 + i] = rem % q;
        rem /= q;
      }
      out.push_back(ProjPoint{std::move(x)});
    }
  }
  return out;
}

bool incident(const Field& f, const ProjPoint& a, const ProjPoint& b) {
  if (a.x.size() != b.x.size())
    throw std::invalid_argument("dimension mismatch");
  Elt s = 0;
  for (std::size_t i = 0; i < a.x.size(); ++i)
    s = f.add(s, f.mul(a.x[i], b.x[i]));
  return s == 0;
}

ProjPoint embed_affine(const Field& f, AffinePoint p) {
  return canonicalize(f, {p.x, p.y, f.one()});
}

ProjPoint embed_affine_d(const Field& f, const std::vector<Elt>& coords) {
  std::vector<Elt> v = coords;
  v.push_back(f.one());
  return canonicalize(f, std::move(v));
}

ProjPoint line_to_dual(const Field& f, AffineLine l) {
  if (l.vertical) {
    // points (x0, y, 1): h = (1, 0, -x0)
    return canonicalize(f, {f.one(), 0, f.neg(l.intercept)});
  }
  // points (x, sx+t, 1): <(x, sx+t, 1), (s, -1, t)> = 0
  return canonicalize(f, {l.slope, f.neg(f.one()), l.intercept});
}

std::optional<AffineLine> line_from_dual(const Field& f, const ProjPoint& h) {
  if (h.x.size() != 3) throw std::invalid_argument("dual must be 3-dimensional");
  Elt h0 = h.x[0], h1 = h.x[1], h2 = h.x[2];
  if (h1 != 0) {
    Elt s = f.neg(f.mul(h0, f.inv(h1)));
    Elt t = f.neg(f.mul(h2, f.inv(h1)));
    return AffineLine{false, s, t};
  }
  if (h0 != 0) {
    Elt x0 = f.neg(f.mul(h2, f.inv(h0)));
    return AffineLine{true, 0, x0};
  }
  return std::nullopt;  // line at infinity
}

bool on_line(const Field& f, AffinePoint p, AffineLine l) {
  if (l.vertical) return p.x == l.intercept;
  return p.y == f.add(f.mul(l.slope, p.x), l.intercept);
}

std::vector<AffineLine> enumerate_affine_lines(const Field& f) {
  std::vector<AffineLine> out;
  out.reserve(f.q() * f.q() + f.q());
  for (Elt s = 0; s < f.q(); ++s)
    for (Elt t = 0; t < f.q(); ++t) out.push_back(AffineLine{false, s, t});
  for (Elt x0 = 0; x0 < f.q(); ++x0) out.push_back(AffineLine{true, 0, x0});
  return out;
}

std::string to_string(const ProjPoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    if (i) s += ':';
    s += std::to_string(p.x[i]);
  }
  return s;
}

std::string to_string(const AffinePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string to_string(const AffineLine& l) {
  if (l.vertical) return "x=" + std::to_string(l.intercept);
  return "y=" + std::to_string(l.slope) + "*x+" + std::to_string(l.intercept);
}

namespace {
Elt parse_elt(const Field& f, std::string_view s) {
  Elt v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
    throw std::invalid_argument("bad element: " + std::string(s));
  f.check(v);
  return v;
}
}  // namespace

AffinePoint parse_affine_point(const Field& f, const std::string& s) {
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("bad point: " + s);
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad point: " + s);
  return AffinePoint{parse_elt(f, std::string_view(s).substr(1, comma - 1)),
                     parse_elt(f, std::string_view(s).substr(
                                      comma + 1, s.size() - comma - 2))};
}

AffineLine parse_affine_line(const Field& f, const std::string& s) {
  if (s.rfind("x=", 0) == 0)
    return AffineLine{true, 0, parse_elt(f, std::string_view(s).substr(2))};
  if (s.rfind("y=", 0) == 0) {
    auto star = s.find("*x+");
    if (star == std::string::npos)
      throw std::invalid_argument("bad line: " + s);
    return AffineLine{
        false, parse_elt(f, std::string_view(s).substr(2, star - 2)),
        parse_elt(f, std::string_view(s).substr(star + 3))};
  }
  throw std::invalid_argument("bad line: " + s);
}

}  // namespace finc
