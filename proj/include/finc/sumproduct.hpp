#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finc/certificates.hpp"
#include "finc/field.hpp"
#include "finc/incidence.hpp"

namespace finc {

/// Non-empty subset A of F_q (set semantics, sorted encodings).
struct SubsetA {
  Field field;
  std::vector<Elt> elems;

  static SubsetA of(const Field& f, std::vector<Elt> elems);
  std::size_t size() const { return elems.size(); }
  bool contains_zero() const;
};

std::vector<Elt> sum_set(const SubsetA& a);
std::vector<Elt> product_set(const SubsetA& a);

/// The point/line system P = (A+A) x (A.A), L = { y = b(x - a) : a,b in A }.
/// Lines are deduplicated (all b = 0 lines coincide as y = 0 when 0 in A);
/// both the raw |A|^2 and the deduplicated line count are kept.
struct ElekesSystem {
  PointSet points;
  LineSet lines;
  std::uint64_t raw_line_count = 0;
  std::uint64_t dedup_line_count = 0;
};

ElekesSystem elekes_construct(const SubsetA& a);

/// observed incidences of the Elekes system vs the |A|^3 floor. The floor is
/// asserted only when 0 is not in A; with 0 in A the count is reported and
/// the line collapse noted in status.
BoundCertificate certify_elekes(const SubsetA& a);

struct SumProductReport {
  std::uint64_t q = 0;
  std::string family = "explicit";
  std::uint64_t a = 0;  // |A|
  std::uint64_t m = 0;  // |A+A|
  std::uint64_t n = 0;  // |A.A|
  std::uint64_t max_mn = 0;
  std::uint64_t lhs = 0;           // |A|^2
  double rhs_main = 0.0;           // m n |A| / q
  std::int64_t rhs_main_num = 0;   // exact numerator, denominator q
  double rhs_error = 0.0;          // q^{1/2} sqrt(m n)
  bool theorem5_verdict = true;    // lhs <= main + error
  double lower_bound = 0.0;        // 2|A|^2 / (q^{1/2} + sqrt(q + 4|A|^3/q))
  bool lower_bound_verdict = true; // max_mn >= lower_bound - slack
  bool quadratic_step_holds = true;  // |A|x^2 + q^{3/2}x - q|A|^2 >= 0
  double ratio = 0.0;              // max_mn / lower_bound
  double implied_c = 0.0;          // max_mn * q^{1/2} / |A|^2
  std::string regime;  // below-sqrt | boundary-sqrt | mid | boundary-2/3 | high
  bool non_theorem = false;  // set when even q was allowed by override
  bool contains_zero = false;
};

/// Throws std::invalid_argument on even q unless allow_even_q.
SumProductReport certify_theorem5(const SubsetA& a, bool allow_even_q = false);

enum class Family { UniformRandom, Interval, Geometric, Subgroup, Subfield };

Family parse_family(const std::string& name);
std::string family_name(Family f);

/// Deterministic given (seed, trial index). Sizes are requested set sizes;
/// families that cannot hit a size exactly (subgroup, subfield) use the
/// closest achievable one. Throws std::invalid_argument when the family is
/// unavailable for the field (interval needs k=1, subfield needs k>1).
std::vector<SumProductReport> experiment_sweep(const Field& f, Family family,
                                               const std::vector<std::uint64_t>& sizes,
                                               unsigned trials,
                                               std::uint64_t seed,
                                               bool allow_even_q = false);

}  // namespace finc
