#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace finc {

/// Size guard violations (materialized graph too large, etc.). The CLI maps
/// this to its own exit code, distinct from usage errors.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exactly-counted quantity paired with one of the proved bounds.
///
/// Two verdict routes are kept: `verdict` follows the float comparison with
/// 1e-9 relative slack on the bound, `verdict_exact` compares squared terms
/// in integer arithmetic and involves no floats at all. The main term is an
/// exact rational main_num/main_den.
struct BoundCertificate {
  std::string context;
  std::uint64_t observed = 0;
  std::int64_t main_num = 0;
  std::int64_t main_den = 1;
  double error_term = 0.0;  // the sqrt term of the bound
  double total = 0.0;       // main + error, as a float
  double alt_main = 0.0;    // tighter k/n main term where applicable
  bool verdict = true;
  bool verdict_exact = true;
  std::string status = "ok";
};

inline constexpr double kRelativeSlack = 1e-9;

}  // namespace finc
