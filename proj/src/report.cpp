#include "finc/report.hpp"

#include <sstream>

namespace finc {

json rational_json(std::int64_t num, std::int64_t den) {
  json j;
  j["exact"] = std::to_string(num) + "/" + std::to_string(den);
  j["float"] = static_cast<double>(num) / static_cast<double>(den);
  return j;
}

json to_json(const BoundCertificate& c) {
  json j;
  j["context"] = c.context;
  j["observed"] = c.observed;
  j["main_term"] = rational_json(c.main_num, c.main_den);
  j["alt_main_term"] = c.alt_main;
  j["error_term"] = c.error_term;
  j["bound_total"] = c.total;
  j["verdict"] = c.verdict;
  j["verdict_exact"] = c.verdict_exact;
  j["status"] = c.status;
  return j;
}

json to_json(const SpectralCertificate& c) {
  json j;
  j["identity_holds"] = c.identity_holds;
  j["mu"] = c.mu;
  j["c"] = c.c;
  j["claimed_lambda"] = c.claimed_lambda;
  if (c.numeric_second_eigenvalue)
    j["numeric_second_eigenvalue"] = *c.numeric_second_eigenvalue;
  else
    j["numeric_second_eigenvalue"] = nullptr;
  return j;
}

json to_json(const RegimeCertificate& c) {
  json j;
  j["status"] = c.status;
  j["n_cap"] = c.n_cap;
  j["observed"] = c.observed;
  j["bound"] = c.bound;
  j["verdict"] = c.verdict;
  j["step1"] = {{"lhs", c.step1_lhs}, {"rhs", c.step1_rhs}, {"holds", c.step1_holds}};
  j["step2"] = {{"lhs", c.step2_lhs}, {"rhs", c.step2_rhs}, {"holds", c.step2_holds}};
  return j;
}

json to_json(const SumProductReport& r) {
  json j;
  j["q"] = r.q;
  j["family"] = r.family;
  j["size"] = r.a;
  j["m"] = r.m;
  j["n"] = r.n;
  j["max_mn"] = r.max_mn;
  j["lhs"] = r.lhs;
  j["rhs_main"] = rational_json(r.rhs_main_num, static_cast<std::int64_t>(r.q));
  j["rhs_error"] = r.rhs_error;
  j["theorem5_verdict"] = r.theorem5_verdict;
  j["lower_bound"] = r.lower_bound;
  j["lower_bound_verdict"] = r.lower_bound_verdict;
  j["quadratic_step_holds"] = r.quadratic_step_holds;
  j["ratio"] = r.ratio;
  j["implied_c"] = r.implied_c;
  j["regime"] = r.regime;
  j["non_theorem"] = r.non_theorem;
  j["contains_zero"] = r.contains_zero;
  return j;
}

std::string sweep_csv_header() {
  return "q,family,size,m,n,max_mn,lower_bound,ratio,regime,theorem5_verdict,"
         "lower_bound_verdict";
}

std::string sweep_csv_row(const SumProductReport& r) {
  std::ostringstream os;
  os << r.q << ',' << r.family << ',' << r.a << ',' << r.m << ',' << r.n << ','
     << r.max_mn << ',' << r.lower_bound << ',' << r.ratio << ',' << r.regime
     << ',' << (r.theorem5_verdict ? 1 : 0) << ','
     << (r.lower_bound_verdict ? 1 : 0);
  return os.str();
}

}  // namespace finc
