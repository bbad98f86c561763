// finc: exact incidence-geometry and sum-product certification over F_q.
//
// Exit codes: 0 all certified, 1 certified-bound violation, 2 usage error,
// 3 resource guard.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>

#include "finc/instances.hpp"
#include "finc/report.hpp"

using namespace finc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty()) return;
    std::string resolved = path;
    const char* dir = std::getenv("FINC_OUTPUT_DIR");
    if (dir && !path.empty() && path.front() != '/')
      resolved = std::string(dir) + "/" + path;
    file.open(resolved);
    if (!file) throw std::invalid_argument("cannot open output: " + resolved);
    os = &file;
  }
  void line(const json& j) { (*os) << j.dump() << "\n"; }
  void raw(const std::string& s) { (*os) << s << "\n"; }
};

struct Common {
  std::string field;
  std::uint64_t seed = 0;
  bool no_timestamp = false;
  bool serial = false;
  std::string output;

  void attach(CLI::App* cmd) {
    cmd->add_option("--field", field, "field designator p or p^k")->required();
    cmd->add_option("--seed", seed, "master seed (default 0)");
    cmd->add_flag("--no-timestamp", no_timestamp,
                  "omit the timestamp so reruns are byte-identical");
    cmd->add_flag("--serial", serial, "use the serial reference kernels");
    cmd->add_option("--output", output,
                    "output file (default stdout; relative paths resolve "
                    "against $FINC_OUTPUT_DIR)");
  }
  kernels::Mode mode() const {
    return serial ? kernels::Mode::Serial : kernels::Mode::Parallel;
  }
  json header(const std::string& command, json params) const {
    json h;
    h["record"] = "header";
    h["command"] = command;
    h["field"] = field;
    h["seed"] = seed;
    h["serial"] = serial;
    h["params"] = std::move(params);
    if (!no_timestamp) h["timestamp"] = iso_timestamp();
    return h;
  }
};

std::vector<std::uint64_t> parse_u64_list(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoull(tok));
  return out;
}

std::vector<Elt> parse_elt_list(const Field& f, const std::string& csv) {
  std::vector<Elt> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoull(tok));
    f.check(out.back());
  }
  return out;
}

json summary_record(std::size_t trials, std::size_t failures, json extra = {}) {
  json s;
  s["record"] = "summary";
  s["trials"] = trials;
  s["passes"] = trials - failures;
  s["failures"] = failures;
  for (auto& [k, v] : extra.items()) s[k] = v;
  return s;
}

// ---------------------------------------------------------------- verify-graph

int cmd_verify_graph(const Common& c, unsigned dim,
                     const std::string& edges_path) {
  Field f = Field::parse(c.field);
  Output out(c.output);
  out.line(c.header("verify-graph", {{"dim", dim}, {"export_edges", edges_path}}));

  IncidenceGraph g = IncidenceGraph::build(f, dim, c.mode());
  bool regular = true;
  for (std::size_t i = 0; i < g.n(); ++i)
    regular = regular && g.row_sum(i) == g.degree();
  std::size_t loops = g.loop_count();
  SpectralCertificate cert = verify_spectral_identity(g, true, c.mode());

  bool eigen_ok = true;
  if (cert.numeric_second_eigenvalue)
    eigen_ok =
        std::abs(*cert.numeric_second_eigenvalue - cert.claimed_lambda) <= 1e-6;
  bool loops_ok =
      !f.odd_characteristic() || loops == f.q() + 1 || dim != 2;

  json rec;
  rec["record"] = "graph";
  rec["n"] = g.n();
  rec["degree"] = g.degree();
  rec["regular"] = regular;
  rec["loops"] = loops;
  if (f.odd_characteristic() && dim == 2) rec["expected_loops"] = f.q() + 1;
  rec["spectral"] = to_json(cert);
  rec["eigenvalue_within_1e-6"] = eigen_ok;
  out.line(rec);

  if (!edges_path.empty()) {
    std::ofstream ef(edges_path);
    g.write_edge_list(ef);
  }
  bool ok = regular && cert.identity_holds && eigen_ok && loops_ok;
  out.line(summary_record(1, ok ? 0 : 1));
  return ok ? kExitOk : kExitViolation;
}

// --------------------------------------------------------------------- mixing

int cmd_mixing(const Common& c, unsigned dim, unsigned trials) {
  Field f = Field::parse(c.field);
  Output out(c.output);
  out.line(c.header("mixing", {{"dim", dim}, {"trials", trials}}));

  IncidenceGraph g = IncidenceGraph::build(f, dim, c.mode());
  std::size_t failures = 0;
  double max_ratio = 0.0;
  for (unsigned t = 0; t < trials; ++t) {
    std::mt19937_64 rng(mix_seed(c.seed, t));
    auto B = random_vertex_subset(g, rng);
    auto C = random_vertex_subset(g, rng);
    BoundCertificate cert = mixing_check(g, B, C, c.mode());
    json rec = to_json(cert);
    rec["record"] = "trial";
    rec["trial"] = t;
    rec["B_size"] = B.size();
    rec["C_size"] = C.size();
    out.line(rec);
    if (!cert.verdict) ++failures;
    double lhs = std::abs(static_cast<double>(cert.observed) - cert.alt_main);
    if (cert.error_term > 0) max_ratio = std::max(max_ratio, lhs / cert.error_term);
  }
  out.line(summary_record(trials, failures, {{"max_ratio", max_ratio}}));
  return failures == 0 ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ incidence

PointSet load_points(const Field& f, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::vector<AffinePoint> pts;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) pts.push_back(parse_affine_point(f, line));
  return PointSet::of(f, std::move(pts));
}

LineSet load_lines(const Field& f, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::vector<AffineLine> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(parse_affine_line(f, line));
  return LineSet::of(f, std::move(lines));
}

int cmd_incidence(const Common& c, unsigned dim, unsigned trials,
                  bool full_grid, const std::string& points_path,
                  const std::string& lines_path, double alpha, double eps,
                  bool include_infinity) {
  Field f = Field::parse(c.field);
  Output out(c.output);
  out.line(c.header("incidence", {{"dim", dim},
                                  {"trials", trials},
                                  {"full_grid", full_grid},
                                  {"points", points_path},
                                  {"lines", lines_path},
                                  {"alpha", alpha},
                                  {"epsilon", eps},
                                  {"include_infinity", include_infinity}}));

  std::size_t failures = 0, count = 0;
  auto emit = [&](json rec, bool ok) {
    rec["record"] = "trial";
    rec["trial"] = count;
    out.line(rec);
    ++count;
    if (!ok) ++failures;
  };

  if (dim > 2 || include_infinity) {
    // projective route: random vertex subsets of the polarity graph; for
    // d = 2 with ideal elements included this is exploratory (the mixing
    // bound still applies; the affine Szemeredi-Trotter form is not claimed)
    IncidenceGraph g = IncidenceGraph::build(f, dim, c.mode());
    for (unsigned t = 0; t < trials; ++t) {
      std::mt19937_64 rng(mix_seed(c.seed, t));
      auto B = random_vertex_subset(g, rng);
      auto C = random_vertex_subset(g, rng);
      BoundCertificate cert = certify_hyperplane_bound(g, B, C);
      if (include_infinity && dim == 2)
        cert.status = "exploratory: ideal elements included";
      emit(to_json(cert), cert.verdict);
    }
  } else if (full_grid || !points_path.empty()) {
    PointSet P = full_grid ? PointSet::full_grid(f) : load_points(f, points_path);
    LineSet L = full_grid ? LineSet::all_lines(f) : load_lines(f, lines_path);
    std::uint64_t brute = count_incidences(P, L, CountStrategy::Brute, c.mode());
    std::uint64_t bucketed = count_incidences(P, L, CountStrategy::Bucketed);
    BoundCertificate cert = certify_theorem3(P, L, CountStrategy::Auto, c.mode());
    json rec = to_json(cert);
    rec["count_brute"] = brute;
    rec["count_bucketed"] = bucketed;
    rec["strategies_agree"] = brute == bucketed;
    bool ok = cert.verdict && brute == bucketed;
    if (alpha > 0) {
      RegimeCertificate rc = certify_corollary4(f, alpha, eps, P, L);
      rec["corollary4"] = to_json(rc);
      if (rc.status == "ok") ok = ok && rc.verdict;
    }
    emit(rec, ok);
  } else {
    for (unsigned t = 0; t < trials; ++t) {
      std::mt19937_64 rng(mix_seed(c.seed, t));
      PointSet P = random_point_set(f, rng);
      LineSet L = random_line_set(f, rng);
      std::uint64_t brute =
          count_incidences(P, L, CountStrategy::Brute, c.mode());
      std::uint64_t bucketed = count_incidences(P, L, CountStrategy::Bucketed);
      BoundCertificate cert =
          certify_theorem3(P, L, CountStrategy::Auto, c.mode());
      json rec = to_json(cert);
      rec["count_brute"] = brute;
      rec["count_bucketed"] = bucketed;
      rec["strategies_agree"] = brute == bucketed;
      bool ok = cert.verdict && brute == bucketed;
      if (alpha > 0) {
        RegimeCertificate rc = certify_corollary4(f, alpha, eps, P, L);
        rec["corollary4"] = to_json(rc);
        if (rc.status == "ok") ok = ok && rc.verdict;
      }
      emit(rec, ok);
    }
  }
  out.line(summary_record(count, failures));
  return failures == 0 ? kExitOk : kExitViolation;
}

// --------------------------------------------------------------------- elekes

int cmd_elekes(const Common& c, const std::string& set_csv,
               const std::string& set_file, unsigned trials,
               unsigned max_size, bool allow_zero) {
  Field f = Field::parse(c.field);
  Output out(c.output);
  out.line(c.header("elekes", {{"set", set_csv},
                               {"set_file", set_file},
                               {"trials", trials},
                               {"max_size", max_size},
                               {"allow_zero", allow_zero}}));

  std::vector<SubsetA> subsets;
  if (!set_csv.empty()) {
    subsets.push_back(SubsetA::of(f, parse_elt_list(f, set_csv)));
  } else if (!set_file.empty()) {
    std::ifstream in(set_file);
    if (!in) throw std::invalid_argument("cannot read " + set_file);
    std::vector<Elt> elems;
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) {
        elems.push_back(std::stoull(line));
        f.check(elems.back());
      }
    subsets.push_back(SubsetA::of(f, std::move(elems)));
  } else {
    for (unsigned t = 0; t < trials; ++t) {
      std::mt19937_64 rng(mix_seed(c.seed, t));
      subsets.push_back(random_subset(f, max_size, rng, allow_zero));
    }
  }

  std::size_t failures = 0;
  for (std::size_t t = 0; t < subsets.size(); ++t) {
    ElekesSystem sys = elekes_construct(subsets[t]);
    BoundCertificate cert = certify_elekes(subsets[t]);
    json rec = to_json(cert);
    rec["record"] = "trial";
    rec["trial"] = t;
    rec["size"] = subsets[t].size();
    rec["P_size"] = sys.points.size();
    rec["raw_line_count"] = sys.raw_line_count;
    rec["dedup_line_count"] = sys.dedup_line_count;
    out.line(rec);
    if (!cert.verdict) ++failures;
  }
  out.line(summary_record(subsets.size(), failures));
  return failures == 0 ? kExitOk : kExitViolation;
}

// ----------------------------------------------------------------- sumproduct

void next_combination_reports(const Field& f, unsigned max_size,
                              bool allow_even_q, std::size_t& total,
                              std::size_t& failures, double& min_ratio,
                              Output& out, bool emit_all) {
  std::vector<Elt> combo;
  std::uint64_t q = f.q();
  // iterative enumeration of all subsets of size 1..max_size
  std::function<void(Elt, unsigned)> rec = [&](Elt start, unsigned remaining) {
    if (!combo.empty()) {
      SumProductReport r =
          certify_theorem5(SubsetA{f, combo}, allow_even_q);
      ++total;
      bool ok = r.theorem5_verdict && r.lower_bound_verdict &&
                r.quadratic_step_holds;
      if (!ok) ++failures;
      min_ratio = std::min(min_ratio, r.ratio);
      if (emit_all || !ok) {
        json j = to_json(r);
        j["record"] = "trial";
        j["set"] = combo;
        out.line(j);
      }
    }
    if (remaining == 0) return;
    for (Elt e = start; e < q; ++e) {
      combo.push_back(e);
      rec(e + 1, remaining - 1);
      combo.pop_back();
    }
  };
  rec(0, max_size);
}

int cmd_sumproduct(const Common& c, const std::string& set_csv,
                   const std::string& family_name_str,
                   const std::string& sizes_csv, unsigned trials,
                   bool exhaustive, unsigned max_size, bool allow_even_q,
                   bool emit_all, const std::string& format) {
  Field f = Field::parse(c.field);
  Output out(c.output);
  json params = {{"set", set_csv},        {"family", family_name_str},
                 {"sizes", sizes_csv},    {"trials", trials},
                 {"exhaustive", exhaustive}, {"max_size", max_size},
                 {"allow_even_q", allow_even_q}, {"format", format}};

  if (format == "csv") {
    out.raw("# command=sumproduct field=" + c.field +
            " seed=" + std::to_string(c.seed) +
            (c.no_timestamp ? "" : " timestamp=" + iso_timestamp()));
    out.raw(sweep_csv_header());
  } else {
    out.line(c.header("sumproduct", params));
  }

  std::size_t total = 0, failures = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  auto note = [&](const SumProductReport& r) {
    ++total;
    bool ok =
        r.theorem5_verdict && r.lower_bound_verdict && r.quadratic_step_holds;
    if (!ok) ++failures;
    min_ratio = std::min(min_ratio, r.ratio);
    if (format == "csv") {
      out.raw(sweep_csv_row(r));
    } else {
      json j = to_json(r);
      j["record"] = "trial";
      out.line(j);
    }
  };

  if (exhaustive) {
    next_combination_reports(f, max_size, allow_even_q, total, failures,
                             min_ratio, out, emit_all && format != "csv");
  } else if (!set_csv.empty()) {
    note(certify_theorem5(SubsetA::of(f, parse_elt_list(f, set_csv)),
                          allow_even_q));
  } else if (!family_name_str.empty()) {
    std::vector<std::uint64_t> sizes =
        parse_u64_list(sizes_csv.empty() ? "4" : sizes_csv);
    auto reports = experiment_sweep(f, parse_family(family_name_str), sizes,
                                    trials, c.seed, allow_even_q);
    for (const auto& r : reports) note(r);
  } else {
    throw CLI::ValidationError(
        "sumproduct needs --set, --family, or --exhaustive");
  }

  if (format == "csv") {
    out.raw("# subsets=" + std::to_string(total) +
            " violations=" + std::to_string(failures));
  } else {
    out.line(summary_record(
        total, failures,
        {{"min_ratio", total ? min_ratio : 0.0}}));
  }
  return failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact incidence-geometry and sum-product certificates over F_q"};
  app.require_subcommand(1);

  Common common;

  auto* vg = app.add_subcommand("verify-graph",
                                "build the polarity graph, check regularity, "
                                "loops, and the exact matrix identity");
  unsigned vg_dim = 2;
  std::string vg_edges;
  common.attach(vg);
  vg->add_option("--dim", vg_dim, "projective dimension (default 2)");
  vg->add_option("--export-edges", vg_edges, "write the sorted edge list here");

  auto* mx = app.add_subcommand("mixing",
                                "random-set trials of the mixing inequality");
  unsigned mx_dim = 2, mx_trials = 100;
  common.attach(mx);
  mx->add_option("--dim", mx_dim, "projective dimension (default 2)");
  mx->add_option("--trials", mx_trials, "trial count (default 100)");

  auto* inc = app.add_subcommand("incidence",
                                 "point-line incidence bound certificates");
  unsigned inc_dim = 2, inc_trials = 100;
  bool inc_full = false, inc_inf = false;
  std::string inc_points, inc_lines;
  double inc_alpha = 0, inc_eps = 0;
  common.attach(inc);
  inc->add_option("--dim", inc_dim, "dimension; > 2 uses hyperplane duals");
  inc->add_option("--trials", inc_trials, "random trial count (default 100)");
  inc->add_flag("--full-grid", inc_full, "use all points and all lines");
  inc->add_option("--points", inc_points, "point file, one (x,y) per line");
  inc->add_option("--lines", inc_lines, "line file, one y=s*x+c or x=c per line");
  inc->add_option("--alpha", inc_alpha, "also certify the N=q^alpha regime bound");
  inc->add_option("--epsilon", inc_eps, "epsilon for the regime bound");
  inc->add_flag("--include-infinity", inc_inf,
                "exploratory: draw from all projective classes");

  auto* el = app.add_subcommand("elekes",
                                "incidence floor of the Elekes system");
  std::string el_set, el_file;
  unsigned el_trials = 0, el_max = 8;
  bool el_zero = false;
  common.attach(el);
  el->add_option("--set", el_set, "comma-separated element encodings");
  el->add_option("--set-file", el_file, "one element encoding per line");
  el->add_option("--trials", el_trials, "random subset trials");
  el->add_option("--max-size", el_max, "max |A| for random subsets (default 8)");
  el->add_flag("--allow-zero", el_zero, "let random subsets contain 0");

  auto* sp = app.add_subcommand("sumproduct",
                                "sum-product certificates and sweeps");
  std::string sp_set, sp_family, sp_sizes, sp_format = "json";
  unsigned sp_trials = 10, sp_max = 4;
  bool sp_exh = false, sp_even = false, sp_all = false;
  common.attach(sp);
  sp->add_option("--set", sp_set, "comma-separated element encodings");
  sp->add_option("--family", sp_family,
                 "uniform-random | interval | geometric | subgroup | subfield");
  sp->add_option("--sizes", sp_sizes, "comma-separated target sizes");
  sp->add_option("--trials", sp_trials, "trials per size (default 10)");
  sp->add_flag("--exhaustive", sp_exh, "scan every subset up to --max-size");
  sp->add_option("--max-size", sp_max, "exhaustive size cap (default 4)");
  sp->add_flag("--allow-even-q", sp_even,
               "override the odd-q hypothesis; reports marked non-theorem");
  sp->add_flag("--emit-all", sp_all, "stream every exhaustive record");
  sp->add_option("--format", sp_format, "json (default) or csv");

  try {
    app.parse(argc, argv);
    if (vg->parsed()) return cmd_verify_graph(common, vg_dim, vg_edges);
    if (mx->parsed()) return cmd_mixing(common, mx_dim, mx_trials);
    if (inc->parsed())
      return cmd_incidence(common, inc_dim, inc_trials, inc_full, inc_points,
                           inc_lines, inc_alpha, inc_eps, inc_inf);
    if (el->parsed())
      return cmd_elekes(common, el_set, el_file, el_trials, el_max, el_zero);
    if (sp->parsed())
      return cmd_sumproduct(common, sp_set, sp_family, sp_sizes, sp_trials,
                            sp_exh, sp_max, sp_even, sp_all, sp_format);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
