// Times the serial reference kernels against the OpenMP ones on the same
// inputs and checks they agree.

#include <chrono>
#include <cstdio>
#include <random>

#include "finc/instances.hpp"

using namespace finc;
using kernels::Mode;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0)
      .count();
}

template <class F>
double timed(F&& fn) {
  auto t0 = clock_type::now();
  fn();
  return ms_since(t0);
}

void row(const char* name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-28s %10.2f ms %10.2f ms   %5.2fx   %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, agree ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 61;
  Field f = Field::make(p, 1);
  std::printf("field F_%llu, d=2\n", static_cast<unsigned long long>(f.q()));
  std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  IncidenceGraph gs = IncidenceGraph::build(f, 2, Mode::Serial);
  IncidenceGraph gp = gs;  // placeholder, rebuilt below

  double build_s = timed([&] { gs = IncidenceGraph::build(f, 2, Mode::Serial); });
  double build_p =
      timed([&] { gp = IncidenceGraph::build(f, 2, Mode::Parallel); });
  bool build_ok =
      std::equal(gs.bits().begin(), gs.bits().end(), gp.bits().begin());
  row("adjacency build", build_s, build_p, build_ok);

  bool id_s = false, id_p = false;
  double gram_s = timed([&] {
    id_s = kernels::gram_identity(gs.bits(), gs.n(), gs.words(), gs.mu(),
                                  gs.lambda_squared(), Mode::Serial);
  });
  double gram_p = timed([&] {
    id_p = kernels::gram_identity(gs.bits(), gs.n(), gs.words(), gs.mu(),
                                  gs.lambda_squared(), Mode::Parallel);
  });
  row("gram identity check", gram_s, gram_p, id_s && id_p);

  std::mt19937_64 rng(1);
  std::vector<std::uint32_t> B(gs.n()), C;
  for (std::uint32_t i = 0; i < gs.n(); ++i) B[i] = i;
  auto cs = sample_distinct(rng, gs.n(), gs.n() / 2);
  C.assign(cs.begin(), cs.end());
  std::vector<std::uint64_t> cmask(gs.words(), 0);
  for (auto v : C) cmask[v >> 6] |= std::uint64_t{1} << (v & 63);

  std::uint64_t e_s = 0, e_p = 0;
  double pc_s = timed([&] {
    for (int i = 0; i < 200; ++i)
      e_s = kernels::pair_count(gs.bits(), gs.words(), B, cmask, Mode::Serial);
  });
  double pc_p = timed([&] {
    for (int i = 0; i < 200; ++i)
      e_p = kernels::pair_count(gs.bits(), gs.words(), B, cmask, Mode::Parallel);
  });
  row("pair count e(B,C) x200", pc_s, pc_p, e_s == e_p);

  PointSet P = PointSet::full_grid(f);
  LineSet L = LineSet::all_lines(f);
  std::uint64_t c_s = 0, c_p = 0;
  double inc_s = timed([&] {
    c_s = kernels::incidence_count_brute(f, P.pts, L.lines, Mode::Serial);
  });
  double inc_p = timed([&] {
    c_p = kernels::incidence_count_brute(f, P.pts, L.lines, Mode::Parallel);
  });
  row("brute incidence count", inc_s, inc_p, c_s == c_p);

  return (build_ok && id_s && id_p && e_s == e_p && c_s == c_p) ? 0 : 1;
}
