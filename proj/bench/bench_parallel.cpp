// Times the OpenMP kernels against their serial twins and checks that both
// produce bit-identical results.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#include "adsosc/oracle.hpp"
#include "adsosc/thermo.hpp"

using namespace adsosc;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  const std::vector<double> lambdas = {0.0, 0.005, 0.01, 0.02};
  const PhysicalParams base = figure_params(0.0);
  std::vector<thermo::SweepRow> par, ser;
  const double t_par = seconds([&] { par = thermo::figure_sweep(base, lambdas, 0.05, 10.0, 200000); });
  const double t_ser = seconds([&] { ser = thermo::figure_sweep_serial(base, lambdas, 0.05, 10.0, 200000); });
  bool ok = par.size() == ser.size();
  for (std::size_t i = 0; ok && i < par.size(); ++i) {
    ok = same(par[i].point.U, ser[i].point.U) && same(par[i].point.C, ser[i].point.C) &&
         par[i].flag == ser[i].flag;
  }
  std::printf("figure_sweep   parallel %.3f s  serial %.3f s  speedup %.2f  identical %s\n", t_par,
              t_ser, t_ser / t_par, ok ? "yes" : "NO");

  const auto cases = oracle::standard_cases(3);
  std::vector<oracle::GridRow> gp, gs;
  const double o_par = seconds([&] { gp = oracle::verify_grid(cases, 4); });
  const double o_ser = seconds([&] { gs = oracle::verify_grid_serial(cases, 4); });
  bool ok2 = gp.size() == gs.size();
  for (std::size_t i = 0; ok2 && i < gp.size(); ++i) ok2 = same(gp[i].eps_oracle, gs[i].eps_oracle);
  std::printf("verify_grid    parallel %.3f s  serial %.3f s  speedup %.2f  identical %s\n", o_par,
              o_ser, o_ser / o_par, ok2 ? "yes" : "NO");
  return ok && ok2 ? 0 : 1;
}
