#include <benchmark/benchmark.h>

#include <random>

#include "crb/dilog.hpp"
#include "crb/simplicial.hpp"
#include "crb/wedge.hpp"
#include "crbcli/catalog.hpp"
#include "crbcli/moves.hpp"

namespace {

using namespace crb;

void BM_BlochWignerD(benchmark::State& state) {
  long prec = state.range(0);
  ComplexBall z = ComplexBall::exact(Rational(1, 3), Rational(7, 5), prec);
  for (auto _ : state) benchmark::DoNotOptimize(bw_D(z, prec));
}
BENCHMARK(BM_BlochWignerD)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_DeltaVanishing(benchmark::State& state) {
  auto entry = cli::catalog_entry("whitehead");
  PreBlochElement beta = beta_triangulation(entry.tri);
  for (auto _ : state) {
    WedgeElement w = delta_map(beta);
    MultiplicativeBasis b = build_mult_basis(wedge_entries(w), entry.tri.field);
    benchmark::DoNotOptimize(wedge_is_zero(w, b));
  }
}
BENCHMARK(BM_DeltaVanishing);

void BM_CertificateReplay(benchmark::State& state) {
  auto entry = cli::catalog_entry("fig8-rep2");
  PreBlochElement beta = beta_triangulation(entry.tri);
  for (auto _ : state) {
    auto out = cli::run_certificate(beta, *entry.certificate, Mode::Extended);
    if (!out.verified) state.SkipWithError("certificate rejected");
  }
}
BENCHMARK(BM_CertificateReplay);

void BM_Move23(benchmark::State& state) {
  std::mt19937 rng(7);
  Triangulation t = cli::random_bipyramid(rng);
  for (auto _ : state) benchmark::DoNotOptimize(cli::apply_move_23(t, 0));
}
BENCHMARK(BM_Move23);

void BM_TriangulationD(benchmark::State& state) {
  auto entry = cli::catalog_entry("whitehead");
  PreBlochElement beta = beta_triangulation(entry.tri);
  for (auto _ : state) benchmark::DoNotOptimize(D_of_element(beta, 128));
}
BENCHMARK(BM_TriangulationD);

}  // namespace

BENCHMARK_MAIN();
