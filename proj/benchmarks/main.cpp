#include <benchmark/benchmark.h>

#include "forge/canonical.hpp"
#include "forge/eval.hpp"
#include "forge/fcf_gen.hpp"
#include "forge/notation.hpp"
#include "forge/zeta.hpp"

namespace {

void BM_EncodeFcf(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(forge::encode_fcf(forge::Natural(n)));
    n = n % 65536 + 1;
  }
}
BENCHMARK(BM_EncodeFcf);

void BM_EncodeScf(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(forge::encode_scf(forge::Natural(n)));
    n = n % 65536 + 1;
  }
}
BENCHMARK(BM_EncodeScf);

void BM_FcfGenerate(benchmark::State& state) {
  const auto target = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(forge::fcf_generate(target));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(target));
}
BENCHMARK(BM_FcfGenerate)->Arg(1 << 8)->Arg(1 << 12)->Arg(1 << 16);

void BM_SiftPrimes(benchmark::State& state) {
  const auto bits = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(forge::sift_primes(bits));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          (std::int64_t{1} << bits));
}
BENCHMARK(BM_SiftPrimes)->Arg(8)->Arg(10)->Arg(12)->Arg(14);

void BM_ParseInfix(benchmark::State& state) {
  const forge::Expr* e = forge::encode_fcf(forge::Natural(65535));
  std::string text = forge::print(e, forge::Notation::Infix);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forge::parse(text, forge::Notation::Infix));
  }
}
BENCHMARK(BM_ParseInfix);

void BM_Evaluate(benchmark::State& state) {
  const forge::Expr* e =
      forge::parse("x^(x^(x+1))+x^x*x+1", forge::Notation::Infix);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forge::evaluate(e));
  }
}
BENCHMARK(BM_Evaluate);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
