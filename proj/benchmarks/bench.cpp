#include <benchmark/benchmark.h>

#include "slowcf/cuntz.hpp"
#include "slowcf/jump.hpp"
#include "slowcf/scfa.hpp"
#include "slowcf/sternbrocot.hpp"
#include "slowcf/symbolic.hpp"

using namespace slowcf;

namespace {

const QuadraticSurd& sample_surd() {
  static const QuadraticSurd x = QuadraticSurd::parse("(13+7*sqrt(19))/57");
  return x;
}

void BM_EncodeSurd(benchmark::State& state) {
  Scfa s = builtin("fN:" + std::to_string(state.range(0)));
  QuadraticSurd x = sample_surd();
  Int f = x.floor();
  x = QuadraticSurd(x.a() - f * x.c(), x.b(), x.c(), x.d());
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_surd(s, x));
  }
}
BENCHMARK(BM_EncodeSurd)->Arg(2)->Arg(4)->Arg(6);

void BM_DecodeRoundtrip(benchmark::State& state) {
  Scfa s = builtin("even");
  QuadraticSurd x = sample_surd();
  Int f = x.floor();
  x = QuadraticSurd(x.a() - f * x.c(), x.b(), x.c(), x.d());
  Itinerary it = encode_surd(s, x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(s, it));
  }
}
BENCHMARK(BM_DecodeRoundtrip);

void BM_StreamEncode(benchmark::State& state) {
  Scfa s = builtin("fN:2");
  for (auto _ : state) {
    RcfStream src = RcfStream::e_minus_2();
    benchmark::DoNotOptimize(encode_stream(s, src, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_StreamEncode)->Arg(16)->Arg(64);

void BM_BuildTransducer(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_transducer_fn(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildTransducer)->Arg(2)->Arg(4)->Arg(6);

void BM_PartialQuotients(benchmark::State& state) {
  Scfa s = builtin("farey");
  JumpSpec gauss(s, 2, 2);
  QuadraticSurd x = sample_surd();
  Int f = x.floor();
  x = QuadraticSurd(x.a() - f * x.c(), x.b(), x.c(), x.d());
  Itinerary it = encode_surd(s, x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_quotients(gauss, it, 30));
  }
}
BENCHMARK(BM_PartialQuotients);

} // namespace

BENCHMARK_MAIN();
