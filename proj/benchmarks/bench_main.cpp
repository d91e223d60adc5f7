#include <benchmark/benchmark.h>

#include "diq/corpus.hpp"
#include "diq/groebner.hpp"
#include "diq/ideal_ops.hpp"
#include "diq/localize.hpp"
#include "diq/parse.hpp"

using namespace diq;

namespace {

Ideal make(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(parse_poly(g, r));
  return Ideal(r, std::move(out));
}

void BM_TwistedCubicLex(benchmark::State& state) {
  auto r = RingCtx::make({"x", "y", "z"});
  auto lex = std::make_shared<const MonomialOrder>(MonomialOrder::lex(3));
  std::vector<Polynomial> gens{parse_poly("x^2 - y", r), parse_poly("x^3 - z", r)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, lex));
}
BENCHMARK(BM_TwistedCubicLex);

void BM_CyclicFourGrevlex(benchmark::State& state) {
  auto r = RingCtx::make({"a", "b", "c", "d"});
  std::vector<Polynomial> gens{
      parse_poly("a + b + c + d", r), parse_poly("a*b + b*c + c*d + d*a", r),
      parse_poly("a*b*c + b*c*d + c*d*a + d*a*b", r), parse_poly("a*b*c*d - 1", r)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, r->default_order()));
}
BENCHMARK(BM_CyclicFourGrevlex)->Unit(benchmark::kMillisecond);

void BM_LpaIsolatedI1(benchmark::State& state) {
  const Ideal i = i1_family(static_cast<unsigned>(state.range(0))).ideal;
  for (auto _ : state) {
    // Fresh copy per iteration so cached bases do not carry over.
    Ideal fresh(i.ring(), i.generators());
    benchmark::DoNotOptimize(lpa(fresh, PrimeInput(make(i.ring(), {"x"}))));
  }
}
BENCHMARK(BM_LpaIsolatedI1)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_LpaEmbeddedI1(benchmark::State& state) {
  const Ideal i = i1_family(static_cast<unsigned>(state.range(0))).ideal;
  for (auto _ : state) {
    Ideal fresh(i.ring(), i.generators());
    benchmark::DoNotOptimize(lpa(fresh, PrimeInput(make(i.ring(), {"x", "y"}))));
  }
}
BENCHMARK(BM_LpaEmbeddedI1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_QuotientByMaximal(benchmark::State& state) {
  auto r = RingCtx::make({"x", "y", "z"});
  const Ideal i = make(r, {"x^3*y - z^2", "x*y^3 - z", "x^2*z^2 - y"});
  const Ideal m = make(r, {"x", "y", "z"});
  for (auto _ : state) {
    Ideal fresh(r, i.generators());
    benchmark::DoNotOptimize(quotient(fresh, m));
  }
}
BENCHMARK(BM_QuotientByMaximal)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
