// Serial references against the OpenMP kernels. Each parallel benchmark
// checks its answer against the serial one before timing.

#include <benchmark/benchmark.h>

#include <random>

#include "crn/core/format.hpp"
#include "crn/core/structure.hpp"
#include "crn/embedding/embedding.hpp"
#include "crn/families/families.hpp"
#include "crn/kernels/minor_scan.hpp"
#include "crn/kernels/multistart.hpp"
#include "crn/kernels/sen_scan.hpp"
#include "crn/numeric/witness.hpp"

using namespace crn;

namespace {

ReactionNetwork open_k(int m, int n) { return fully_open_extension(generate(FamilySpec::of(Family::K, m, n))); }

// Full scans: K(2, n) for even n has no negatively oriented relevant SEN.
const ReactionNetwork& sen_host() {
  static const auto net = non_flow_subnetwork(open_k(2, 12));
  return net;
}

bool negative_relevant(const SquareEmbeddedNetwork& sen) {
  return sen.orientation < 0 && relevance(sen.reactions, sen.size()).relevant;
}

std::size_t serial_count(const ReactionNetwork& net, std::size_t k) {
  std::size_t n = 0;
  for_each_sen(net, k, [&](const SquareEmbeddedNetwork& sen) {
    n += negative_relevant(sen);
    return true;
  });
  return n;
}

std::size_t total_count(const ReactionNetwork& net, std::size_t k) {
  return count_sens(net, k, [](const SquareEmbeddedNetwork&) { return true; }, 1);
}

void BM_sen_scan_serial(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial_count(sen_host(), k));
  state.counters["sens"] = static_cast<double>(total_count(sen_host(), k));
}

void BM_sen_scan_parallel(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  if (count_sens(sen_host(), k, negative_relevant, threads) != serial_count(sen_host(), k)) {
    state.SkipWithError("parallel count differs from the serial scan");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(count_sens(sen_host(), k, negative_relevant, threads));
  state.counters["sens"] = static_cast<double>(total_count(sen_host(), k));
}

std::vector<std::int64_t> flatten(const IntMatrix& m) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j).get_si());
  return out;
}

// Injective, so every product is examined.
const MinorProblem& minor_problem() {
  static const MinorProblem p = [] {
    const auto net = open_k(2, 8);
    const auto sd = stoich(net);
    return make_minor_problem(net.species_count(), net.reaction_count(), sd.rank, flatten(sd.gamma),
                              flatten(sd.reactant));
  }();
  return p;
}

void BM_minor_scan_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_minors_serial(minor_problem()).checked);
  state.counters["products"] = static_cast<double>(minor_problem().size());
}

void BM_minor_scan_parallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const auto a = scan_minors_serial(minor_problem());
  const auto b = scan_minors_parallel(minor_problem(), threads);
  if (a.first != b.first || a.conflict != b.conflict || a.checked != b.checked) {
    state.SkipWithError("parallel minor scan differs from the serial scan");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(scan_minors_parallel(minor_problem(), threads).checked);
  state.counters["products"] = static_cast<double>(minor_problem().size());
}

struct MultistartCase {
  MassActionSystem sys;
  std::vector<std::vector<double>> starts;
};

const MultistartCase& multistart_case() {
  static const MultistartCase c = [] {
    const auto net = parse_network("0 <-> A\n0 <-> B\n0 <-> C\n2 A <-> A + B\nA + C <-> B + C");
    std::vector<Rational> kappa;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(1, 50);
    for (std::size_t k = 0; k < net.reaction_count(); ++k) kappa.emplace_back(d(rng), 10);
    WitnessOptions o;
    o.grid.clear();
    for (int i = -8; i <= 8; ++i) o.grid.push_back(std::pow(10.0, i / 4.0));
    o.max_starts = 1u << 14;
    return MultistartCase{mass_action_system(net, kappa), start_points(3, o)};
  }();
  return c;
}

void BM_multistart_serial(benchmark::State& state) {
  const auto& c = multistart_case();
  for (auto _ : state) benchmark::DoNotOptimize(multistart_serial(c.sys, c.starts, {}).size());
  state.counters["starts"] = static_cast<double>(c.starts.size());
}

void BM_multistart_parallel(benchmark::State& state) {
  const auto& c = multistart_case();
  const int threads = static_cast<int>(state.range(0));
  const auto a = multistart_serial(c.sys, c.starts, {});
  const auto b = multistart_parallel(c.sys, c.starts, {}, threads);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].converged != b[i].converged || a[i].x != b[i].x) {
      state.SkipWithError("parallel multistart differs from the serial run");
      return;
    }
  for (auto _ : state) benchmark::DoNotOptimize(multistart_parallel(c.sys, c.starts, {}, threads).size());
  state.counters["starts"] = static_cast<double>(c.starts.size());
}

void thread_args(benchmark::internal::Benchmark* b) {
  for (int t : {1, 2, 4, 8}) b->Arg(t);
}

void sen_args(benchmark::internal::Benchmark* b) {
  for (int k : {4, 6})
    for (int t : {1, 2, 4, 8}) b->Args({k, t});
}

}  // namespace

BENCHMARK(BM_sen_scan_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sen_scan_parallel)->Apply(sen_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_minor_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_minor_scan_parallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_multistart_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multistart_parallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
