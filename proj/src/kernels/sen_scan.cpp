#include "crn/kernels/sen_scan.hpp"

#include <omp.h>

#include <atomic>
#include <limits>
#include <vector>

#include "crn/core/combinatorics.hpp"

namespace crn {

namespace {

int team_size(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

std::optional<SquareEmbeddedNetwork> find_first_sen(const ReactionNetwork& net, std::size_t k,
                                                    const SenPredicate& accept, int threads) {
  if (k == 0 || k > net.species_count() || k > net.reaction_count()) return std::nullopt;
  const auto subsets = all_combinations(net.species_count(), k);
  const auto n = static_cast<std::ptrdiff_t>(subsets.size());
  std::vector<std::optional<SquareEmbeddedNetwork>> found(subsets.size());
  std::atomic<std::ptrdiff_t> best{std::numeric_limits<std::ptrdiff_t>::max()};

#pragma omp parallel for schedule(dynamic) num_threads(team_size(threads))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    for_each_sen_on_species(net, subsets[i], [&](const SquareEmbeddedNetwork& sen) {
      if (!accept(sen)) return true;
      found[i] = sen;
      std::ptrdiff_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
      return false;
    });
  }

  const std::ptrdiff_t b = best.load();
  if (b == std::numeric_limits<std::ptrdiff_t>::max()) return std::nullopt;
  return found[b];
}

std::size_t count_sens(const ReactionNetwork& net, std::size_t k, const SenPredicate& accept, int threads) {
  if (k == 0 || k > net.species_count() || k > net.reaction_count()) return 0;
  const auto subsets = all_combinations(net.species_count(), k);
  const auto n = static_cast<std::ptrdiff_t>(subsets.size());
  std::size_t total = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(team_size(threads))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for_each_sen_on_species(net, subsets[i], [&](const SquareEmbeddedNetwork& sen) {
      if (accept(sen)) ++total;
      return true;
    });
  }
  return total;
}

}  // namespace crn
