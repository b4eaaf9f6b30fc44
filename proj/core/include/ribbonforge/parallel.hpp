#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ribbonforge {

/// Worker count: RIBBONFORGE_THREADS when set, else hardware concurrency
/// capped at 8, at least 1.
int worker_count();

/// Splits [0, n) into per-worker chunks, reduces each chunk in index order,
/// then folds the chunk results in chunk order. The result is identical
/// for every worker count.
template <typename T, typename Fn, typename Combine>
T parallel_reduce(std::uint64_t n, T init, Fn item, Combine combine, std::uint64_t serial_cutoff = 4096) {
  int workers = worker_count();
  if (n < serial_cutoff || workers <= 1) {
    T acc = init;
    for (std::uint64_t i = 0; i < n; ++i) acc = combine(std::move(acc), item(i));
    return acc;
  }
  std::uint64_t chunk = (n + workers - 1) / workers;
  std::vector<T> partial(workers, init);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      std::uint64_t lo = w * chunk;
      std::uint64_t hi = std::min<std::uint64_t>(n, lo + chunk);
      T acc = init;
      for (std::uint64_t i = lo; i < hi; ++i) acc = combine(std::move(acc), item(i));
      partial[w] = std::move(acc);
    });
  }
  for (auto& t : threads) t.join();
  T acc = init;
  for (int w = 0; w < workers; ++w) acc = combine(std::move(acc), std::move(partial[w]));
  return acc;
}

}  // namespace ribbonforge
