#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace krun::detail {

/// Contiguous [begin, end) ranges splitting [0, count) into at most `workers`
/// non-empty pieces.
inline std::vector<std::pair<std::size_t, std::size_t>> chunk_ranges(std::size_t count, unsigned workers) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  workers = std::max(1u, workers);
  const std::size_t step = (count + workers - 1) / workers;
  for (std::size_t begin = 0; begin < count; begin += step) out.emplace_back(begin, std::min(count, begin + step));
  return out;
}

/// Runs fn(i) for i in [0, tasks) on one thread each; inline when tasks == 1.
template <typename Fn>
void run_tasks(std::size_t tasks, Fn&& fn) {
  if (tasks <= 1) {
    if (tasks == 1) fn(std::size_t{0});
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(tasks);
  for (std::size_t i = 0; i < tasks; ++i) pool.emplace_back([&fn, i] { fn(i); });
}

/// Splits [0, count) into `workers` contiguous chunks and runs fn(begin, end)
/// on each. With one worker this is a plain call on the calling thread.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t step = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * step);
    const std::size_t end = std::min(count, begin + step);
    if (begin == end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

}  // namespace krun::detail
