#include "quasichoice/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace qc {

namespace {
std::atomic<int> g_threads{1};
}

int thread_count() { return g_threads.load(std::memory_order_relaxed); }

void set_thread_count(int count) {
  g_threads.store(std::clamp(count, 1, 64), std::memory_order_relaxed);
}

std::size_t parallel_chunks(
    std::size_t total,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (total == 0) return 0;
  std::size_t workers = static_cast<std::size_t>(thread_count());
  workers = std::min(workers, total);
  if (workers <= 1) {
    fn(0, total, 0);
    return 1;
  }
  std::size_t per = (total + workers - 1) / workers;
  std::size_t chunks = (total + per - 1) / per;
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t idx = 0; idx < chunks; ++idx) {
    std::size_t begin = idx * per;
    std::size_t end = std::min(total, begin + per);
    pool.emplace_back([&fn, begin, end, idx] { fn(begin, end, idx); });
  }
  for (auto& t : pool) t.join();
  return chunks;
}

}  // namespace qc
