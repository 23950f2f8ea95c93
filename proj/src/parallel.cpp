#include "oudisp/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace oudisp {

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* cap = std::getenv("OU_DISPERSION_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < n) n = static_cast<unsigned>(v);
  }
  if (jobs < n) n = static_cast<unsigned>(jobs);
  return n > 0 ? n : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const unsigned workers = worker_count(n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next(0);
  std::exception_ptr err;
  std::atomic<bool> failed(false);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) err = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace oudisp
