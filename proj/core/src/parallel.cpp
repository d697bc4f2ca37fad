#include "teim/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace teim {

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("TEIM_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1 && static_cast<unsigned>(cap) < hw) {
        hw = static_cast<unsigned>(cap);
      }
    } catch (...) {
      // A malformed value falls back to the hardware default.
    }
  }
  return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  const unsigned workers = worker_count();
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(n < workers ? n : workers);
  pool.reserve(count);
  for (unsigned w = 0; w < count; ++w) {
    pool.emplace_back([&]() {
      try {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          body(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        // Drain remaining work so the other workers finish quickly.
        next.store(n);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace teim
