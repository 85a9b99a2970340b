#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace qaoa1 {

// Worker count: `requested` when positive, else $QAOA1_THREADS, else the
// hardware concurrency (at least 1).
std::size_t resolve_threads(std::size_t requested);

// Runs body(worker, index) for index in [0, count) on `threads` workers.
// Index k always goes to worker k % threads, so any per-worker state is used
// on a fixed set of indices; results written by index are independent of the
// thread count. The first exception thrown by a worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(std::size_t{0}, k);
    return;
  }
  if (threads > count) threads = count;
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < count; k += threads) body(w, k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace qaoa1
