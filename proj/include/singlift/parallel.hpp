#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace singlift {

// Runs fn(i) for i in [0, jobs) on up to `threads` workers and returns the
// results indexed by i. Work is handed out through an atomic counter but the
// output only depends on the job decomposition, so any reduction done in job
// order afterwards is byte-stable across thread counts.
template <class T, class Fn>
std::vector<T> parallel_map_indexed(std::size_t jobs, int threads, Fn fn) {
  std::vector<std::optional<T>> slots(jobs);
  if (jobs > 0) {
    if (threads < 2 || jobs == 1) {
      for (std::size_t i = 0; i < jobs; ++i) slots[i] = fn(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::atomic<bool> failed{false};
      std::exception_ptr error;
      std::mutex error_mutex;
      auto worker = [&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= jobs || failed.load()) return;
          try {
            slots[i] = fn(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!failed.exchange(true)) error = std::current_exception();
            return;
          }
        }
      };
      std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(threads), jobs);
      std::vector<std::thread> pool;
      pool.reserve(n);
      for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      if (failed.load()) std::rethrow_exception(error);
    }
  }
  std::vector<T> results;
  results.reserve(jobs);
  for (auto& s : slots) results.push_back(std::move(*s));
  return results;
}

}  // namespace singlift
