#ifndef EPICONJ_DETAIL_PARALLEL_HPP
#define EPICONJ_DETAIL_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace epiconj::detail {

/// Number of worker threads, bounded by the EPICONJ_THREADS environment
/// variable when it is set to a positive integer.
inline std::size_t thread_budget() {
  if (const char* env = std::getenv("EPICONJ_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  const std::size_t hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs f(chunk_index, begin, end) over [0, n) split into contiguous chunks.
/// Results must be merged by chunk index afterwards so that the outcome does
/// not depend on scheduling.
template <typename F>
void parallel_chunks(std::size_t n, F&& f) {
  const std::size_t workers = std::min(thread_budget(), n == 0 ? std::size_t{1} : n);
  if (workers <= 1 || n < 2) {
    f(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) {
      break;
    }
    threads.emplace_back([&f, w, begin, end] { f(w, begin, end); });
  }
  for (auto& t : threads) {
    t.join();
  }
}

}  // namespace epiconj::detail

#endif  // EPICONJ_DETAIL_PARALLEL_HPP
