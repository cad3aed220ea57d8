#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qbarrier {

/// out[k] = fn(k) for k in [0, count).  Work is split into contiguous chunks,
/// one per hardware thread, so results never depend on scheduling.  The first
/// exception (by index) is rethrown after all workers finish.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, Fn&& fn, std::size_t min_chunk = 64) {
  std::vector<R> out(count);
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, std::max<std::size_t>(1, count / std::max<std::size_t>(1, min_chunk)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        try {
          for (std::size_t k = lo; k < hi; ++k) out[k] = fn(k);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace qbarrier
