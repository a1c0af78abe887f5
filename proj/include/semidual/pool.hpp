#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace semidual {

// Worker count: SEMIDUAL_THREADS when set and positive, else the hardware concurrency.
inline int pool_size() {
  if (const char* e = std::getenv("SEMIDUAL_THREADS")) {
    int n = std::atoi(e);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Evaluates fn(0..n-1) on a bounded pool; results come back in index order and
// the first exception (by index) is rethrown.
template <class T>
std::vector<T> parallel_map(int n, const std::function<T(int)>& fn) {
  std::vector<std::optional<T>> out(n);
  std::vector<std::exception_ptr> err(n);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i; (i = next++) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        err[i] = std::current_exception();
      }
    }
  };
  int k = std::min(pool_size(), n);
  std::vector<std::thread> ts;
  for (int t = 1; t < k; ++t) ts.emplace_back(work);
  work();
  for (auto& t : ts) t.join();
  std::vector<T> res;
  for (int i = 0; i < n; ++i) {
    if (err[i]) std::rethrow_exception(err[i]);
    res.push_back(std::move(*out[i]));
  }
  return res;
}

}  // namespace semidual
