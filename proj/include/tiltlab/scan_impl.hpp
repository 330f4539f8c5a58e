#pragma once

#include <exception>
#include <mutex>

namespace tiltlab {

template <typename T>
std::vector<T> index_map(std::size_t count, const std::function<T(std::size_t)>& fn, Exec exec) {
  std::vector<T> out(count);
  if (exec == Exec::serial) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_lock;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < n; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard<std::mutex> g(failure_lock);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace tiltlab
