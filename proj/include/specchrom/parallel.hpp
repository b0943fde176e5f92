#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specchrom {

/// Reference loop: results[i] = fn(i) in index order.
template <class Fn>
auto map_indexed_serial(std::size_t count, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

/// OpenMP version of map_indexed_serial. Output slot i always holds fn(i), so
/// the result is identical to the serial loop whatever the thread count or
/// completion order. The first exception (by index) is rethrown after the
/// loop. Falls back to the serial loop for jobs <= 1 or without OpenMP.
template <class Fn>
auto map_indexed(std::size_t count, int jobs, Fn&& fn) {
#ifdef _OPENMP
  if (jobs > 1 && count > 1) {
    using R = std::invoke_result_t<Fn&, std::size_t>;
    static_assert(std::is_default_constructible_v<R>, "parallel map needs default-constructible results");
    std::vector<R> out(count);
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long long i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        out[k] = fn(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    return out;
  }
#else
  (void)jobs;
#endif
  return map_indexed_serial(count, fn);
}

/// Threads available to OpenMP (1 when built without it).
inline int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace specchrom
