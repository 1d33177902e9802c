#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minrank {

// serial is the reference path; parallel must produce identical results
// because every index writes only its own slot.
enum class ExecPolicy { serial, parallel };

inline int hardware_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename Body>
void for_each_index_serial(std::size_t n, Body&& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// OpenMP loop over [0, n). The first exception (lowest index) is rethrown on
// the calling thread after the loop joins.
template <typename Body>
void for_each_index_parallel(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <typename Body>
void for_each_index(ExecPolicy policy, std::size_t n, Body&& body) {
  if (policy == ExecPolicy::parallel) {
    for_each_index_parallel(n, body);
  } else {
    for_each_index_serial(n, body);
  }
}

}  // namespace minrank
