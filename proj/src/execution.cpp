#include "fflab/execution.hpp"

#include <omp.h>

#include <exception>
#include <vector>

namespace fflab {

void for_each_index(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void set_worker_cap(int cap) { omp_set_num_threads(cap > 0 ? cap : omp_get_num_procs()); }

int worker_count() { return omp_get_max_threads(); }

}  // namespace fflab
