#pragma once

#include <cstddef>
#include <functional>

namespace fflab {

// Every data-parallel kernel in the library has a serial reference path selected
// by Exec::serial. Both paths write results by index, so their outputs are identical.
enum class Exec { serial, parallel };

// Runs body(i) for i in [0, count). Exec::parallel distributes iterations over
// OpenMP threads. If any iteration throws, the exception from the lowest index is
// rethrown after the loop completes.
void for_each_index(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body);

// Upper bound on OpenMP workers; 0 restores the runtime default.
void set_worker_cap(int cap);
int worker_count();

}  // namespace fflab
