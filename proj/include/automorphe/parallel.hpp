#pragma once

#include <cstddef>
#include <functional>

namespace automorphe {

// worker count from AUTOMORPHE_THREADS, else hardware concurrency
unsigned worker_count();
// runs body(i) for i in [0, n); results must be written to per-index slots so that
// reductions stay in a fixed order
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace automorphe
