#pragma once

#include <cstddef>
#include <functional>

namespace dve::util {

// Run body(i) for i in [0, n) on `jobs` worker threads. Tasks write only to
// their own index; the caller owns ordering, so results are deterministic
// regardless of scheduling. jobs <= 1 runs inline. Exceptions are captured
// and rethrown (first by index).
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

int default_jobs();

}  // namespace dve::util
