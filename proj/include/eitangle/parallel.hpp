#pragma once

#include <cstddef>
#include <functional>

namespace eitangle {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Each index writes
// only its own output slot, so scheduling never changes results. jobs <= 1
// (or count < 2) runs inline.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn);

// Logical CPU count, at least 1.
int default_jobs();

}  // namespace eitangle
