#ifndef PERMSIM_PARALLEL_HPP
#define PERMSIM_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace permsim {

// Runs fn(i) for every i in [0, count) on up to `workers` threads. Callers
// key any output by i, so the observable result cannot depend on scheduling.
// The first exception thrown by fn is rethrown after all threads join.
void parallel_for(std::int64_t count, int workers,
                  const std::function<void(std::int64_t)>& fn);

}  // namespace permsim

#endif
