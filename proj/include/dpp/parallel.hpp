#ifndef DPP_PARALLEL_HPP
#define DPP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace dpp {

/// Worker count: `requested` if positive, else the DPP_THREADS environment
/// variable if set to a positive integer, else hardware concurrency.
int worker_count(int requested = 0);

/// Splits [0, count) into contiguous chunks and runs body(begin, end) on up
/// to `workers` threads. Callers must make each index's result independent
/// of the chunking so output does not depend on the worker count.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)> &body,
                  int workers = 0);

} // namespace dpp

#endif // DPP_PARALLEL_HPP
