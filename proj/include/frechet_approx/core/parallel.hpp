#pragma once

#include <cstddef>
#include <functional>

namespace fapx {

/// Worker cap: FRECHET_APPROX_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
std::size_t default_worker_count();

/// Splits [0, n) into contiguous chunks and runs `body(begin, end)` on up
/// to `workers` threads. workers <= 1 runs inline. Chunk boundaries depend
/// only on n and workers.
void parallel_for(std::size_t n, std::size_t workers,
                  const std::function<void(std::size_t, std::size_t)>& body);

} // namespace fapx
