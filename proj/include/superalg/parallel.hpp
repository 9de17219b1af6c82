#ifndef SUPERALG_PARALLEL_HPP
#define SUPERALG_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace superalg {

/// Worker cap: SUPERALG_WORKERS when set, else min(hardware, 4).
size_t worker_count();

/// Split [0, count) into at most worker_count() contiguous chunks and run
/// them on separate threads. Callers combine per-chunk results in chunk
/// order so output stays deterministic for any worker count.
void parallel_chunks(size_t count,
                     const std::function<void(size_t begin, size_t end,
                                              size_t chunk)>& body,
                     size_t* chunks_used);

}  // namespace superalg

#endif
