#pragma once

#include <cstddef>
#include <functional>

namespace qc {

/// Worker count used by parallelizable operations (verify, antichains).
/// Results never depend on it; only wall time does.
int thread_count();
void set_thread_count(int count);

/// Splits [0, total) into contiguous chunks and runs fn(begin, end, chunk)
/// on up to thread_count() workers. Chunk indices are dense and ordered, so
/// callers can merge per-chunk results deterministically.
/// Returns the number of chunks used.
std::size_t parallel_chunks(
    std::size_t total,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace qc
