#pragma once

#include <cstddef>
#include <functional>

namespace ramsey_forge {

// Worker count used when a caller passes 0: RAMSEY_FORGE_THREADS if set and
// positive, else 1.
unsigned default_threads();

unsigned resolve_threads(unsigned requested);

// Runs body(begin, end, worker) over contiguous chunks of [0, count).
// Chunk boundaries depend only on count and threads; callers combine
// per-worker partial results in worker order.
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t,
                                              unsigned)>& body);

}  // namespace ramsey_forge
