#include "ramsey_forge/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ramsey_forge {

unsigned default_threads() {
  if (const char* env = std::getenv("RAMSEY_FORGE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

unsigned resolve_threads(unsigned requested) {
  return requested == 0 ? default_threads() : requested;
}

void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t,
                                              unsigned)>& body) {
  threads = resolve_threads(threads);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, static_cast<unsigned>(w));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ramsey_forge
