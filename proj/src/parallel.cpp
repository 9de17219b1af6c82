#include "superalg/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace superalg {

size_t worker_count() {
  if (const char* env = std::getenv("SUPERALG_WORKERS")) {
    long v = std::atol(env);
    if (v >= 1) return static_cast<size_t>(v);
  }
  size_t hw = std::thread::hardware_concurrency();
  return std::max<size_t>(1, std::min<size_t>(hw, 4));
}

void parallel_chunks(size_t count,
                     const std::function<void(size_t, size_t, size_t)>& body,
                     size_t* chunks_used) {
  size_t workers = std::min(worker_count(), std::max<size_t>(count, 1));
  if (chunks_used) *chunks_used = workers;
  if (count == 0) return;
  if (workers == 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  size_t base = count / workers, extra = count % workers;
  size_t begin = 0;
  for (size_t c = 0; c < workers; ++c) {
    size_t len = base + (c < extra ? 1 : 0);
    size_t end = begin + len;
    threads.emplace_back([&body, &errors, begin, end, c] {
      try {
        body(begin, end, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
    begin = end;
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace superalg
