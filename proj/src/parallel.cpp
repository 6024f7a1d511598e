#include "symfock/parallel.hpp"

#include <cstdlib>
#include <string>

namespace symfock {

std::size_t worker_count() {
  if (const char* env = std::getenv("SF_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace symfock
