#include "ribbonforge/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ribbonforge {

int worker_count() {
  if (const char* env = std::getenv("RIBBONFORGE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return std::min(n, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(std::min(hw, 8u));
}

}  // namespace ribbonforge
