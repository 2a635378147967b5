#include "loopforge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace loopforge {

namespace {
int g_override = 0;
}

void override_worker_count(int workers) { g_override = workers; }

int worker_count() {
  if (g_override > 0) return g_override;
  int n = 0;
  if (const char* env = std::getenv("LOOPFORGE_THREADS")) {
    try {
      n = std::stoi(env);
    } catch (...) {
      n = 0;
    }
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return n;
}

}  // namespace loopforge
