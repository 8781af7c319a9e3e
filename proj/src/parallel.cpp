#include "pisot/parallel.hpp"

#include <atomic>

namespace pisot {

namespace {
std::atomic<unsigned> g_workers{0};
}

unsigned worker_count() {
  const unsigned n = g_workers.load();
  if (n != 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_worker_count(unsigned n) { g_workers.store(n); }

}  // namespace pisot
