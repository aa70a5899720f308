#include "flagx/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace flagx {

int thread_budget() {
  int threads = omp_get_max_threads();
  if (const char* env = std::getenv("FLAGX_THREADS")) {
    try {
      const int requested = std::stoi(env);
      if (requested > 0 && requested < threads) threads = requested;
    } catch (const std::exception&) {
      // unparsable value: keep the OpenMP default
    }
  }
  return threads < 1 ? 1 : threads;
}

}  // namespace flagx
