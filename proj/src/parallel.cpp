#include "qmarkoff/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace qmarkoff {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the OpenMP default
    }
  }
  return omp_get_max_threads();
}

}  // namespace qmarkoff
