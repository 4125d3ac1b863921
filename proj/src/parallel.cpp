#include "iasgl/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace iasgl {

std::size_t worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IASGL_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the OpenMP default
    }
  }
  return static_cast<std::size_t>(omp_get_max_threads());
}

}  // namespace iasgl
