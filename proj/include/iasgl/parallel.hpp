#pragma once

#include <cstddef>

namespace iasgl {

/// Worker count for the parallel kernels: `requested` when nonzero, else the
/// IASGL_THREADS environment variable when set to a positive integer, else
/// the OpenMP default.
std::size_t worker_count(std::size_t requested = 0);

}  // namespace iasgl
