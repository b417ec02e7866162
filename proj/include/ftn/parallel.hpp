#pragma once

namespace ftn {

/// Caps the OpenMP thread count for the parallel kernels; 0 keeps the
/// runtime default. No-op in serial builds.
void set_thread_count(int n);

/// Threads the parallel kernels may use (1 in serial builds).
int max_threads();

}  // namespace ftn
