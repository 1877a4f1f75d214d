#pragma once

namespace stratcx {

// Worker count for the OpenMP kernels: omp_get_max_threads() capped by the
// STRATCX_THREADS environment variable (values < 1 are treated as 1).
// Returns 1 when built without OpenMP.
int effective_threads();

} // namespace stratcx
