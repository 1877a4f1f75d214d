#include "stratcx/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stratcx {

int effective_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* cap = std::getenv("STRATCX_THREADS")) {
    try {
      const int c = std::stoi(cap);
      if (c < 1)
        n = 1;
      else if (c < n)
        n = c;
    } catch (...) {
      // unparsable env value: ignore the cap
    }
  }
  return n < 1 ? 1 : n;
}

} // namespace stratcx
