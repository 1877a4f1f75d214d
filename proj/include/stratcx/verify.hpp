#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stratcx/json_io.hpp"

namespace stratcx::verify {

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;
  // minimal reproductions: seed + instance data for each failed check
  std::vector<json_io::json> repros;

  bool passed() const { return failures == 0; }
};

// Closed-form morphism-space dimension against the solved linear system,
// over seeded random dimension/rank draws (n <= 4, d_i <= 4).
SuiteResult run_hom(std::uint64_t seed, int trials);

// Closed-form tangent dimension against the solved linear system, plus the
// identity tangent(c) = hom(c, shifted c).
SuiteResult run_tangent(std::uint64_t seed, int trials);

// Associativity, graded commutativity, w*w = w^dw, and vanishing radial
// contraction of star products, over seeded random forms (r in {3,4}).
SuiteResult run_star_assoc(std::uint64_t seed, int trials);

// Twisted-form space dimensions: computed kernel dimension against the
// closed form binom(e-1,k)binom(e+r-k,r-k) for e > k >= 1, sweeping
// r <= 5, k <= r, 0 <= e <= 5. Also prints, for the stage spaces used by
// the analyze pipeline, the variant closed form that puts the foliation
// degree in the binom(.,k) slot, flagging where it disagrees.
SuiteResult run_bott_dims();

// Integrability versus vanishing compositions in both graded sequences at
// r = 5, d = 2, e = d, over pencil fixtures and seeded non-integrable draws.
SuiteResult run_theorem1(std::uint64_t seed, int trials);

// Dispatch by suite name: hom, tangent, star-assoc, bott-dims, theorem1.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials);

std::vector<std::string> suite_names();

} // namespace stratcx::verify
