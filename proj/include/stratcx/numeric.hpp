#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "stratcx/error.hpp"

namespace stratcx {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return mpq_sgn(q.get_mpq_t()) == 0; }
inline bool is_zero(const Integer& z) { return mpz_sgn(z.get_mpz_t()) == 0; }

// num/den as machine ints, canonicalized. den must be nonzero.
inline Rational make_ratio(long num, long den) {
  if (den == 0) throw math_error("make_ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical "p/q" (or "p" for integers) spelling used by all JSON output.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  mpq_t tmp;
  mpq_init(tmp);
  if (mpq_set_str(tmp, s.c_str(), 10) != 0) {
    mpq_clear(tmp);
    throw parse_error("invalid rational literal: '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(tmp)) == 0) {
    mpq_clear(tmp);
    throw parse_error("zero denominator in rational literal: '" + s + "'");
  }
  mpq_canonicalize(tmp);
  Rational q(tmp);
  mpq_clear(tmp);
  return q;
}

inline Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0) throw math_error("binomial: negative upper argument");
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p())
    throw math_error("integer too large for 64-bit serialization: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

// Seeded small-integer sampler. mt19937_64 output is fully specified by the
// standard, and we map it to ranges by modulus, so streams are identical
// across platforms (uniform_int_distribution is not portable).
class SmallRng {
public:
  explicit SmallRng(std::uint64_t seed) : eng_(seed) {}

  // uniform integer in [lo, hi]
  int pick(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  std::uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

} // namespace stratcx
