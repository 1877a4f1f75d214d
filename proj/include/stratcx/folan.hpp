#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stratcx/cxlin.hpp"
#include "stratcx/pforms.hpp"

namespace stratcx::folan {

enum class Variant { minus, plus };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct DeltaStage {
  int form_degree; // 2k+1 (minus) or 2k (plus)
  int twist;       // e + k*d
  std::size_t dim;
};

// The graded sequence of twisted-form spaces attached to a 1-form w of
// twist d, with the multiplication-by-w matrices between consecutive
// stages. The matrices always exist; they compose to zero exactly when w
// is integrable.
class DeltaComplex {
public:
  DeltaComplex(Variant variant, int ambient, int fol_degree, int twist,
               std::vector<DeltaStage> stages, std::vector<QMatrix> matrices);

  Variant variant() const { return variant_; }
  int ambient() const { return ambient_; }
  int fol_degree() const { return fol_degree_; }
  int twist() const { return twist_; }
  const std::vector<DeltaStage>& stages() const { return stages_; }
  const std::vector<QMatrix>& matrices() const { return matrices_; }

  std::vector<std::size_t> dims() const;
  bool compositions_vanish() const;

  // view as an explicit complex; throws math_error when a composition is
  // nonzero (i.e. the source form was not integrable)
  cxlin::ComplexInstance to_complex() const;

private:
  Variant variant_;
  int ambient_;
  int fol_degree_;
  int twist_;
  std::vector<DeltaStage> stages_;
  std::vector<QMatrix> matrices_;
};

// Stage degrees are 2k+1 (minus, k <= floor((r-1)/2)) or 2k (plus,
// k <= floor(r/2)), with twists e + k*d. No integrability is assumed.
// Throws math_error when some stage twist sum degenerates to zero.
DeltaComplex build_complex(const pforms::TwistedForm& w, int twist, Variant variant);

struct Theorem1Result {
  bool integrable;
  bool minus_vanishes;
  bool plus_vanishes;
  bool membership() const { return minus_vanishes && plus_vanishes; }
};

// Integrability of w versus vanishing of all consecutive compositions in
// both variants; the two booleans agree on the stated equivalence range.
Theorem1Result theorem1_check(const pforms::TwistedForm& w, int twist);

struct RankProfile {
  int ambient;
  int fol_degree;
  int twist;
  Variant variant;
  std::vector<std::size_t> dims;
  rankcomb::RankVector ranks;
  std::vector<Integer> homology;
  bool admissible;
  std::vector<rankcomb::RankVector> dominating_maximal;
  Integer stratum_dim;
  Integer tangent_dim;
};

// Locates an integrable form's stratum: the ranks of its stage matrices,
// the homology profile, the maximal admissible vectors dominating it, and
// the stratum/tangent dimensions. Throws math_error when w is not
// integrable.
RankProfile rank_profile(const pforms::TwistedForm& w, int twist, Variant variant = Variant::minus);

// Homogeneous polynomial in r+1 variables as exponent-vector -> coefficient.
using Polynomial = std::map<std::vector<int>, Rational>;

// p*F*dG - q*G*dF for F, G homogeneous of degrees p, q: a twisted 1-form of
// twist p+q with identically vanishing radial contraction (it is a closed
// rational pencil up to the F*G factor, hence integrable).
pforms::TwistedForm fixture_pencil(int ambient, const Polynomial& F, int p,
                                   const Polynomial& G, int q);

// convenience: single monomials given by exponent vectors
pforms::TwistedForm fixture_pencil_monomial(int ambient, const std::vector<int>& f_exp, int p,
                                            const std::vector<int>& g_exp, int q);

} // namespace stratcx::folan
