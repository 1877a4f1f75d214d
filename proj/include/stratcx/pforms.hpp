#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stratcx/qmatrix.hpp"

namespace stratcx::pforms {

// One monomial summand of a polynomial k-form in variables x_0..x_r:
// coefficient exponents plus a strictly increasing dx index set.
struct FormKey {
  std::vector<int> exp; // length r+1
  std::vector<int> dx;  // ascending, values in 0..r

  auto operator<=>(const FormKey&) const = default;
};

// Raw polynomial k-form in r+1 affine variables. No descent condition is
// imposed here: exterior derivatives and intermediate wedges live in this
// type. Terms are kept in canonical order (lexicographic on exponents, then
// on the dx set) and zero coefficients are never stored.
class PolyForm {
public:
  PolyForm(int ambient, int degree);

  int ambient() const { return ambient_; }  // r
  int degree() const { return degree_; }    // k
  const std::map<FormKey, Rational>& terms() const { return terms_; }

  void add_term(FormKey key, const Rational& coeff);
  bool is_zero() const { return terms_.empty(); }

  PolyForm operator+(const PolyForm& rhs) const;
  PolyForm operator-(const PolyForm& rhs) const;
  PolyForm scaled(const Rational& s) const;

  bool operator==(const PolyForm&) const = default;

  // every coefficient monomial has this total degree; -1 for the zero form
  int coefficient_degree() const;

private:
  int ambient_;
  int degree_;
  std::map<FormKey, Rational> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_derivative(const PolyForm& a);
// interior product with the radial field x_0 d/dx_0 + ... + x_r d/dx_r
PolyForm radial_contraction(const PolyForm& a);

// A k-form with homogeneous coefficients of degree e - k annihilated by
// radial contraction: a global twisted form of twist e. Construction
// validates both conditions exactly.
class TwistedForm {
public:
  static TwistedForm validated(int ambient, int degree, int twist, PolyForm poly);
  static TwistedForm zero(int ambient, int degree, int twist);

  int ambient() const { return poly_.ambient(); }
  int degree() const { return poly_.degree(); }
  int twist() const { return twist_; }
  const PolyForm& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  TwistedForm operator+(const TwistedForm& rhs) const;
  TwistedForm operator-(const TwistedForm& rhs) const;
  TwistedForm scaled(const Rational& s) const;

  bool operator==(const TwistedForm&) const = default;

private:
  TwistedForm(int twist, PolyForm poly) : twist_(twist), poly_(std::move(poly)) {}
  int twist_;
  PolyForm poly_;
};

// w1 * w2 = d1/(d1+d2) w1 ^ d(w2) + (-1)^((k1+1)(k2+1)) d2/(d1+d2) w2 ^ d(w1).
// Defined only for d1 + d2 != 0; the result is a twisted form of degree
// k1 + k2 + 1 and twist d1 + d2 (its radial contraction vanishes and is
// asserted on construction).
TwistedForm star(const TwistedForm& a, const TwistedForm& b);

// wedge/derivative entry points on twisted forms; results are raw forms
// (the descent condition is generally lost).
PolyForm wedge(const TwistedForm& a, const TwistedForm& b);
PolyForm exterior_derivative(const TwistedForm& a);
PolyForm radial_contraction(const TwistedForm& a);

// w ^ d(w) = 0, equivalently w * w = 0.
bool integrable(const TwistedForm& w);

// Deterministic basis of the twisted forms of given ambient/degree/twist,
// computed as the kernel of the radial contraction matrix on monomial
// generators. Basis vectors carry value 1 at their own free generator and 0
// at every other free generator, so coordinates of a kernel element are read
// off at the free positions.
class FormBasis {
public:
  FormBasis(int ambient, int degree, int twist);

  int ambient() const { return ambient_; }
  int degree() const { return degree_; }
  int twist() const { return twist_; }
  std::size_t dim() const { return elements_.size(); }
  const std::vector<TwistedForm>& elements() const { return elements_; }
  const std::vector<FormKey>& generators() const { return generators_; }

  // exact coordinates of f in this basis; f must have matching
  // ambient/degree/twist (throws math_error otherwise)
  std::vector<Rational> coordinates(const TwistedForm& f) const;

private:
  int ambient_;
  int degree_;
  int twist_;
  std::vector<FormKey> generators_;
  std::map<FormKey, std::size_t> generator_index_;
  std::vector<std::size_t> free_positions_;
  std::vector<TwistedForm> elements_;
};

// Shared, immutable, lazily built bases keyed on (ambient, degree, twist).
const FormBasis& basis(int ambient, int degree, int twist);

// Monomials of total degree `total` in `vars` variables, in the canonical
// (lexicographic) order used everywhere.
std::vector<std::vector<int>> monomials(int vars, int total);

// Closed-form dimension binom(e-1, k) * binom(e+r-k, r-k), valid for
// e > k >= 1; cross-checked against the computed kernel dimension.
Integer bott_dimension(int ambient, int degree, int twist);

// Matrix of eta -> w * eta from basis(r, k, e) to basis(r, k+2, e+d) in the
// deterministic bases; w must be a 1-form of twist d with e + d != 0.
// delta_matrix fills columns in parallel (OpenMP); delta_matrix_serial is
// the reference implementation, kept for tests and benchmarks. Both return
// identical matrices.
QMatrix delta_matrix(const TwistedForm& w, const FormBasis& source, const FormBasis& target);
QMatrix delta_matrix_serial(const TwistedForm& w, const FormBasis& source, const FormBasis& target);

// Rank of the linear map w -> delta_matrix(w, k, e) on a 1-form space of
// twist d; requires k + 2 <= r and nonzero source/target spaces.
std::size_t delta_injectivity_rank(int ambient, int fol_degree, int degree, int twist);

// Random element of the span of basis(r, k, e) with small integer
// coefficients on a few basis elements; deterministic per seed.
TwistedForm random_form(int ambient, int degree, int twist, std::uint64_t seed);

} // namespace stratcx::pforms
