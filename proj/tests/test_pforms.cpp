#include <doctest.h>

#include "stratcx/json_io.hpp"
#include "stratcx/pforms.hpp"

using namespace stratcx;
using namespace stratcx::pforms;

namespace {

// x_a dx_b - x_b dx_a in r+1 variables
TwistedForm elementary_pencil(int r, int a, int b) {
  PolyForm p(r, 1);
  std::vector<int> ea(r + 1, 0), eb(r + 1, 0);
  ea[a] = 1;
  eb[b] = 1;
  p.add_term(FormKey{ea, {b}}, Rational(1));
  p.add_term(FormKey{eb, {a}}, Rational(-1));
  return TwistedForm::validated(r, 1, 2, std::move(p));
}

TwistedForm contact_form(int r) {
  return elementary_pencil(r, 0, 1) + elementary_pencil(r, 2, 3);
}

} // namespace

TEST_CASE("exterior derivative, wedge and contraction on raw forms") {
  const auto w = elementary_pencil(3, 0, 1);
  const PolyForm dw = exterior_derivative(w);
  // d(x_0 dx_1 - x_1 dx_0) = 2 dx_0 ^ dx_1
  PolyForm expected(3, 2);
  expected.add_term(FormKey{{0, 0, 0, 0}, {0, 1}}, Rational(2));
  CHECK(dw == expected);

  CHECK(wedge(w, w).is_zero());
  CHECK(radial_contraction(w).is_zero());

  // anticommutation dx_0 ^ dx_1 = - dx_1 ^ dx_0
  PolyForm d0(1, 1), d1(1, 1);
  d0.add_term(FormKey{{0, 0}, {0}}, Rational(1));
  d1.add_term(FormKey{{0, 0}, {1}}, Rational(1));
  CHECK(wedge(d0, d1) == wedge(d1, d0).scaled(Rational(-1)));
}

TEST_CASE("homogeneous Euler identity for the radial field") {
  // i_R(d a) = e*a - d(i_R a) where e is |exponents| + form degree
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const auto f = random_form(3, 1 + static_cast<int>(seed % 2), 3, seed);
    if (f.is_zero()) continue;
    const PolyForm a = f.poly();
    const int e = f.twist();
    const PolyForm lhs = radial_contraction(exterior_derivative(a));
    const PolyForm rhs = a.scaled(Rational(e)) - exterior_derivative(radial_contraction(a));
    CHECK(lhs == rhs);
  }
  // for functions the contraction term is absent: i_R(df) = e*f
  const auto f0 = random_form(3, 0, 3, 9);
  CHECK(radial_contraction(exterior_derivative(f0.poly())) == f0.poly().scaled(Rational(3)));
  // also on a raw non-descended representative: a = x_0^2 dx_0, e = 3
  PolyForm a(3, 1);
  a.add_term(FormKey{{2, 0, 0, 0}, {0}}, Rational(1));
  const PolyForm lhs = radial_contraction(exterior_derivative(a));
  const PolyForm rhs = a.scaled(Rational(3)) - exterior_derivative(radial_contraction(a));
  CHECK(lhs == rhs);
  CHECK(lhs.is_zero());
}

TEST_CASE("twisted form validation") {
  PolyForm bad_degree(3, 1);
  bad_degree.add_term(FormKey{{1, 0, 0, 0}, {1}}, Rational(1));
  CHECK_THROWS_AS(TwistedForm::validated(3, 1, 5, bad_degree), math_error);

  PolyForm not_descended(3, 1);
  not_descended.add_term(FormKey{{1, 0, 0, 0}, {0}}, Rational(1));  // x_0 dx_0
  CHECK_THROWS_AS(TwistedForm::validated(3, 1, 2, not_descended), math_error);

  CHECK(TwistedForm::zero(3, 1, 2).is_zero());
}

TEST_CASE("star product on pencil and contact forms") {
  const auto w = elementary_pencil(3, 0, 1);
  CHECK(star(w, w).is_zero());
  CHECK(integrable(w));

  const auto c = contact_form(3);
  const auto cc = star(c, c);
  CHECK_FALSE(cc.is_zero());
  CHECK_FALSE(integrable(c));
  // w*w = w ^ dw = 2(x_0 dx_1 - x_1 dx_0)^dx_2^dx_3 + 2(x_2 dx_3 - x_3 dx_2)^dx_0^dx_1
  PolyForm expected(3, 3);
  expected.add_term(FormKey{{1, 0, 0, 0}, {1, 2, 3}}, Rational(2));
  expected.add_term(FormKey{{0, 1, 0, 0}, {0, 2, 3}}, Rational(-2));
  expected.add_term(FormKey{{0, 0, 1, 0}, {0, 1, 3}}, Rational(2));
  expected.add_term(FormKey{{0, 0, 0, 1}, {0, 1, 2}}, Rational(-2));
  CHECK(cc.poly() == expected);

  CHECK(integrable(TwistedForm::zero(3, 1, 2)));
  CHECK_THROWS_AS(integrable(TwistedForm::zero(3, 2, 3)), math_error);
}

TEST_CASE("star respects the grading and rejects degenerate twists") {
  const auto a = random_form(3, 1, 2, 10);
  const auto b = random_form(3, 1, 3, 11);
  const auto s = star(a, b);
  CHECK(s.degree() == 3);
  CHECK(s.twist() == 5);
  CHECK(radial_contraction(s).is_zero());

  // graded symmetry
  const int sign = ((a.degree() + 1) * (b.degree() + 1)) % 2 == 0 ? 1 : -1;
  CHECK(s == star(b, a).scaled(Rational(sign)));

  // associativity on a fixed triple
  const auto c = random_form(3, 0, 2, 12);
  CHECK(star(star(a, b), c) == star(a, star(b, c)));

  // twists d and -d cannot be multiplied
  PolyForm constant(3, 0);
  constant.add_term(FormKey{{0, 0, 0, 0}, {}}, Rational(1));
  const auto unit = TwistedForm::validated(3, 0, 0, constant);  // twist 0 function
  CHECK_THROWS_AS(star(unit, TwistedForm::zero(3, 1, 0)), math_error);
}

TEST_CASE("basis dimensions at pinned values") {
  CHECK(basis(3, 1, 1).dim() == 0);
  CHECK(basis(3, 1, 2).dim() == 6);
  CHECK(basis(3, 0, 2).dim() == 10);
  CHECK(basis(2, 1, 2).dim() == 3);
  CHECK(basis(3, 1, -1).dim() == 0);
  CHECK(bott_dimension(3, 1, 2) == 6);
  CHECK_THROWS_AS(bott_dimension(3, 1, 1), math_error);
  CHECK(monomials(4, 2).size() == 10);
}

TEST_CASE("basis coordinates read back exactly") {
  const FormBasis& b = basis(3, 1, 2);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const auto coords = b.coordinates(b.elements()[i]);
    for (std::size_t j = 0; j < coords.size(); ++j) CHECK(coords[j] == (i == j ? 1 : 0));
  }
  // a random combination reproduces its own coefficients
  TwistedForm combo = b.elements()[0].scaled(make_ratio(2, 3)) -
                      b.elements()[3].scaled(make_ratio(7, 5));
  const auto coords = b.coordinates(combo);
  CHECK(coords[0] == make_ratio(2, 3));
  CHECK(coords[3] == make_ratio(-7, 5));

  CHECK_THROWS_AS(b.coordinates(TwistedForm::zero(3, 1, 3)), math_error);
}

TEST_CASE("delta matrices: zero, linearity, kernel, serial/parallel equality") {
  const FormBasis& src = basis(3, 1, 2);
  const FormBasis& dst = basis(3, 3, 4);

  CHECK(delta_matrix(TwistedForm::zero(3, 1, 2), src, dst).is_zero());

  const auto w1 = random_form(3, 1, 2, 21);
  const auto w2 = random_form(3, 1, 2, 22);
  const QMatrix m1 = delta_matrix(w1, src, dst);
  const QMatrix m2 = delta_matrix(w2, src, dst);
  CHECK(delta_matrix(w1 + w2, src, dst) == m1 + m2);
  CHECK(delta_matrix_serial(w1, src, dst) == m1);

  // an integrable w lies in the kernel of its own delta matrix
  const auto w = elementary_pencil(3, 0, 1);
  const auto coords = src.coordinates(w);
  QMatrix col(src.dim(), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) col(i, 0) = coords[i];
  CHECK((delta_matrix(w, src, dst) * col).is_zero());

  CHECK_THROWS_AS(delta_matrix(random_form(3, 1, 2, 23), basis(3, 0, 2), dst), math_error);
}

TEST_CASE("injectivity rank of the delta representation") {
  CHECK(delta_injectivity_rank(3, 2, 1, 3) == basis(3, 1, 2).dim());
  CHECK_THROWS_AS(delta_injectivity_rank(3, 2, 2, 3), math_error);  // k + 2 > r
}

TEST_CASE("form JSON round-trips exactly") {
  const auto w = random_form(4, 2, 4, 31).scaled(make_ratio(3, 7));
  const auto j = json_io::form_to_json(w);
  CHECK(json_io::form_from_json(j) == w);

  auto broken = j;
  broken["terms"][0]["coeff"] = "not-a-number";
  CHECK_THROWS_AS(json_io::form_from_json(broken), parse_error);
}
