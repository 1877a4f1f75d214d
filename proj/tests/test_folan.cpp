#include <doctest.h>

#include "stratcx/folan.hpp"
#include "stratcx/json_io.hpp"

using namespace stratcx;
using namespace stratcx::folan;
using pforms::TwistedForm;

namespace {

std::vector<int> unit_exp(int r, int var) {
  std::vector<int> e(r + 1, 0);
  e[var] = 1;
  return e;
}

TwistedForm basic_pencil(int r) {
  return fixture_pencil_monomial(r, unit_exp(r, 0), 1, unit_exp(r, 1), 1);
}

TwistedForm contact5() {
  return basic_pencil(5) + fixture_pencil_monomial(5, unit_exp(5, 2), 1, unit_exp(5, 3), 1);
}

} // namespace

TEST_CASE("fixture_pencil expands as expected") {
  // x_0 dx_1 - x_1 dx_0
  const auto w = basic_pencil(3);
  pforms::PolyForm expected(3, 1);
  expected.add_term(pforms::FormKey{{1, 0, 0, 0}, {1}}, Rational(1));
  expected.add_term(pforms::FormKey{{0, 1, 0, 0}, {0}}, Rational(-1));
  CHECK(w.poly() == expected);
  CHECK(w.twist() == 2);
  CHECK(pforms::integrable(w));

  // 2 x_0^2 (x_1 dx_2 + x_2 dx_1) - 4 x_0 x_1 x_2 dx_0
  const auto q = fixture_pencil_monomial(3, {2, 0, 0, 0}, 2, {0, 1, 1, 0}, 2);
  pforms::PolyForm qexp(3, 1);
  qexp.add_term(pforms::FormKey{{2, 1, 0, 0}, {2}}, Rational(2));
  qexp.add_term(pforms::FormKey{{2, 0, 1, 0}, {1}}, Rational(2));
  qexp.add_term(pforms::FormKey{{1, 1, 1, 0}, {0}}, Rational(-4));
  CHECK(q.poly() == qexp);
  CHECK(q.twist() == 4);
  CHECK(pforms::integrable(q));
  CHECK(pforms::radial_contraction(q).is_zero());

  // declared degrees must match the monomials
  CHECK_THROWS_AS(fixture_pencil_monomial(3, {2, 0, 0, 0}, 1, {0, 1, 0, 0}, 1), math_error);

  // mixed-degree pencils still satisfy the descent condition
  const auto m = fixture_pencil_monomial(3, {1, 0, 0, 0}, 1, {0, 2, 0, 0}, 2);
  CHECK(pforms::radial_contraction(m).is_zero());
  CHECK(pforms::integrable(m));
  CHECK(m.twist() == 3);
}

TEST_CASE("build_complex stage layout") {
  const auto w3 = basic_pencil(3);
  const auto m3 = build_complex(w3, 2, Variant::minus);
  CHECK(m3.stages().size() == 2);
  CHECK(m3.matrices().size() == 1);
  CHECK(m3.stages()[0].form_degree == 1);
  CHECK(m3.stages()[1].form_degree == 3);
  CHECK(m3.stages()[0].twist == 2);
  CHECK(m3.stages()[1].twist == 4);
  CHECK(m3.dims() == std::vector<std::size_t>{6, 1});

  const auto w5 = basic_pencil(5);
  const auto m5 = build_complex(w5, 2, Variant::minus);
  CHECK(m5.stages().size() == 3);
  CHECK(m5.matrices().size() == 2);
  CHECK(m5.dims() == std::vector<std::size_t>{15, 15, 1});
  const auto p5 = build_complex(w5, 2, Variant::plus);
  CHECK(p5.stages().size() == 3);
  CHECK(p5.dims() == std::vector<std::size_t>{21, 105, 35});

  const auto z = build_complex(TwistedForm::zero(5, 1, 2), 2, Variant::minus);
  for (const QMatrix& m : z.matrices()) CHECK(m.is_zero());

  // a stage twist sum of zero is rejected: d=2 with e=-4 degenerates at stage 1
  CHECK_THROWS_AS(build_complex(w5, -4, Variant::minus), math_error);
}

TEST_CASE("theorem1_check separates integrable from non-integrable at r=5") {
  const auto ok = theorem1_check(basic_pencil(5), 2);
  CHECK(ok.integrable);
  CHECK(ok.minus_vanishes);
  CHECK(ok.plus_vanishes);
  CHECK(ok.membership());

  const auto bad = theorem1_check(contact5(), 2);
  CHECK_FALSE(bad.integrable);
  CHECK_FALSE(bad.membership());

  const auto zero = theorem1_check(TwistedForm::zero(5, 1, 2), 2);
  CHECK(zero.integrable);
  CHECK(zero.membership());
}

TEST_CASE("integrable forms always yield complexes (forward direction, any r)") {
  for (int r : {3, 4, 5}) {
    const auto w = basic_pencil(r);
    const auto t = theorem1_check(w, 2);
    CHECK(t.integrable);
    CHECK(t.membership());
  }
}

TEST_CASE("rank_profile of the zero form") {
  const auto p = rank_profile(TwistedForm::zero(5, 1, 2), 2);
  for (std::size_t i = 0; i < p.ranks.size(); ++i) CHECK(p.ranks[i] == 0);
  CHECK(p.admissible);
  CHECK(p.stratum_dim == 0);
  // the zero profile sits below every maximal element
  CHECK(p.dominating_maximal ==
        rankcomb::maximal_elements(rankcomb::DimVector({15, 15, 1})));
}

TEST_CASE("rank_profile of a pencil at r=5, d=2, e=d") {
  const auto w = basic_pencil(5);
  const auto p = rank_profile(w, 2);
  CHECK(p.ambient == 5);
  CHECK(p.fol_degree == 2);
  CHECK(p.twist == 2);
  CHECK(p.dims == std::vector<std::size_t>{15, 15, 1});
  CHECK(p.admissible);
  CHECK(!p.dominating_maximal.empty());
  for (const auto& m : p.dominating_maximal) CHECK(rankcomb::poset_leq(p.ranks, m));

  // the first matrix kills w itself when e = d
  const auto& src = pforms::basis(5, 1, 2);
  const auto coords = src.coordinates(w);
  QMatrix col(src.dim(), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) col(i, 0) = coords[i];
  const auto dc = build_complex(w, 2, Variant::minus);
  CHECK((dc.matrices()[0] * col).is_zero());

  // a coordinate change of the pencil does not move the profile
  folan::Polynomial F, G;
  F[unit_exp(5, 0)] = 1;
  F[unit_exp(5, 2)] = 1;  // x_0 + x_2
  G[unit_exp(5, 1)] = 1;
  G[unit_exp(5, 3)] = -1;  // x_1 - x_3
  const auto w2 = fixture_pencil(5, F, 1, G, 1);
  const auto p2 = rank_profile(w2, 2);
  CHECK(p2.ranks == p.ranks);
  CHECK(p2.dims == p.dims);

  CHECK_THROWS_AS(rank_profile(contact5(), 2), math_error);
}

TEST_CASE("delta complex rejects non-integrable sources on conversion") {
  const auto dc = build_complex(contact5(), 2, Variant::minus);
  CHECK_FALSE(dc.compositions_vanish());
  CHECK_THROWS_AS(dc.to_complex(), math_error);
}

TEST_CASE("rank profile JSON carries the full report") {
  const auto p = rank_profile(basic_pencil(5), 2);
  const auto j = json_io::rank_profile_to_json(p);
  CHECK(j.at("r") == 5);
  CHECK(j.at("d") == 2);
  CHECK(j.at("e") == 2);
  CHECK(j.at("variant") == "minus");
  CHECK(j.at("admissible") == true);
  CHECK(j.at("dims").size() == 3);
  CHECK(j.at("ranks").size() == 2);
  CHECK(j.at("homology").size() == 3);
  CHECK(j.contains("dominating_maximal"));
  CHECK(j.contains("stratum_dim"));
  CHECK(j.contains("tangent_dim"));
}
