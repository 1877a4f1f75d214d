#include <doctest.h>

#include "stratcx/cxlin.hpp"
#include "stratcx/json_io.hpp"

using namespace stratcx;
using namespace stratcx::cxlin;
using rankcomb::DimVector;
using rankcomb::RankVector;

namespace {

QMatrix mat(std::size_t rows, std::size_t cols, std::vector<long> entries) {
  QMatrix m(rows, cols);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entries[idx++];
  return m;
}

ComplexInstance two_term(long a, long b) {
  return ComplexInstance({1, 1, 1}, {mat(1, 1, {a}), mat(1, 1, {b})});
}

// deterministic sweep of witnesses used by several properties
std::vector<ComplexInstance> witness_sweep() {
  std::vector<ComplexInstance> out;
  std::uint64_t seed = 100;
  for (const DimVector& d : {DimVector{2, 2}, DimVector{1, 2, 1}, DimVector{2, 2, 2},
                             DimVector{3, 2, 3}, DimVector{2, 3, 3, 2}})
    for (const RankVector& r : rankcomb::enumerate_R(d))
      out.push_back(construct_with_ranks(d, r, seed++));
  return out;
}

} // namespace

TEST_CASE("verify_complex") {
  CHECK(verify_complex(ComplexInstance::zero({2, 2, 2})));
  CHECK(verify_complex(two_term(1, 0)));
  CHECK_FALSE(verify_complex(two_term(1, 1)));
  CHECK_THROWS_AS(ComplexInstance({1, 1, 1}, {mat(1, 1, {1})}), math_error);
  CHECK_THROWS_AS(ComplexInstance({2, 1, 1}, {mat(1, 1, {1}), mat(1, 1, {0})}), math_error);
}

TEST_CASE("ranks and homology of explicit complexes") {
  const auto zero22 = ComplexInstance::zero({2, 2});
  CHECK(ranks(zero22) == RankVector{0});
  CHECK(homology(zero22).h == std::vector<Integer>{2, 2});

  // 1 -> 2 -> 1 exact: M_1 = (1,0)^T, M_2 = (0,1)
  const ComplexInstance exact({1, 2, 1}, {mat(2, 1, {1, 0}), mat(1, 2, {0, 1})});
  CHECK(verify_complex(exact));
  CHECK(ranks(exact) == RankVector{1, 1});
  CHECK(homology(exact).h == std::vector<Integer>{0, 0, 0});

  CHECK_THROWS_AS(ranks(two_term(1, 1)), math_error);
}

TEST_CASE("construct_with_ranks hits the requested ranks exactly") {
  const auto c = construct_with_ranks(DimVector{1, 1, 1}, RankVector{1, 0}, 5);
  CHECK(verify_complex(c));
  CHECK(c.map(1).rank() == 1);
  CHECK(c.map(2).is_zero());

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto w = construct_with_ranks(DimVector{2, 2, 2}, RankVector{1, 1}, seed);
    CHECK(verify_complex(w));
    CHECK(ranks(w) == RankVector{1, 1});
  }

  CHECK(construct_with_ranks(DimVector{3, 2, 3}, RankVector{0, 0}, 9) ==
        ComplexInstance::zero({3, 2, 3}));
  CHECK_THROWS_AS(construct_with_ranks(DimVector{1, 1, 1}, RankVector{1, 1}, 0), math_error);

  // identical seeds reproduce the same witness
  CHECK(construct_with_ranks(DimVector{2, 3, 3, 2}, RankVector{1, 2, 1}, 42) ==
        construct_with_ranks(DimVector{2, 3, 3, 2}, RankVector{1, 2, 1}, 42));

  for (const auto& w : witness_sweep()) {
    CHECK(verify_complex(w));
    const auto measured = ranks(w);
    const auto h = homology(w);
    const auto predicted = rankcomb::homology_from_ranks(w.dim_vector(), measured);
    CHECK(h.h == predicted.h);
    CHECK(h.b == predicted.b);
    CHECK(h.z == predicted.z);
  }
}

TEST_CASE("group action preserves the complex and its invariants") {
  const auto c = construct_with_ranks(DimVector{2, 2, 2}, RankVector{1, 1}, 17);

  std::vector<QMatrix> id_blocks{QMatrix::identity(2), QMatrix::identity(2), QMatrix::identity(2)};
  CHECK(group_act(GroupElement(std::move(id_blocks)), c) == c);

  std::vector<QMatrix> scalar;
  for (int i = 0; i < 3; ++i) scalar.push_back(QMatrix::identity(2).scaled(Rational(2)));
  CHECK(ranks(group_act(GroupElement(std::move(scalar)), c)) == ranks(c));

  for (std::uint64_t seed : {3u, 4u}) {
    const GroupElement g = random_group_element(c.dims(), seed);
    const auto moved = group_act(g, c);
    CHECK(verify_complex(moved));
    CHECK(ranks(moved) == ranks(c));
    CHECK(homology(moved).h == homology(c).h);
    CHECK(group_act(g.inverse(), moved) == c);
  }

  std::vector<QMatrix> singular{QMatrix(2, 2), QMatrix::identity(2), QMatrix::identity(2)};
  CHECK_THROWS_AS(GroupElement(std::move(singular)), math_error);
}

TEST_CASE("split: summand dimensions and exact reconstruction") {
  const auto zero = ComplexInstance::zero({2, 3});
  const auto dz = split(zero);
  CHECK(dz.kernel_complement[0].cols() == 0);
  CHECK(dz.homology_complement[0].cols() == 2);
  CHECK(dz.homology_complement[1].cols() == 3);
  CHECK(dz.reconstruct() == zero);

  const auto exact = construct_with_ranks(DimVector{1, 2, 1}, RankVector{1, 1}, 23);
  const auto de = split(exact);
  for (const QMatrix& h : de.homology_complement) CHECK(h.cols() == 0);
  CHECK(de.reconstruct() == exact);

  const auto w = construct_with_ranks(DimVector{2, 2, 2}, RankVector{1, 1}, 29);
  const auto dw = split(w);
  CHECK(dw.homology_complement[0].cols() == 1);
  CHECK(dw.homology_complement[1].cols() == 0);
  CHECK(dw.homology_complement[2].cols() == 1);
  CHECK(dw.kernel_complement[0].cols() == 1);
  CHECK(dw.kernel_complement[1].cols() == 1);
  CHECK(dw.kernel_complement[2].cols() == 0);
  CHECK(dw.reconstruct() == w);

  for (const auto& c : witness_sweep()) {
    const auto d = split(c);
    CHECK(d.reconstruct() == c);
    // the summand blocks are square and invertible: the outgoing map carries
    // the kernel complement isomorphically onto the next image
    for (const QMatrix& s : d.summand_maps) CHECK(s.rank() == s.rows());
  }
}

TEST_CASE("hom_space solves the chain-morphism equations") {
  const auto zero11 = ComplexInstance::zero({1, 1});
  CHECK(hom_space(zero11, zero11).dim() == 2);

  const ComplexInstance exact11({1, 1}, {mat(1, 1, {1})});
  CHECK(hom_space(exact11, exact11).dim() == 1);

  // every basis element satisfies the equations
  const auto c = construct_with_ranks(DimVector{2, 2, 2}, RankVector{1, 1}, 31);
  const auto c2 = construct_with_ranks(DimVector{2, 3, 2}, RankVector{1, 1}, 37);
  const auto hs = hom_space(c, c2);
  for (const auto& g : hs.basis)
    for (std::size_t i = 1; i <= c.map_count(); ++i)
      CHECK(g[i] * c.map(i) == c2.map(i) * g[i - 1]);

  CHECK(Integer(static_cast<unsigned long>(hs.dim())) ==
        rankcomb::hom_dim(c.dim_vector(), ranks(c), c2.dim_vector(), ranks(c2)));
}

TEST_CASE("shift") {
  const auto zero = ComplexInstance::zero({2, 2, 2});
  const auto sz = shift(zero);
  CHECK(sz.dims() == std::vector<std::size_t>{2, 2});
  CHECK(sz.map(1).is_zero());

  // the first stored shifted map carries the sign (-1)^1
  const ComplexInstance c({1, 1, 1}, {mat(1, 1, {0}), mat(1, 1, {3})});
  const auto sc = shift(c);
  CHECK(sc.map(1)(0, 0) == -3);

  const auto single = shift(ComplexInstance({1, 1}, {mat(1, 1, {2})}));
  CHECK(single.spaces() == 1);
  CHECK(single.map_count() == 0);

  for (const auto& w : witness_sweep())
    if (w.map_count() >= 2) CHECK(verify_complex(shift(w)));
}

TEST_CASE("tangent_space_dim matches the closed form and the shifted hom space") {
  CHECK(tangent_space_dim(ComplexInstance::zero({2, 2})) == 4);

  const auto exact = construct_with_ranks(DimVector{1, 2, 1}, RankVector{1, 1}, 41);
  CHECK(tangent_space_dim(exact) == 3);
  CHECK(rankcomb::tangent_dim(DimVector{1, 2, 1}, RankVector{1, 1}) == 3);

  for (const auto& w : witness_sweep()) {
    const auto t = tangent_space_dim(w);
    CHECK(Integer(static_cast<unsigned long>(t)) ==
          rankcomb::tangent_dim(w.dim_vector(), ranks(w)));
    CHECK(t == hom_space(w, extended_by_zero(shift(w))).dim());
  }
}

TEST_CASE("closure_membership") {
  const auto zero = ComplexInstance::zero({2, 2, 2});
  CHECK(closure_membership(zero, RankVector{0, 0}));
  CHECK(closure_membership(zero, RankVector{2, 2}));

  const auto w = construct_with_ranks(DimVector{2, 2, 2}, RankVector{1, 1}, 43);
  CHECK_FALSE(closure_membership(w, RankVector{1, 0}));
  CHECK(closure_membership(w, RankVector{1, 1}));
  CHECK(closure_membership(w, RankVector{2, 1}));
  CHECK_THROWS_AS(closure_membership(w, RankVector{1}), math_error);

  // witnesses of rank s <= r always lie in the rank-<=r locus
  const DimVector d{2, 2, 2};
  for (const RankVector& r : rankcomb::enumerate_R(d))
    for (const RankVector& s : rankcomb::enumerate_R(d))
      if (rankcomb::poset_leq(s, r))
        CHECK(closure_membership(construct_with_ranks(d, s, 47), r));
}

TEST_CASE("complex JSON round-trips exactly") {
  auto c = construct_with_ranks(DimVector{2, 3, 2}, RankVector{1, 1}, 53);
  // conjugate to introduce denominators
  c = group_act(random_group_element(c.dims(), 54).inverse(), c);
  const auto j = json_io::complex_to_json(c);
  CHECK(json_io::complex_from_json(j) == c);

  auto broken = j;
  broken["maps"][0][0][0] = "1/0";
  CHECK_THROWS_AS(json_io::complex_from_json(broken), parse_error);
}
