#include "stratcx/folan.hpp"

#include <sstream>

namespace stratcx::folan {

std::string to_string(Variant v) { return v == Variant::minus ? "minus" : "plus"; }

Variant variant_from_string(const std::string& s) {
  if (s == "minus") return Variant::minus;
  if (s == "plus") return Variant::plus;
  throw parse_error("unknown variant '" + s + "' (expected minus|plus)");
}

DeltaComplex::DeltaComplex(Variant variant, int ambient, int fol_degree, int twist,
                           std::vector<DeltaStage> stages, std::vector<QMatrix> matrices)
    : variant_(variant), ambient_(ambient), fol_degree_(fol_degree), twist_(twist),
      stages_(std::move(stages)), matrices_(std::move(matrices)) {
  if (stages_.empty()) throw math_error("delta complex needs at least one stage");
  if (matrices_.size() + 1 != stages_.size())
    throw math_error("delta complex: matrix count must be stage count - 1");
  for (std::size_t i = 0; i < matrices_.size(); ++i)
    if (matrices_[i].rows() != stages_[i + 1].dim || matrices_[i].cols() != stages_[i].dim)
      throw math_error("delta complex: matrix shape does not match stage dimensions");
}

std::vector<std::size_t> DeltaComplex::dims() const {
  std::vector<std::size_t> out;
  out.reserve(stages_.size());
  for (const DeltaStage& s : stages_) out.push_back(s.dim);
  return out;
}

bool DeltaComplex::compositions_vanish() const {
  for (std::size_t i = 0; i + 1 < matrices_.size(); ++i)
    if (!(matrices_[i + 1] * matrices_[i]).is_zero()) return false;
  return true;
}

cxlin::ComplexInstance DeltaComplex::to_complex() const {
  if (!compositions_vanish())
    throw math_error("delta matrices do not compose to zero (form is not integrable)");
  return cxlin::ComplexInstance(dims(), matrices_);
}

DeltaComplex build_complex(const pforms::TwistedForm& w, int twist, Variant variant) {
  if (w.degree() != 1) throw math_error("build_complex: the form must be a 1-form");
  if (w.twist() < 1) throw math_error("build_complex: the form twist must be >= 1");
  const int r = w.ambient();
  const int d = w.twist();
  const int kmax = variant == Variant::minus ? (r - 1) / 2 : r / 2;

  std::vector<DeltaStage> stages;
  for (int k = 0; k <= kmax; ++k) {
    const int deg = variant == Variant::minus ? 2 * k + 1 : 2 * k;
    const int e_k = twist + k * d;
    stages.push_back(DeltaStage{deg, e_k, pforms::basis(r, deg, e_k).dim()});
  }
  std::vector<QMatrix> matrices;
  for (std::size_t k = 0; k + 1 < stages.size(); ++k) {
    if (d + stages[k].twist == 0) {
      std::ostringstream os;
      os << "degenerate twist sum at stage " << k << ": " << d << " + " << stages[k].twist
         << " = 0";
      throw math_error(os.str());
    }
    matrices.push_back(pforms::delta_matrix(
        w, pforms::basis(r, stages[k].form_degree, stages[k].twist),
        pforms::basis(r, stages[k + 1].form_degree, stages[k + 1].twist)));
  }
  return DeltaComplex(variant, r, d, twist, std::move(stages), std::move(matrices));
}

Theorem1Result theorem1_check(const pforms::TwistedForm& w, int twist) {
  Theorem1Result out{};
  out.integrable = pforms::integrable(w);
  out.minus_vanishes = build_complex(w, twist, Variant::minus).compositions_vanish();
  out.plus_vanishes = build_complex(w, twist, Variant::plus).compositions_vanish();
  return out;
}

RankProfile rank_profile(const pforms::TwistedForm& w, int twist, Variant variant) {
  if (!pforms::integrable(w))
    throw math_error("rank_profile requires an integrable form");
  const DeltaComplex dc = build_complex(w, twist, variant);
  if (dc.stages().size() < 2)
    throw math_error("rank_profile: need at least two stages");

  std::vector<Integer> rk;
  rk.reserve(dc.matrices().size());
  for (const QMatrix& m : dc.matrices()) rk.emplace_back(static_cast<unsigned long>(m.rank()));
  rankcomb::RankVector ranks(std::move(rk));

  const rankcomb::DimVector d = dc.to_complex().dim_vector();
  if (!rankcomb::is_admissible(d, ranks))
    throw math_error("rank profile fell outside the admissible set");

  std::vector<rankcomb::RankVector> dominating;
  for (const rankcomb::RankVector& m : rankcomb::maximal_elements(d))
    if (rankcomb::poset_leq(ranks, m)) dominating.push_back(m);

  return RankProfile{dc.ambient(),
                     dc.fol_degree(),
                     dc.twist(),
                     variant,
                     dc.dims(),
                     ranks,
                     rankcomb::homology_from_ranks(d, ranks).h,
                     true,
                     std::move(dominating),
                     rankcomb::stratum_dim(d, ranks),
                     rankcomb::tangent_dim(d, ranks)};
}

namespace {

int homogeneous_degree(const Polynomial& f, int ambient, const char* name) {
  int deg = -1;
  for (const auto& [exp, c] : f) {
    if (stratcx::is_zero(c)) continue;
    if (static_cast<int>(exp.size()) != ambient + 1)
      throw math_error(std::string(name) + ": exponent vector length must be ambient + 1");
    int s = 0;
    for (int e : exp) {
      if (e < 0) throw math_error(std::string(name) + ": negative exponent");
      s += e;
    }
    if (deg >= 0 && s != deg) throw math_error(std::string(name) + " is not homogeneous");
    deg = s;
  }
  return deg;
}

pforms::PolyForm as_function(const Polynomial& f, int ambient) {
  pforms::PolyForm out(ambient, 0);
  for (const auto& [exp, c] : f) out.add_term(pforms::FormKey{exp, {}}, c);
  return out;
}

} // namespace

pforms::TwistedForm fixture_pencil(int ambient, const Polynomial& F, int p,
                                   const Polynomial& G, int q) {
  const int degF = homogeneous_degree(F, ambient, "F");
  const int degG = homogeneous_degree(G, ambient, "G");
  if (degF != p) throw math_error("degree mismatch: F is not homogeneous of degree p");
  if (degG != q) throw math_error("degree mismatch: G is not homogeneous of degree q");
  const pforms::PolyForm f = as_function(F, ambient);
  const pforms::PolyForm g = as_function(G, ambient);
  pforms::PolyForm w =
      wedge(f, exterior_derivative(g)).scaled(Rational(p)) -
      wedge(g, exterior_derivative(f)).scaled(Rational(q));
  return pforms::TwistedForm::validated(ambient, 1, p + q, std::move(w));
}

pforms::TwistedForm fixture_pencil_monomial(int ambient, const std::vector<int>& f_exp, int p,
                                            const std::vector<int>& g_exp, int q) {
  Polynomial F, G;
  F[f_exp] = 1;
  G[g_exp] = 1;
  return fixture_pencil(ambient, F, p, G, q);
}

} // namespace stratcx::folan
