#include "stratcx/pforms.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "stratcx/parallel.hpp"

namespace stratcx::pforms {

namespace {

void require_same_ambient(int a, int b) {
  if (a != b) throw math_error("forms live in different ambient spaces");
}

int key_coefficient_degree(const FormKey& k) {
  int s = 0;
  for (int e : k.exp) s += e;
  return s;
}

// sign of moving dx_v into the ascending set I (v not in I)
int insertion_sign(const std::vector<int>& idx, int v) {
  int before = 0;
  for (int i : idx)
    if (i < v) ++before;
  return before % 2 == 0 ? 1 : -1;
}

// sign of merging two ascending disjoint sets: (-1)^{#(i > j pairs)}
int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int inversions = 0;
  for (int i : a)
    for (int j : b)
      if (i > j) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

PolyForm::PolyForm(int ambient, int degree) : ambient_(ambient), degree_(degree) {
  if (ambient < 1) throw math_error("ambient projective dimension must be >= 1");
  if (degree < 0) throw math_error("form degree must be >= 0");
}

void PolyForm::add_term(FormKey key, const Rational& coeff) {
  if (stratcx::is_zero(coeff)) return;
  if (static_cast<int>(key.exp.size()) != ambient_ + 1)
    throw math_error("term exponent vector has wrong length");
  if (static_cast<int>(key.dx.size()) != degree_)
    throw math_error("term dx set has wrong size");
  for (std::size_t i = 0; i < key.dx.size(); ++i) {
    if (key.dx[i] < 0 || key.dx[i] > ambient_) throw math_error("dx index out of range");
    if (i > 0 && key.dx[i] <= key.dx[i - 1]) throw math_error("dx set must be strictly increasing");
  }
  for (int e : key.exp)
    if (e < 0) throw math_error("negative exponent in term");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (stratcx::is_zero(it->second)) terms_.erase(it);
  }
}

PolyForm PolyForm::operator+(const PolyForm& rhs) const {
  require_same_ambient(ambient_, rhs.ambient_);
  if (degree_ != rhs.degree_) throw math_error("form degrees differ in sum");
  PolyForm out = *this;
  for (const auto& [k, c] : rhs.terms_) out.add_term(k, c);
  return out;
}

PolyForm PolyForm::operator-(const PolyForm& rhs) const {
  return *this + rhs.scaled(Rational(-1));
}

PolyForm PolyForm::scaled(const Rational& s) const {
  PolyForm out(ambient_, degree_);
  if (stratcx::is_zero(s)) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
  return out;
}

int PolyForm::coefficient_degree() const {
  if (terms_.empty()) return -1;
  return key_coefficient_degree(terms_.begin()->first);
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  require_same_ambient(a.ambient(), b.ambient());
  PolyForm out(a.ambient(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.ambient() + 1) return out;  // no room: identically zero
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      bool overlap = false;
      for (int i : ka.dx)
        if (std::binary_search(kb.dx.begin(), kb.dx.end(), i)) {
          overlap = true;
          break;
        }
      if (overlap) continue;
      FormKey key;
      key.exp.resize(ka.exp.size());
      for (std::size_t i = 0; i < key.exp.size(); ++i) key.exp[i] = ka.exp[i] + kb.exp[i];
      key.dx.reserve(ka.dx.size() + kb.dx.size());
      std::merge(ka.dx.begin(), ka.dx.end(), kb.dx.begin(), kb.dx.end(),
                 std::back_inserter(key.dx));
      const int sign = merge_sign(ka.dx, kb.dx);
      out.add_term(std::move(key), sign > 0 ? ca * cb : Rational(-(ca * cb)));
    }
  }
  return out;
}

PolyForm exterior_derivative(const PolyForm& a) {
  PolyForm out(a.ambient(), a.degree() + 1);
  for (const auto& [k, c] : a.terms()) {
    for (int v = 0; v <= a.ambient(); ++v) {
      if (k.exp[v] == 0) continue;
      if (std::binary_search(k.dx.begin(), k.dx.end(), v)) continue;
      FormKey key = k;
      key.exp[v] -= 1;
      key.dx.insert(std::upper_bound(key.dx.begin(), key.dx.end(), v), v);
      const Rational coeff = c * k.exp[v];
      out.add_term(std::move(key), insertion_sign(k.dx, v) > 0 ? coeff : Rational(-coeff));
    }
  }
  return out;
}

PolyForm radial_contraction(const PolyForm& a) {
  if (a.degree() == 0) return PolyForm(a.ambient(), 0);
  PolyForm out(a.ambient(), a.degree() - 1);
  for (const auto& [k, c] : a.terms()) {
    for (std::size_t t = 0; t < k.dx.size(); ++t) {
      FormKey key;
      key.exp = k.exp;
      key.exp[k.dx[t]] += 1;
      key.dx.reserve(k.dx.size() - 1);
      for (std::size_t s = 0; s < k.dx.size(); ++s)
        if (s != t) key.dx.push_back(k.dx[s]);
      out.add_term(std::move(key), t % 2 == 0 ? c : Rational(-c));
    }
  }
  return out;
}

TwistedForm TwistedForm::validated(int ambient, int degree, int twist, PolyForm poly) {
  if (poly.ambient() != ambient || poly.degree() != degree)
    throw math_error("twisted form: ambient/degree mismatch with payload");
  for (const auto& [k, c] : poly.terms()) {
    (void)c;
    if (key_coefficient_degree(k) != twist - degree) {
      std::ostringstream os;
      os << "twisted form of twist " << twist << " needs coefficient degree "
         << twist - degree << ", found " << key_coefficient_degree(k);
      throw math_error(os.str());
    }
  }
  if (!radial_contraction(poly).is_zero())
    throw math_error("twisted form: radial contraction does not vanish");
  return TwistedForm(twist, std::move(poly));
}

TwistedForm TwistedForm::zero(int ambient, int degree, int twist) {
  return TwistedForm(twist, PolyForm(ambient, degree));
}

TwistedForm TwistedForm::operator+(const TwistedForm& rhs) const {
  if (twist_ != rhs.twist_) throw math_error("twist mismatch in sum");
  return TwistedForm(twist_, poly_ + rhs.poly_);
}

TwistedForm TwistedForm::operator-(const TwistedForm& rhs) const {
  if (twist_ != rhs.twist_) throw math_error("twist mismatch in difference");
  return TwistedForm(twist_, poly_ - rhs.poly_);
}

TwistedForm TwistedForm::scaled(const Rational& s) const {
  return TwistedForm(twist_, poly_.scaled(s));
}

TwistedForm star(const TwistedForm& a, const TwistedForm& b) {
  require_same_ambient(a.ambient(), b.ambient());
  const int d1 = a.twist();
  const int d2 = b.twist();
  if (d1 + d2 == 0)
    throw math_error("star product undefined: twists sum to zero");
  const int k1 = a.degree();
  const int k2 = b.degree();
  const Rational c1 = make_ratio(d1, d1 + d2);
  const Rational c2 = make_ratio(d2, d1 + d2);
  PolyForm left = wedge(a.poly(), exterior_derivative(b.poly())).scaled(c1);
  PolyForm right = wedge(b.poly(), exterior_derivative(a.poly())).scaled(c2);
  const int sign = ((k1 + 1) * (k2 + 1)) % 2 == 0 ? 1 : -1;
  PolyForm sum = sign > 0 ? left + right : left - right;
  return TwistedForm::validated(a.ambient(), k1 + k2 + 1, d1 + d2, std::move(sum));
}

PolyForm wedge(const TwistedForm& a, const TwistedForm& b) { return wedge(a.poly(), b.poly()); }
PolyForm exterior_derivative(const TwistedForm& a) { return exterior_derivative(a.poly()); }
PolyForm radial_contraction(const TwistedForm& a) { return radial_contraction(a.poly()); }

bool integrable(const TwistedForm& w) {
  if (w.degree() != 1) throw math_error("integrability is defined for 1-forms");
  return wedge(w.poly(), exterior_derivative(w.poly())).is_zero();
}

std::vector<std::vector<int>> monomials(int vars, int total) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> cur(vars, 0);
  // lexicographic by recursive descent
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (vars <= 0) throw math_error("monomials: need at least one variable");
  rec(rec, 0, total);
  return out;
}

namespace {

std::vector<std::vector<int>> index_sets(int top, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || size > top + 1) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= top; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<FormKey> generator_list(int ambient, int degree, int twist) {
  std::vector<FormKey> out;
  const int coeff_deg = twist - degree;
  if (coeff_deg < 0 || degree > ambient + 1) return out;
  for (const auto& exp : monomials(ambient + 1, coeff_deg))
    for (const auto& dx : index_sets(ambient, degree)) out.push_back(FormKey{exp, dx});
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

FormBasis::FormBasis(int ambient, int degree, int twist)
    : ambient_(ambient), degree_(degree), twist_(twist) {
  if (ambient < 1) throw math_error("ambient projective dimension must be >= 1");
  if (degree < 0 || degree > ambient) throw math_error("form degree must lie in 0..ambient");
  generators_ = generator_list(ambient, degree, twist);
  for (std::size_t i = 0; i < generators_.size(); ++i) generator_index_[generators_[i]] = i;
  if (generators_.empty()) return;

  if (degree == 0) {
    // contraction is trivial on functions: every monomial descends
    free_positions_.resize(generators_.size());
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      free_positions_[i] = i;
      PolyForm p(ambient, 0);
      p.add_term(generators_[i], Rational(1));
      elements_.push_back(TwistedForm::validated(ambient, 0, twist, std::move(p)));
    }
    return;
  }

  // contraction matrix: rows indexed by (degree-1)-form generators of twist e
  const std::vector<FormKey> target = generator_list(ambient, degree - 1, twist);
  std::map<FormKey, std::size_t> target_index;
  for (std::size_t i = 0; i < target.size(); ++i) target_index[target[i]] = i;

  QMatrix contraction(target.size(), generators_.size());
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    PolyForm gen(ambient, degree);
    gen.add_term(generators_[j], Rational(1));
    const PolyForm image = radial_contraction(gen);
    for (const auto& [k, c] : image.terms()) contraction(target_index.at(k), j) = c;
  }

  const Echelon ech = contraction.reduced_echelon();
  free_positions_ = ech.free_cols();
  const QMatrix kernel = contraction.nullspace();
  for (std::size_t v = 0; v < kernel.cols(); ++v) {
    PolyForm p(ambient, degree);
    for (std::size_t g = 0; g < generators_.size(); ++g)
      if (!stratcx::is_zero(kernel(g, v))) p.add_term(generators_[g], kernel(g, v));
    elements_.push_back(TwistedForm::validated(ambient, degree, twist, std::move(p)));
  }
}

std::vector<Rational> FormBasis::coordinates(const TwistedForm& f) const {
  if (f.ambient() != ambient_ || f.degree() != degree_ || f.twist() != twist_)
    throw math_error("coordinates: form does not live in this space");
  // vectorize over the generator list; a validated twisted form lies in the
  // contraction kernel, so reading the free positions is exact
  std::vector<const Rational*> dense(generators_.size(), nullptr);
  for (const auto& [k, c] : f.poly().terms()) {
    auto it = generator_index_.find(k);
    if (it == generator_index_.end())
      throw math_error("coordinates: term outside the generator list");
    dense[it->second] = &c;
  }
  std::vector<Rational> out(free_positions_.size());
  for (std::size_t j = 0; j < free_positions_.size(); ++j)
    if (const Rational* p = dense[free_positions_[j]]) out[j] = *p;
  return out;
}

const FormBasis& basis(int ambient, int degree, int twist) {
  struct Key {
    int r, k, e;
    auto operator<=>(const Key&) const = default;
  };
  static std::mutex mu;
  static std::map<Key, FormBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  const Key key{ambient, degree, twist};
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, FormBasis(ambient, degree, twist)).first;
  return it->second;
}

Integer bott_dimension(int ambient, int degree, int twist) {
  if (!(twist > degree && degree >= 1))
    throw math_error("closed-form dimension needs e > k >= 1");
  return binomial(Integer(twist - 1), static_cast<unsigned long>(degree)) *
         binomial(Integer(twist + ambient - degree), static_cast<unsigned long>(ambient - degree));
}

namespace {

void require_delta_args(const TwistedForm& w, const FormBasis& source, const FormBasis& target) {
  if (w.degree() != 1) throw math_error("delta matrix: multiplier must be a 1-form");
  require_same_ambient(w.ambient(), source.ambient());
  require_same_ambient(w.ambient(), target.ambient());
  if (target.degree() != source.degree() + 2)
    throw math_error("delta matrix: target degree must be source degree + 2");
  if (target.twist() != source.twist() + w.twist())
    throw math_error("delta matrix: target twist must be source twist + multiplier twist");
  if (w.twist() + source.twist() == 0)
    throw math_error("delta matrix: degenerate twist sum at this stage");
}

} // namespace

QMatrix delta_matrix_serial(const TwistedForm& w, const FormBasis& source,
                            const FormBasis& target) {
  require_delta_args(w, source, target);
  QMatrix out(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    const std::vector<Rational> col = target.coordinates(star(w, source.elements()[j]));
    for (std::size_t i = 0; i < target.dim(); ++i) out(i, j) = col[i];
  }
  return out;
}

QMatrix delta_matrix(const TwistedForm& w, const FormBasis& source, const FormBasis& target) {
  require_delta_args(w, source, target);
  QMatrix out(target.dim(), source.dim());
  const int cols = static_cast<int>(source.dim());
  std::exception_ptr first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
#endif
  for (int j = 0; j < cols; ++j) {
    try {
      const std::vector<Rational> col = target.coordinates(star(w, source.elements()[j]));
      for (std::size_t i = 0; i < target.dim(); ++i) out(i, static_cast<std::size_t>(j)) = col[i];
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(stratcx_delta_err)
#endif
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

std::size_t delta_injectivity_rank(int ambient, int fol_degree, int degree, int twist) {
  if (degree + 2 > ambient)
    throw math_error("injectivity rank needs k + 2 <= r");
  const FormBasis& forms = basis(ambient, 1, fol_degree);
  const FormBasis& source = basis(ambient, degree, twist);
  const FormBasis& target = basis(ambient, degree + 2, twist + fol_degree);
  if (forms.dim() == 0 || source.dim() == 0)
    throw math_error("injectivity rank: empty source space");

  // columns are the flattened delta matrices of the 1-form basis elements
  QMatrix flat(source.dim() * target.dim(), forms.dim());
  const int cols = static_cast<int>(forms.dim());
  std::exception_ptr first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
#endif
  for (int c = 0; c < cols; ++c) {
    try {
      const QMatrix dm = delta_matrix_serial(forms.elements()[c], source, target);
      for (std::size_t i = 0; i < dm.rows(); ++i)
        for (std::size_t j = 0; j < dm.cols(); ++j)
          flat(j * target.dim() + i, static_cast<std::size_t>(c)) = dm(i, j);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(stratcx_inj_err)
#endif
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return flat.rank();
}

TwistedForm random_form(int ambient, int degree, int twist, std::uint64_t seed) {
  const FormBasis& b = basis(ambient, degree, twist);
  TwistedForm out = TwistedForm::zero(ambient, degree, twist);
  if (b.dim() == 0) return out;
  SmallRng rng(seed);
  const std::size_t picks = std::min<std::size_t>(b.dim(), 5);
  for (std::size_t t = 0; t < picks; ++t) {
    const std::size_t idx = rng.raw() % b.dim();
    int c = rng.pick(-3, 3);
    if (t == 0 && c == 0) c = 1;  // keep the draw nonzero
    out = out + b.elements()[idx].scaled(Rational(c));
  }
  return out;
}

} // namespace stratcx::pforms
