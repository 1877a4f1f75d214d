#include "stratcx/rankcomb.hpp"

#include <algorithm>
#include <sstream>

namespace stratcx::rankcomb {

namespace {

std::vector<Integer> to_integers(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  out.reserve(xs.size());
  for (long x : xs) out.emplace_back(x);
  return out;
}

void require_same_length(const RankVector& r, const RankVector& s) {
  if (r.size() != s.size()) throw math_error("rank vectors have different lengths");
}

void require_matching(const DimVector& d, const RankVector& r) {
  if (r.size() != d.maps()) {
    std::ostringstream os;
    os << "rank vector length " << r.size() << " does not match " << d.maps() << " maps";
    throw math_error(os.str());
  }
}

} // namespace

DimVector::DimVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw math_error("dimension vector needs at least two entries");
  for (const Integer& e : entries_)
    if (e < 0) throw math_error("dimension vector entries must be nonnegative");
}

DimVector::DimVector(std::initializer_list<long> entries) : DimVector(to_integers(entries)) {}

RankVector::RankVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw math_error("rank vector needs at least one entry");
  for (const Integer& e : entries_)
    if (e < 0) throw math_error("rank vector entries must be nonnegative");
}

RankVector::RankVector(std::initializer_list<long> entries) : RankVector(to_integers(entries)) {}

Integer RankVector::padded(std::size_t i) const {
  if (i == 0 || i > entries_.size()) return 0;
  return entries_[i - 1];
}

Integer euler_chi(std::span<const Integer> e, std::size_t j) {
  if (j >= e.size()) throw math_error("euler_chi: index out of range");
  Integer acc = 0;
  for (std::size_t i = 0; i <= j; ++i) {
    if (i % 2 == 0)
      acc += e[i];
    else
      acc -= e[i];
  }
  return j % 2 == 0 ? acc : Integer(-acc);
}

HomologyProfile homology_from_ranks(const DimVector& d, const RankVector& r) {
  require_matching(d, r);
  const std::size_t n = d.maps();
  HomologyProfile p;
  p.h.resize(n + 1);
  p.b.resize(n + 2);
  p.z.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    p.b[i] = r.padded(i);
    p.z[i] = d[i] - r.padded(i + 1);
    p.h[i] = d[i] - r.padded(i + 1) - r.padded(i);
    if (p.h[i] < 0) {
      std::ostringstream os;
      os << "inadmissible rank vector: r_" << i << " + r_" << i + 1 << " = "
         << r.padded(i) + r.padded(i + 1) << " exceeds d_" << i << " = " << d[i];
      throw math_error(os.str());
    }
  }
  p.b[n + 1] = 0;
  return p;
}

RankVector ranks_from_homology(const DimVector& d, const std::vector<Integer>& h) {
  const std::size_t n = d.maps();
  if (h.size() != n + 1) throw math_error("homology vector length must equal space count");
  for (const Integer& x : h)
    if (x < 0) throw math_error("homology dimensions must be nonnegative");
  for (std::size_t j = 0; j <= n; ++j) {
    const Integer cd = euler_chi(d.entries(), j);
    const Integer ch = euler_chi(h, j);
    if (j < n ? ch > cd : ch != cd) {
      std::ostringstream os;
      os << "no complex realizes this homology: chi_" << j << "(h) = " << ch
         << (j < n ? " > " : " != ") << "chi_" << j << "(d) = " << cd;
      throw math_error(os.str());
    }
  }
  std::vector<Integer> r(n);
  for (std::size_t j = 0; j < n; ++j)
    r[j] = euler_chi(d.entries(), j) - euler_chi(h, j);  // b_{j+1}
  return RankVector(std::move(r));
}

bool is_admissible(const DimVector& d, const RankVector& r) {
  require_matching(d, r);
  for (std::size_t i = 0; i <= d.maps(); ++i)
    if (r.padded(i) + r.padded(i + 1) > d[i]) return false;
  return true;
}

namespace {

void require_admissible(const DimVector& d, const RankVector& r) {
  if (!is_admissible(d, r)) throw math_error("inadmissible rank vector for these dimensions");
}

} // namespace

Integer stratum_dim(const DimVector& d, const RankVector& r) {
  require_admissible(d, r);
  Integer acc = 0;
  for (std::size_t i = 0; i <= d.maps(); ++i)
    acc += (d[i] - r.padded(i)) * (r.padded(i + 1) + r.padded(i));
  return acc;
}

Integer stratum_dim_via_homology(const DimVector& d, const RankVector& r) {
  const HomologyProfile p = homology_from_ranks(d, r);
  Integer acc = 0;
  for (std::size_t i = 0; i <= d.maps(); ++i)
    acc += (d[i] - r.padded(i)) * (d[i] - p.h[i]);
  return acc;
}

Integer stratum_dim_half_squares(const DimVector& d, const RankVector& r) {
  const HomologyProfile p = homology_from_ranks(d, r);
  Integer acc = 0;
  for (std::size_t i = 0; i <= d.maps(); ++i)
    acc += d[i] * d[i] - p.h[i] * p.h[i];
  if (acc % 2 != 0) throw math_error("half-squares expression is not an even integer");
  return acc / 2;
}

Integer stratum_dim_fibration(const DimVector& d, const RankVector& r) {
  require_admissible(d, r);
  Integer acc = 0;
  for (std::size_t i = 0; i <= d.maps(); ++i) {
    acc += (d[i] - r.padded(i)) * r.padded(i);
    acc += (d[i] - r.padded(i)) * r.padded(i + 1);
  }
  return acc;
}

Integer tangent_dim(const DimVector& d, const RankVector& r) {
  const HomologyProfile p = homology_from_ranks(d, r);
  const std::size_t n = d.maps();
  Integer acc = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const Integer h_next = i + 1 <= n ? p.h[i + 1] : Integer(0);
    acc += p.h[i] * (h_next + r.padded(i + 1));
    acc += r.padded(i) * d[i];
  }
  return acc;
}

Integer tangent_dim_alt(const DimVector& d, const RankVector& r) {
  require_admissible(d, r);
  const std::size_t n = d.maps();
  Integer acc = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const Integer d_next = i + 1 <= n ? d[i + 1] : Integer(0);
    acc += (d[i] - r.padded(i) - r.padded(i + 1)) * (d_next - r.padded(i + 2));
    acc += r.padded(i) * d[i];
  }
  return acc;
}

Integer hom_dim(const DimVector& d, const RankVector& r,
                const DimVector& d2, const RankVector& r2) {
  if (d.maps() != d2.maps()) throw math_error("hom_dim: lengths differ");
  const HomologyProfile p = homology_from_ranks(d, r);
  const HomologyProfile p2 = homology_from_ranks(d2, r2);
  const std::size_t n = d.maps();
  Integer acc = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    acc += p.h[i] * (p2.h[i] + r2.padded(i));
    if (i >= 1) acc += r.padded(i) * d2[i - 1];
  }
  return acc;
}

namespace {

void enumerate_rec(const DimVector& d, std::vector<Integer>& prefix,
                   std::vector<RankVector>& out) {
  const std::size_t n = d.maps();
  const std::size_t i = prefix.size() + 1;  // next rank index, 1-based
  if (i > n) {
    out.push_back(RankVector(prefix));
    return;
  }
  // r_i <= d_{i-1} - r_{i-1}; and r_i <= d_i so that r_i + r_{i+1} <= d_i
  // (or r_n <= d_n directly) stays satisfiable
  Integer ub = d[i - 1];
  if (i >= 2) ub = d[i - 1] - prefix[i - 2];
  if (ub > d[i]) ub = d[i];
  for (Integer v = 0; v <= ub; ++v) {
    prefix.push_back(v);
    enumerate_rec(d, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<RankVector> enumerate_R(const DimVector& d) {
  std::vector<RankVector> out;
  std::vector<Integer> prefix;
  enumerate_rec(d, prefix, out);
  return out;
}

std::vector<RankVector> maximal_elements(const DimVector& d) {
  // R(d) is downward closed, so r is maximal iff no coordinate can be
  // bumped without leaving the admissible set
  std::vector<RankVector> out;
  for (const RankVector& r : enumerate_R(d)) {
    bool maximal = true;
    for (std::size_t i = 0; i < r.size() && maximal; ++i) {
      std::vector<Integer> bumped(r.entries().begin(), r.entries().end());
      bumped[i] += 1;
      if (is_admissible(d, RankVector(std::move(bumped)))) maximal = false;
    }
    if (maximal) out.push_back(r);
  }
  return out;
}

bool poset_leq(const RankVector& r, const RankVector& s) {
  require_same_length(r, s);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] > s[i]) return false;
  return true;
}

RankVector poset_meet(const RankVector& r, const RankVector& s) {
  require_same_length(r, s);
  std::vector<Integer> t(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) t[i] = std::min(r[i], s[i]);
  return RankVector(std::move(t));
}

RankVector exact_rank_vector(const DimVector& d) {
  const std::size_t n = d.maps();
  for (std::size_t j = 1; j <= n; ++j) {
    const Integer c = euler_chi(d.entries(), j);
    if (j < n ? c < 0 : c != 0) {
      std::ostringstream os;
      os << "no exact complex on these dimensions: chi_" << j << "(d) = " << c
         << (j < n ? " < 0" : " != 0");
      throw math_error(os.str());
    }
  }
  // the exact ranks are the partial Euler characteristics, shifted one slot:
  // r_i = chi_{i-1}(d), so that r_i + r_{i+1} = d_i throughout
  std::vector<Integer> r(n);
  for (std::size_t i = 1; i <= n; ++i) r[i - 1] = euler_chi(d.entries(), i - 1);
  return RankVector(std::move(r));
}

std::vector<RankVector> delta_divisors(const DimVector& d) {
  const RankVector chi = exact_rank_vector(d);
  std::vector<RankVector> out;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (chi[i] == 0) continue;  // chi - e_i would go negative: empty locus
    std::vector<Integer> v(chi.entries().begin(), chi.entries().end());
    v[i] -= 1;
    out.push_back(RankVector(std::move(v)));
  }
  return out;
}

} // namespace stratcx::rankcomb
