#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "stratcx/numeric.hpp"

namespace stratcx::rankcomb {

// Dimensions (d_0, ..., d_n) of the graded spaces; at least two entries,
// all nonnegative.
class DimVector {
public:
  explicit DimVector(std::vector<Integer> entries);
  DimVector(std::initializer_list<long> entries);

  std::size_t spaces() const { return entries_.size(); }   // n + 1
  std::size_t maps() const { return entries_.size() - 1; } // n
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Integer> entries() const { return entries_; }

  bool operator==(const DimVector&) const = default;

private:
  std::vector<Integer> entries_;
};

// Ranks (r_1, ..., r_n); all formulas apply the boundary convention
// r_0 = r_{n+1} = 0 via padded().
class RankVector {
public:
  explicit RankVector(std::vector<Integer> entries);
  RankVector(std::initializer_list<long> entries);

  std::size_t size() const { return entries_.size(); } // n
  // 0-based storage access: operator[](i) is r_{i+1}
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  // 1-based with boundary convention: padded(0) = padded(n+1) = 0
  Integer padded(std::size_t i) const;
  std::span<const Integer> entries() const { return entries_; }

  bool operator==(const RankVector&) const = default;
  // lexicographic; used only for deterministic ordering of enumerations
  bool operator<(const RankVector& o) const { return entries_ < o.entries_; }

private:
  std::vector<Integer> entries_;
};

// Derived dimensions of a complex: d_i = b_{i+1} + b_i + h_i, z_i = b_i + h_i.
// h and z have n+1 entries, b has n+2 with b_0 = b_{n+1} = 0.
struct HomologyProfile {
  std::vector<Integer> h;
  std::vector<Integer> b;
  std::vector<Integer> z;
};

// Truncated alternating sum (-1)^j * sum_{i<=j} (-1)^i e_i.
Integer euler_chi(std::span<const Integer> e, std::size_t j);

// h_i = d_i - r_{i+1} - r_i, b_i = r_i, z_i = d_i - r_{i+1}.
// Throws math_error when r is inadmissible for d.
HomologyProfile homology_from_ranks(const DimVector& d, const RankVector& r);

// Inverts homology_from_ranks: b_{j+1} = chi_j(d) - chi_j(h). Feasibility
// requires chi_j(h) <= chi_j(d) for j = 0..n-1 and chi_n(h) = chi_n(d);
// the error message names the first violated index.
RankVector ranks_from_homology(const DimVector& d, const std::vector<Integer>& h);

// r_{i+1} + r_i <= d_i for i = 0..n.
bool is_admissible(const DimVector& d, const RankVector& r);

// sum_i (d_i - r_i)(r_{i+1} + r_i) — dimension of the rank-r stratum.
Integer stratum_dim(const DimVector& d, const RankVector& r);
// the two equivalent expressions, kept separate for cross-checking:
Integer stratum_dim_via_homology(const DimVector& d, const RankVector& r);   // sum (d_i - r_i)(d_i - h_i)
Integer stratum_dim_half_squares(const DimVector& d, const RankVector& r);   // (1/2) sum (d_i^2 - h_i^2)
// sum (d_i - r_i) r_i + sum (d_i - r_i) r_{i+1}, the fibration count
Integer stratum_dim_fibration(const DimVector& d, const RankVector& r);

// sum_i h_i (h_{i+1} + r_{i+1}) + r_i d_i — tangent dimension at any point
// of exact rank r.
Integer tangent_dim(const DimVector& d, const RankVector& r);
// equivalent expression sum (d_i - r_i - r_{i+1})(d_{i+1} - r_{i+2}) + r_i d_i
Integer tangent_dim_alt(const DimVector& d, const RankVector& r);

// sum_i h_i (h'_i + r'_i) + r_i d'_{i-1} — dimension of the space of chain
// morphisms between complexes of the given rank data.
Integer hom_dim(const DimVector& d, const RankVector& r,
                const DimVector& d2, const RankVector& r2);

// The admissible set R(d), in lexicographic order.
std::vector<RankVector> enumerate_R(const DimVector& d);

// Maximal elements of R(d) under componentwise <=, in lexicographic order.
// These index the irreducible components of the variety of complexes.
std::vector<RankVector> maximal_elements(const DimVector& d);

bool poset_leq(const RankVector& r, const RankVector& s);
RankVector poset_meet(const RankVector& r, const RankVector& s);

// The rank vector of an exact complex on d: r_i = chi_{i-1}(d). Requires
// chi_j(d) >= 0 for j = 1..n-1 and chi_n(d) = 0 (error names the failing
// chi_j). The result is maximal in R(d) and has identically zero homology.
RankVector exact_rank_vector(const DimVector& d);

// [chi - e_1, ..., chi - e_n] with negative-coordinate entries dropped
// (those loci are empty). Each kept entry has stratum codimension exactly 1
// inside the exact-complex component.
std::vector<RankVector> delta_divisors(const DimVector& d);

} // namespace stratcx::rankcomb
