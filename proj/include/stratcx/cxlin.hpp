#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stratcx/qmatrix.hpp"
#include "stratcx/rankcomb.hpp"

namespace stratcx::cxlin {

// A sequence of rational matrices M_1..M_n with M_{i+1} * M_i = 0, where
// M_i is d_i x d_{i-1} (the map V_{i-1} -> V_i acts by left multiplication
// on coordinate columns). A single space with no maps is allowed as the
// degenerate result of shifting a length-one complex.
class ComplexInstance {
public:
  ComplexInstance(std::vector<std::size_t> dims, std::vector<QMatrix> maps);

  static ComplexInstance zero(const std::vector<std::size_t>& dims);

  std::size_t spaces() const { return dims_.size(); }
  std::size_t map_count() const { return maps_.size(); }
  std::size_t dim(std::size_t i) const { return dims_[i]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const QMatrix& map(std::size_t i) const { return maps_[i - 1]; } // 1-based, as M_i
  const std::vector<QMatrix>& maps() const { return maps_; }

  rankcomb::DimVector dim_vector() const;

  bool operator==(const ComplexInstance&) const = default;

private:
  std::vector<std::size_t> dims_;
  std::vector<QMatrix> maps_;
};

// Blockwise change of basis (g_0, ..., g_n), each block invertible d_i x d_i.
class GroupElement {
public:
  explicit GroupElement(std::vector<QMatrix> blocks);

  std::size_t size() const { return blocks_.size(); }
  const QMatrix& block(std::size_t i) const { return blocks_[i]; }

  GroupElement inverse() const;

private:
  std::vector<QMatrix> blocks_;
};

bool verify_complex(const ComplexInstance& c);

rankcomb::RankVector ranks(const ComplexInstance& c);
rankcomb::HomologyProfile homology(const ComplexInstance& c);

// Random complex with exactly the requested ranks, deterministic per seed.
// Subspace and gluing blocks get entries in {-3..3} and are resampled
// (bounded retries) until invertible.
ComplexInstance construct_with_ranks(const rankcomb::DimVector& d,
                                     const rankcomb::RankVector& r,
                                     std::uint64_t seed);

// M_i -> g_i * M_i * g_{i-1}^{-1}; preserves ranks and homology.
ComplexInstance group_act(const GroupElement& g, const ComplexInstance& c);

// Random group element for property tests, deterministic per seed.
GroupElement random_group_element(const std::vector<std::size_t>& dims, std::uint64_t seed);

// Direct-sum decomposition of a complex: V_i = B_i + Hbar_i + Bbar_i where
// B_i = im(M_i), B_i + Hbar_i = ker(M_{i+1}), and M_{i+1} carries Bbar_i
// isomorphically onto B_{i+1}.
struct ComplexDecomposition {
  std::vector<QMatrix> image_basis;         // B_i, d_i x r_i
  std::vector<QMatrix> homology_complement; // Hbar_i, d_i x h_i
  std::vector<QMatrix> kernel_complement;   // Bbar_i, d_i x r_{i+1}
  std::vector<QMatrix> summand_maps;        // S_i: coordinates of M_i|Bbar_{i-1} in the B_i basis

  // T_i = [B_i | Hbar_i | Bbar_i]
  GroupElement change_of_basis() const;
  // the block-diagonal complex rebuilt from the summand data alone
  ComplexInstance block_complex() const;
  // conjugating the block complex back; equals the original input
  ComplexInstance reconstruct() const;
};

ComplexDecomposition split(const ComplexInstance& c);

// Basis of the space of chain morphisms g_i: V_i -> V'_i with
// g_i M_i = M'_i g_{i-1}; each element is one matrix per degree.
struct HomSpace {
  std::vector<std::vector<QMatrix>> basis;
  std::size_t dim() const { return basis.size(); }
};

HomSpace hom_space(const ComplexInstance& c, const ComplexInstance& c2);

// Maps (-1)^i M_{i+1} over dims (d_1, ..., d_n).
ComplexInstance shift(const ComplexInstance& c);

// Appends a zero space on the right (used to compare morphism spaces of
// complexes of different lengths).
ComplexInstance extended_by_zero(const ComplexInstance& c);

// Dimension of solutions of M_{i+1} G_i + G_{i+1} M_i = 0; for a single map
// there are no constraints and the ambient dimension d_0 * d_1 is returned.
std::size_t tangent_space_dim(const ComplexInstance& c);

// rank(M_i) <= r_i for all i.
bool closure_membership(const ComplexInstance& c, const rankcomb::RankVector& r);

} // namespace stratcx::cxlin
