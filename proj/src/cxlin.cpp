#include "stratcx/cxlin.hpp"

#include <sstream>

namespace stratcx::cxlin {

namespace {

constexpr int kMaxSampleRetries = 64;

Integer to_integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

std::size_t small_size(const Integer& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p())
    throw math_error(std::string(what) + ": value does not fit a machine size");
  return static_cast<std::size_t>(v.get_ui());
}

QMatrix random_matrix(std::size_t rows, std::size_t cols, SmallRng& rng) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.pick(-3, 3);
  return m;
}

QMatrix random_invertible(std::size_t n, SmallRng& rng) {
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    QMatrix m = random_matrix(n, n, rng);
    if (m.rank() == n) return m;
  }
  throw math_error("failed to sample an invertible block after bounded retries");
}

} // namespace

ComplexInstance::ComplexInstance(std::vector<std::size_t> dims, std::vector<QMatrix> maps)
    : dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.empty()) throw math_error("a complex needs at least one space");
  if (maps_.size() + 1 != dims_.size())
    throw math_error("map count must be one less than space count");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].rows() != dims_[i + 1] || maps_[i].cols() != dims_[i]) {
      std::ostringstream os;
      os << "map " << i + 1 << " has shape " << maps_[i].rows() << "x" << maps_[i].cols()
         << ", expected " << dims_[i + 1] << "x" << dims_[i];
      throw math_error(os.str());
    }
  }
}

ComplexInstance ComplexInstance::zero(const std::vector<std::size_t>& dims) {
  std::vector<QMatrix> maps;
  for (std::size_t i = 0; i + 1 < dims.size(); ++i)
    maps.emplace_back(dims[i + 1], dims[i]);
  return ComplexInstance(dims, std::move(maps));
}

rankcomb::DimVector ComplexInstance::dim_vector() const {
  std::vector<Integer> e;
  e.reserve(dims_.size());
  for (std::size_t v : dims_) e.push_back(to_integer(v));
  return rankcomb::DimVector(std::move(e));
}

GroupElement::GroupElement(std::vector<QMatrix> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].rows() != blocks_[i].cols())
      throw math_error("group element blocks must be square");
    if (blocks_[i].rank() != blocks_[i].rows())
      throw math_error("group element block is singular");
  }
}

GroupElement GroupElement::inverse() const {
  std::vector<QMatrix> inv;
  inv.reserve(blocks_.size());
  for (const QMatrix& b : blocks_) inv.push_back(b.inverse());
  return GroupElement(std::move(inv));
}

bool verify_complex(const ComplexInstance& c) {
  for (std::size_t i = 1; i + 1 <= c.map_count(); ++i)
    if (!(c.map(i + 1) * c.map(i)).is_zero()) return false;
  return true;
}

namespace {

void require_complex(const ComplexInstance& c) {
  if (!verify_complex(c)) throw math_error("matrices do not form a complex");
}

} // namespace

rankcomb::RankVector ranks(const ComplexInstance& c) {
  require_complex(c);
  if (c.map_count() == 0) throw math_error("ranks: complex has no maps");
  std::vector<Integer> r;
  r.reserve(c.map_count());
  for (std::size_t i = 1; i <= c.map_count(); ++i) r.push_back(to_integer(c.map(i).rank()));
  return rankcomb::RankVector(std::move(r));
}

rankcomb::HomologyProfile homology(const ComplexInstance& c) {
  require_complex(c);
  const std::size_t n = c.map_count();
  rankcomb::HomologyProfile p;
  p.h.resize(n + 1);
  p.b.resize(n + 2);
  p.z.resize(n + 1);
  std::vector<Integer> rk(n + 2, Integer(0));
  for (std::size_t i = 1; i <= n; ++i) rk[i] = to_integer(c.map(i).rank());
  for (std::size_t i = 0; i <= n; ++i) {
    p.b[i] = rk[i];
    p.z[i] = to_integer(c.dim(i)) - rk[i + 1];  // dim ker(M_{i+1})
    p.h[i] = p.z[i] - p.b[i];
  }
  p.b[n + 1] = 0;
  return p;
}

ComplexInstance construct_with_ranks(const rankcomb::DimVector& d,
                                     const rankcomb::RankVector& r,
                                     std::uint64_t seed) {
  if (!rankcomb::is_admissible(d, r))
    throw math_error("construct_with_ranks: inadmissible rank vector");
  const std::size_t n = d.maps();
  SmallRng rng(seed);

  // Per space: an invertible frame U_i whose first z_i columns span the
  // designated kernel Z_i and whose first r_i columns span the designated
  // image B_i (r_i <= z_i, so B_i sits inside Z_i).
  std::vector<std::size_t> dim(n + 1), rk(n + 2, 0), zk(n + 1);
  for (std::size_t i = 0; i <= n; ++i) dim[i] = small_size(d[i], "dimension");
  for (std::size_t i = 1; i <= n; ++i) rk[i] = small_size(r.padded(i), "rank");
  for (std::size_t i = 0; i <= n; ++i) zk[i] = dim[i] - rk[i + 1];

  std::vector<QMatrix> frame, frame_inv;
  frame.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    frame.push_back(random_invertible(dim[i], rng));
    frame_inv.push_back(frame.back().inverse());
  }

  std::vector<QMatrix> maps;
  maps.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    // projection of V_{i-1} onto the coordinates transverse to Z_{i-1}
    QMatrix proj(rk[i], dim[i - 1]);
    for (std::size_t a = 0; a < rk[i]; ++a)
      for (std::size_t b = 0; b < dim[i - 1]; ++b)
        proj(a, b) = frame_inv[i - 1](zk[i - 1] + a, b);
    // basis of B_i inside V_i
    QMatrix image(dim[i], rk[i]);
    for (std::size_t a = 0; a < dim[i]; ++a)
      for (std::size_t b = 0; b < rk[i]; ++b) image(a, b) = frame[i](a, b);
    const QMatrix glue = random_invertible(rk[i], rng);
    maps.push_back(image * glue * proj);
  }
  return ComplexInstance(dim, std::move(maps));
}

ComplexInstance group_act(const GroupElement& g, const ComplexInstance& c) {
  if (g.size() != c.spaces()) throw math_error("group_act: block count mismatch");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.block(i).rows() != c.dim(i)) throw math_error("group_act: block size mismatch");
  std::vector<QMatrix> maps;
  maps.reserve(c.map_count());
  for (std::size_t i = 1; i <= c.map_count(); ++i)
    maps.push_back(g.block(i) * c.map(i) * g.block(i - 1).inverse());
  return ComplexInstance(c.dims(), std::move(maps));
}

GroupElement random_group_element(const std::vector<std::size_t>& dims, std::uint64_t seed) {
  SmallRng rng(seed);
  std::vector<QMatrix> blocks;
  blocks.reserve(dims.size());
  for (std::size_t d : dims) blocks.push_back(random_invertible(d, rng));
  return GroupElement(std::move(blocks));
}

GroupElement ComplexDecomposition::change_of_basis() const {
  std::vector<QMatrix> blocks;
  blocks.reserve(image_basis.size());
  for (std::size_t i = 0; i < image_basis.size(); ++i)
    blocks.push_back(image_basis[i].hstack(homology_complement[i]).hstack(kernel_complement[i]));
  return GroupElement(std::move(blocks));
}

ComplexInstance ComplexDecomposition::block_complex() const {
  const std::size_t n = summand_maps.size();
  std::vector<std::size_t> dims(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    dims[i] = image_basis[i].cols() + homology_complement[i].cols() + kernel_complement[i].cols();
  std::vector<QMatrix> maps;
  for (std::size_t i = 1; i <= n; ++i) {
    // only the corner block is nonzero: Bbar_{i-1} coordinates feed B_i
    QMatrix m(dims[i], dims[i - 1]);
    const std::size_t col0 = image_basis[i - 1].cols() + homology_complement[i - 1].cols();
    for (std::size_t a = 0; a < summand_maps[i - 1].rows(); ++a)
      for (std::size_t b = 0; b < summand_maps[i - 1].cols(); ++b)
        m(a, col0 + b) = summand_maps[i - 1](a, b);
    maps.push_back(std::move(m));
  }
  return ComplexInstance(std::move(dims), std::move(maps));
}

ComplexInstance ComplexDecomposition::reconstruct() const {
  return group_act(change_of_basis(), block_complex());
}

ComplexDecomposition split(const ComplexInstance& c) {
  require_complex(c);
  const std::size_t n = c.map_count();
  ComplexDecomposition dec;
  dec.image_basis.resize(n + 1);
  dec.homology_complement.resize(n + 1);
  dec.kernel_complement.resize(n + 1);
  dec.summand_maps.resize(n);

  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t di = c.dim(i);
    // B_i = column space of M_i
    if (i == 0) {
      dec.image_basis[i] = QMatrix(di, 0);
    } else {
      const QMatrix& m = c.map(i);
      dec.image_basis[i] = m.columns(extend_basis(QMatrix(di, 0), m));
    }
    // Z_i = ker(M_{i+1}); the last space has no outgoing map
    const QMatrix kernel = i < n ? c.map(i + 1).nullspace() : QMatrix::identity(di);
    dec.homology_complement[i] = kernel.columns(extend_basis(dec.image_basis[i], kernel));
    const QMatrix z_basis = dec.image_basis[i].hstack(dec.homology_complement[i]);
    const QMatrix id = QMatrix::identity(di);
    dec.kernel_complement[i] = id.columns(extend_basis(z_basis, id));
  }
  for (std::size_t i = 1; i <= n; ++i)
    dec.summand_maps[i - 1] = dec.image_basis[i].solve(c.map(i) * dec.kernel_complement[i - 1]);
  return dec;
}

HomSpace hom_space(const ComplexInstance& c, const ComplexInstance& c2) {
  if (c.map_count() != c2.map_count()) throw math_error("hom_space: lengths differ");
  const std::size_t n = c.map_count();

  std::vector<std::size_t> offset(n + 2, 0);
  for (std::size_t i = 0; i <= n; ++i) offset[i + 1] = offset[i] + c2.dim(i) * c.dim(i);
  const std::size_t unknowns = offset[n + 1];

  std::size_t eqs = 0;
  for (std::size_t i = 1; i <= n; ++i) eqs += c2.dim(i) * c.dim(i - 1);

  // g_i M_i - M'_i g_{i-1} = 0, unknowns vec(g_0), ..., vec(g_n) row-major
  QMatrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const QMatrix& m = c.map(i);
    const QMatrix& m2 = c2.map(i);
    for (std::size_t a = 0; a < c2.dim(i); ++a)
      for (std::size_t b = 0; b < c.dim(i - 1); ++b) {
        for (std::size_t k = 0; k < c.dim(i); ++k)
          sys(row, offset[i] + a * c.dim(i) + k) += m(k, b);
        for (std::size_t k = 0; k < c2.dim(i - 1); ++k)
          sys(row, offset[i - 1] + k * c.dim(i - 1) + b) -= m2(a, k);
        ++row;
      }
  }

  const QMatrix kernel = sys.nullspace();
  HomSpace out;
  out.basis.reserve(kernel.cols());
  for (std::size_t v = 0; v < kernel.cols(); ++v) {
    std::vector<QMatrix> g;
    g.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      QMatrix gi(c2.dim(i), c.dim(i));
      for (std::size_t a = 0; a < c2.dim(i); ++a)
        for (std::size_t b = 0; b < c.dim(i); ++b)
          gi(a, b) = kernel(offset[i] + a * c.dim(i) + b, v);
      g.push_back(std::move(gi));
    }
    out.basis.push_back(std::move(g));
  }
  return out;
}

ComplexInstance shift(const ComplexInstance& c) {
  require_complex(c);
  if (c.spaces() < 2) throw math_error("shift: nothing left to shift");
  std::vector<std::size_t> dims(c.dims().begin() + 1, c.dims().end());
  std::vector<QMatrix> maps;
  for (std::size_t i = 1; i + 1 <= c.map_count(); ++i) {
    // stored map j corresponds to (-1)^j M_{j+1}
    maps.push_back(i % 2 == 1 ? -c.map(i + 1) : c.map(i + 1));
  }
  return ComplexInstance(std::move(dims), std::move(maps));
}

ComplexInstance extended_by_zero(const ComplexInstance& c) {
  std::vector<std::size_t> dims = c.dims();
  dims.push_back(0);
  std::vector<QMatrix> maps = c.maps();
  maps.emplace_back(0, c.dim(c.spaces() - 1));
  return ComplexInstance(std::move(dims), std::move(maps));
}

std::size_t tangent_space_dim(const ComplexInstance& c) {
  require_complex(c);
  const std::size_t n = c.map_count();
  if (n == 0) throw math_error("tangent_space: complex has no maps");

  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i)
    offset[i] = offset[i - 1] + (i >= 1 ? c.dim(i) * c.dim(i - 1) : 0);
  const std::size_t unknowns = offset[n];
  if (n == 1) return unknowns;  // no composition constraints

  std::size_t eqs = 0;
  for (std::size_t i = 1; i + 1 <= n; ++i) eqs += c.dim(i + 1) * c.dim(i - 1);

  // M_{i+1} G_i + G_{i+1} M_i = 0, unknowns vec(G_1), ..., vec(G_n)
  QMatrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    const QMatrix& m_next = c.map(i + 1);
    const QMatrix& m = c.map(i);
    for (std::size_t a = 0; a < c.dim(i + 1); ++a)
      for (std::size_t b = 0; b < c.dim(i - 1); ++b) {
        for (std::size_t k = 0; k < c.dim(i); ++k)
          sys(row, offset[i - 1] + k * c.dim(i - 1) + b) += m_next(a, k);
        for (std::size_t k = 0; k < c.dim(i); ++k)
          sys(row, offset[i] + a * c.dim(i) + k) += m(k, b);
        ++row;
      }
  }
  return unknowns - sys.rank();
}

bool closure_membership(const ComplexInstance& c, const rankcomb::RankVector& r) {
  require_complex(c);
  if (r.size() != c.map_count()) throw math_error("closure_membership: length mismatch");
  for (std::size_t i = 1; i <= c.map_count(); ++i)
    if (to_integer(c.map(i).rank()) > r.padded(i)) return false;
  return true;
}

} // namespace stratcx::cxlin
