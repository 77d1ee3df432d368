#include "k3iso/lattice.hpp"

#include <algorithm>

namespace k3iso {

GramLattice GramLattice::from(Mat gram) {
  std::size_t n = gram.size();
  if (n == 0) throw std::invalid_argument("GramLattice: empty matrix");
  for (const auto& row : gram)
    if (row.size() != n) throw std::invalid_argument("GramLattice: not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("GramLattice: not symmetric");
  Int d = mat_det(gram);
  if (d == 0) throw std::invalid_argument("GramLattice: degenerate form (det = 0)");
  return GramLattice(std::move(gram), std::move(d));
}

bool GramLattice::even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (mod_floor(gram_[i][i], 2) != 0) return false;
  return true;
}

Int GramLattice::inner(const Vec& x, const Vec& y) const {
  if (x.size() != rank() || y.size() != rank())
    throw std::invalid_argument("GramLattice::inner: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_[i][j] * y[j];
  return s;
}

Rat GramLattice::inner(const RatVec& x, const RatVec& y) const {
  if (x.size() != rank() || y.size() != rank())
    throw std::invalid_argument("GramLattice::inner: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += x[i] * Rat(gram_[i][j]) * y[j];
  return s;
}

Int determinant(const GramLattice& l) { return l.det(); }

Int gamma(const GramLattice& l, const Vec& x) {
  if (x.size() != l.rank()) throw std::invalid_argument("gamma: dimension mismatch");
  bool zero = std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
  if (zero) throw std::invalid_argument("gamma: zero vector");
  Vec img = mat_vec_mul(l.gram(), x);
  Int g = 0;
  for (const auto& v : img) g = gcd_int(g, v);
  return g;
}

Int DiscriminantGroup::total_order() const {
  Int t = 1;
  for (const auto& o : orders) t *= o;
  return t;
}

DiscriminantGroup discriminant_group(const GramLattice& l) {
  SmithForm s = smith_normal_form(l.gram());
  DiscriminantGroup out;
  // dual/lattice = (+) Z/d_i, generated by (1/d_i) * (column i of cotransform):
  // gram = transform^-1 * diag * cotransform^-1, so dual = gram^-1 Z^n
  // = cotransform * diag^-1 * Z^n in lattice coordinates.
  for (std::size_t i = 0; i < s.diag.size(); ++i) {
    if (s.diag[i] <= 1) continue;
    RatVec gen(l.rank());
    for (std::size_t r = 0; r < l.rank(); ++r) gen[r] = Rat(s.cotransform[r][i], s.diag[i]);
    out.orders.push_back(s.diag[i]);
    out.generators.push_back(std::move(gen));
  }
  return out;
}

bool in_dual(const GramLattice& l, const RatVec& g) {
  if (g.size() != l.rank()) throw std::invalid_argument("in_dual: dimension mismatch");
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < l.rank(); ++j) s += Rat(l.gram()[i][j]) * g[j];
    if (boost::multiprecision::denominator(s) != 1) return false;
  }
  return true;
}

Rat discriminant_quadratic(const GramLattice& l, const RatVec& g) {
  if (!l.even()) throw std::invalid_argument("discriminant_quadratic: lattice must be even");
  if (!in_dual(l, g)) throw std::invalid_argument("discriminant_quadratic: vector not in dual lattice");
  return reduce_mod(l.inner(g, g), 2);
}

Rat discriminant_bilinear(const GramLattice& l, const RatVec& g, const RatVec& h) {
  if (!in_dual(l, g) || !in_dual(l, h))
    throw std::invalid_argument("discriminant_bilinear: vector not in dual lattice");
  return reduce_mod(l.inner(g, h), 1);
}

Sublattice saturate(const GramLattice& l, const std::vector<Vec>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("saturate: empty generating set");
  for (const auto& v : vectors)
    if (v.size() != l.rank()) throw std::invalid_argument("saturate: dimension mismatch");
  Mat b(vectors.begin(), vectors.end());
  SmithForm s = smith_normal_form(b);
  // b = transform^-1 * diag * cotransform^-1; the rational row span of b is
  // spanned by the first r rows of cotransform_inv, whose integer span is
  // saturated because cotransform_inv is unimodular.
  std::size_t r = 0;
  for (const auto& d : s.diag)
    if (d != 0) ++r;
  if (r != vectors.size()) throw std::invalid_argument("saturate: vectors are linearly dependent");
  Mat basis(s.cotransform_inv.begin(), s.cotransform_inv.begin() + r);
  basis = hnf_rows(basis);
  Mat g(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g[i][j] = l.inner(basis[i], basis[j]);
  return Sublattice{std::move(basis), GramLattice::from(std::move(g))};
}

std::pair<int, int> signature(const GramLattice& l) {
  std::size_t n = l.rank();
  std::vector<RatVec> m(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(l.gram()[i][j]);
  auto swap_rc = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
  };
  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && m[j][j] == 0) ++j;
      if (j < n) {
        swap_rc(k, j);
      } else {
        // All remaining diagonal entries vanish; pull a nonzero pairing onto
        // the diagonal (exists, the trailing block is nondegenerate).
        std::size_t bi = n, bj = n;
        for (std::size_t i = k; i < n && bi == n; ++i)
          for (std::size_t jj = i + 1; jj < n; ++jj)
            if (m[i][jj] != 0) {
              bi = i;
              bj = jj;
              break;
            }
        if (bi == n) throw std::logic_error("signature: degenerate block");
        if (bi != k) swap_rc(k, bi);
        for (std::size_t i = 0; i < n; ++i) m[k][i] += m[bj][i];
        for (std::size_t i = 0; i < n; ++i) m[i][k] += m[i][bj];
      }
    }
    Rat pivot = m[k][k];
    if (pivot > 0)
      ++pos;
    else
      ++neg;
    // Schur complement of the pivot; the trailing block stays symmetric
    // because row k and column k agree before the update.
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = m[i][k] / pivot;
      if (f == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return {pos, neg};
}

}  // namespace k3iso
