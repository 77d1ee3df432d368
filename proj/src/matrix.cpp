#include "k3iso/matrix.hpp"

#include <algorithm>

namespace k3iso {

Mat mat_identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw std::invalid_argument("mat_mul: dimension mismatch");
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat c(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

Vec mat_vec_mul(const Mat& a, const Vec& x) {
  if (a.empty() || a[0].size() != x.size())
    throw std::invalid_argument("mat_vec_mul: dimension mismatch");
  Vec y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Int mat_det(const Mat& a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("mat_det: not square");
  if (n == 0) return 1;
  Mat m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

struct SnfState {
  Mat d, p, q, qinv;

  void row_swap(std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(p[i], p[j]);
  }
  // row i += c * row j
  void row_add(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < d[0].size(); ++k) d[i][k] += c * d[j][k];
    for (std::size_t k = 0; k < p[0].size(); ++k) p[i][k] += c * p[j][k];
  }
  void row_negate(std::size_t i) {
    for (auto& v : d[i]) v = -v;
    for (auto& v : p[i]) v = -v;
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : q) std::swap(row[i], row[j]);
    std::swap(qinv[i], qinv[j]);
  }
  // col j += c * col i  (on qinv this is the inverse row operation)
  void col_add(std::size_t j, std::size_t i, const Int& c) {
    for (auto& row : d) row[j] += c * row[i];
    for (auto& row : q) row[j] += c * row[i];
    for (std::size_t k = 0; k < qinv[0].size(); ++k) qinv[i][k] -= c * qinv[j][k];
  }
};

}  // namespace

SmithForm smith_normal_form(const Mat& a) {
  if (a.empty() || a[0].empty()) throw std::invalid_argument("smith_normal_form: empty matrix");
  std::size_t rows = a.size(), cols = a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");

  SnfState s{a, mat_identity(rows), mat_identity(cols), mat_identity(cols)};
  std::size_t rank_bound = std::min(rows, cols);

  for (std::size_t t = 0; t < rank_bound; ++t) {
    // Pick the absolutely smallest nonzero entry of the trailing block as pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s.d[i][j] != 0 && (!found || abs_int(s.d[i][j]) < best)) {
          best = abs_int(s.d[i][j]);
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) s.row_swap(t, pi);
    if (pj != t) s.col_swap(t, pj);

    for (;;) {
      // Clear column t below the pivot.
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (s.d[i][t] == 0) continue;
          Int qq = s.d[i][t] / s.d[t][t];
          if (qq != 0) s.row_add(i, t, -qq);
          if (s.d[i][t] != 0) {  // remainder smaller than pivot: promote it
            s.row_swap(t, i);
            dirty = true;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (s.d[t][j] == 0) continue;
          Int qq = s.d[t][j] / s.d[t][t];
          if (qq != 0) s.col_add(j, t, -qq);
          if (s.d[t][j] != 0) {
            s.col_swap(t, j);
            dirty = true;
          }
        }
      }
      // Divisibility: the pivot must divide everything left in the block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols && fixed; ++j)
          if (mod_floor(s.d[i][j], s.d[t][t]) != 0) {
            s.row_add(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (s.d[t][t] < 0) s.row_negate(t);
  }

  SmithForm out;
  out.diag.resize(rank_bound);
  for (std::size_t t = 0; t < rank_bound; ++t) out.diag[t] = s.d[t][t];
  out.transform = std::move(s.p);
  out.cotransform = std::move(s.q);
  out.cotransform_inv = std::move(s.qinv);
  return out;
}

Mat hnf_rows(const Mat& a) {
  if (a.empty()) return {};
  std::size_t rows = a.size(), cols = a[0].size();
  Mat m = a;
  std::size_t pivot_row = 0;
  for (std::size_t j = 0; j < cols && pivot_row < rows; ++j) {
    // Euclid on column j among rows >= pivot_row.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i)
        if (m[i][j] != 0 && (best == rows || abs_int(m[i][j]) < abs_int(m[best][j]))) best = i;
      if (best == rows) break;  // column clear
      if (best != pivot_row) std::swap(m[pivot_row], m[best]);
      bool clear = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (m[i][j] == 0) continue;
        Int qq = m[i][j] / m[pivot_row][j];
        if (qq != 0)
          for (std::size_t k = 0; k < cols; ++k) m[i][k] -= qq * m[pivot_row][k];
        if (m[i][j] != 0) clear = false;
      }
      if (clear) break;
    }
    if (m[pivot_row][j] == 0) continue;
    if (m[pivot_row][j] < 0)
      for (auto& v : m[pivot_row]) v = -v;
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int qq = floor_div(m[i][j], m[pivot_row][j]);
      if (qq != 0)
        for (std::size_t k = 0; k < cols; ++k) m[i][k] -= qq * m[pivot_row][k];
    }
    ++pivot_row;
  }
  if (pivot_row != rows) throw std::invalid_argument("hnf_rows: rows are linearly dependent");
  return m;
}

Vec row_coordinates(const Mat& rows, const Vec& v) {
  const std::size_t r = rows.size();
  if (r == 0) throw std::invalid_argument("row_coordinates: empty basis");
  const std::size_t n = rows.front().size();
  for (const Vec& row : rows)
    if (row.size() != n)
      throw std::invalid_argument("row_coordinates: ragged basis");
  if (v.size() != n)
    throw std::invalid_argument("row_coordinates: dimension mismatch");
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(r + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = Rat(rows[j][i]);
    m[i][r] = Rat(v[i]);
  }
  std::vector<std::size_t> pivot_of_col(r, 0);
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t p = lead;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n)
      throw std::invalid_argument("row_coordinates: basis rows are dependent");
    std::swap(m[p], m[lead]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == lead || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[lead][col];
      for (std::size_t j = col; j <= r; ++j) m[i][j] -= f * m[lead][j];
    }
    pivot_of_col[col] = lead;
    ++lead;
  }
  for (std::size_t i = lead; i < n; ++i)
    if (m[i][r] != 0)
      throw std::invalid_argument("row_coordinates: vector not in the row span");
  Vec out(r);
  for (std::size_t col = 0; col < r; ++col) {
    const auto& row = m[pivot_of_col[col]];
    Rat c = row[r] / row[col];
    if (denominator(c) != 1)
      throw std::invalid_argument("row_coordinates: coordinates are not integral");
    out[col] = numerator(c);
  }
  return out;
}

}  // namespace k3iso
