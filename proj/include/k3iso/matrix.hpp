#pragma once

// Small dense exact-integer matrix utilities: products, fraction-free
// determinant, Smith normal form with transform tracking, row Hermite
// normal form. Sizes here are tiny (lattice ranks), so clarity wins over
// asymptotics.

#include "k3iso/numeric.hpp"

namespace k3iso {

using Mat = std::vector<Vec>;

Mat mat_identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec_mul(const Mat& a, const Vec& x);
Mat mat_transpose(const Mat& a);
bool mat_equal(const Mat& a, const Mat& b);

// Determinant of a square matrix, exact (Bareiss elimination).
Int mat_det(const Mat& a);

// Smith normal form: transform * A * cotransform = diag(d1..dr, 0..),
// d1 | d2 | ... and di > 0. cotransform_inv is the inverse of cotransform,
// maintained alongside so callers never invert a matrix themselves.
struct SmithForm {
  std::vector<Int> diag;  // min(rows, cols) entries, trailing zeros possible
  Mat transform;          // rows x rows, unimodular
  Mat cotransform;        // cols x cols, unimodular
  Mat cotransform_inv;    // inverse of cotransform
};

SmithForm smith_normal_form(const Mat& a);

// Canonical row Hermite normal form of a full-row-rank matrix: row echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
Mat hnf_rows(const Mat& a);

// Integer coordinates c with sum_i c_i rows[i] = v. Throws when the rows are
// dependent, v lies outside their span, or the coordinates are fractional.
Vec row_coordinates(const Mat& rows, const Vec& v);

}  // namespace k3iso
