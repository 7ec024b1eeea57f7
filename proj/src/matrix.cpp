#include "polar/matrix.hpp"

#include <stdexcept>

namespace polar {

Mat mat_from(const Field& f, int rows, int cols,
             std::initializer_list<long long> entries) {
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("entry count mismatch");
  Mat m(rows, cols);
  auto it = entries.begin();
  for (auto& e : m.a) e = f.from_int(*it++);
  return m;
}

Mat mat_mul(const Field& f, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Fe xv = x.at(i, k);
      if (f.is_zero(xv)) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = f.add(z.at(i, j), f.mul(xv, y.at(k, j)));
    }
  for (auto& e : z.a)
    if (f.is_rational() && e.b == 0) e = f.zero();
  return z;
}

Mat mat_transpose(const Mat& x) {
  Mat z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

Mat mat_sigma(const Field& f, const Mat& x) {
  Mat z = x;
  for (auto& e : z.a) e = f.sigma(e);
  return z;
}

Mat mat_scale(const Field& f, const Mat& x, Fe s) {
  Mat z = x;
  for (auto& e : z.a) e = f.mul(e, s);
  return z;
}

Mat mat_identity(const Field& f, int n) {
  Mat m(n, n);
  for (auto& e : m.a) e = f.zero();
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

bool mat_is_zero(const Field& f, const Mat& x) {
  for (const auto& e : x.a)
    if (!f.is_zero(e)) return false;
  return true;
}

std::vector<int> rref(const Field& f, Mat& m) {
  // normalize default-constructed entries for the rationals
  if (f.is_rational())
    for (auto& e : m.a)
      if (e.b == 0) e = f.zero();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (!f.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(piv, c));
    Fe s = f.inv(m.at(row, col));
    for (int c = 0; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), s);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      Fe factor = m.at(r, col);
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int mat_rank(const Field& f, Mat m) { return static_cast<int>(rref(f, m).size()); }

Mat right_kernel(const Field& f, const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref(f, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  int nullity = m.cols - static_cast<int>(pivots.size());
  Mat k(nullity, m.cols);
  for (auto& e : k.a) e = f.zero();
  int out = 0;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    k.at(out, free_col) = f.one();
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      k.at(out, pivots[pr]) = f.neg(r.at(static_cast<int>(pr), free_col));
    ++out;
  }
  rref(f, k);  // canonical basis
  return k;
}

Fe determinant(const Field& f, Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square");
  if (f.is_rational())
    for (auto& e : m.a)
      if (e.b == 0) e = f.zero();
  int n = m.rows;
  Fe det = f.one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!f.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(col, c), m.at(piv, c));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(col, col));
    Fe s = f.inv(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      Fe factor = f.mul(m.at(r, col), s);
      if (f.is_zero(factor)) continue;
      for (int c = col; c < n; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(col, c)));
    }
  }
  return det;
}

std::optional<Mat> mat_inverse(const Field& f, const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square");
  int n = m.rows;
  Mat aug(n, 2 * n);
  for (auto& e : aug.a) e = f.zero();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  std::vector<int> pivots = rref(f, aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
    return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace polar
