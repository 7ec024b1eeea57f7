#pragma once

#include <optional>
#include <vector>

#include "polar/field.hpp"

namespace polar {

// Small dense matrix over a field; shared plumbing for RREF, kernels and
// determinants used by the exterior and form layers.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Fe> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Fe& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Fe& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_from(const Field& f, int rows, int cols,
             std::initializer_list<long long> entries);

Mat mat_mul(const Field& f, const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& x);
Mat mat_sigma(const Field& f, const Mat& x);
Mat mat_scale(const Field& f, const Mat& x, Fe s);
Mat mat_identity(const Field& f, int n);
bool mat_is_zero(const Field& f, const Mat& x);

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(const Field& f, Mat& m);
int mat_rank(const Field& f, Mat m);

// Rows span {v : m v = 0}; returned in RREF.
Mat right_kernel(const Field& f, const Mat& m);

Fe determinant(const Field& f, Mat m);
std::optional<Mat> mat_inverse(const Field& f, const Mat& m);

}  // namespace polar
