#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polar/field.hpp"
#include "polar/matrix.hpp"

namespace polar {

// Dense degree-r tensor with every index running over 1..N, stored row-major
// with the first index slowest. Degree 0 is a scalar.
class Tensor {
 public:
  Tensor() = default;
  Tensor(const Field& f, int N, int degree);  // zero tensor

  static Tensor scalar(const Field& f, int N, Fe value);
  static Tensor identity(const Field& f, int N);
  static Tensor from_matrix(const Field& f, const Mat& m);
  static Tensor vector(const Field& f, std::span<const Fe> entries);

  int dim() const { return N_; }
  int degree() const { return degree_; }
  const Field& field() const { return *field_; }
  size_t size() const { return data_.size(); }

  Fe& operator[](size_t flat) { return data_[flat]; }
  const Fe& operator[](size_t flat) const { return data_[flat]; }
  Fe at(std::span<const int> idx) const;        // 0-based indices
  void set(std::span<const int> idx, Fe value);
  size_t offset(std::span<const int> idx) const;

  bool is_zero() const;
  Mat as_matrix() const;  // degree 2 only

  friend bool operator==(const Tensor& x, const Tensor& y);

 private:
  const Field* field_ = nullptr;
  int N_ = 0;
  int degree_ = 0;
  std::vector<Fe> data_;
};

// Entry cap for tensor allocation (counts entries, not bytes).
size_t tensor_entry_cap();
void set_tensor_entry_cap(size_t cap);

// Contraction of the last p indices of X against the first p of Y;
// p = 0 degenerates to the tensor product.
Tensor p_product(const Tensor& x, const Tensor& y, int p);
Tensor tensor_product(const Tensor& x, const Tensor& y);

// Tensor product of even-degree tensors with the two row blocks placed
// before the two column blocks.
Tensor pseudo_product(const Tensor& x, const Tensor& y);
Tensor pseudo_power(const Tensor& a, int r);  // r = 0 gives the scalar 1

Tensor apply_sigma(const Tensor& x);
bool is_alternating(const Tensor& x);
Tensor transpose(const Tensor& x);  // degree 2 only
Tensor add(const Tensor& x, const Tensor& y);
Tensor scale(const Tensor& x, Fe s);
Tensor negate(const Tensor& x);

// Result with A contracted into one index of X:
//   right: z_{..j..} = sum_h x_{..h..} a_{h,j}
//   left:  z_{..j..} = sum_h a_{j,h} x_{..h..}
Tensor mode_apply_right(const Tensor& x, const Tensor& a, int mode);
Tensor mode_apply_left(const Tensor& x, const Tensor& a, int mode);

}  // namespace polar
