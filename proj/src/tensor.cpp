#include "polar/tensor.hpp"

#include <stdexcept>

namespace polar {

namespace {

size_t g_entry_cap = size_t{1} << 27;

size_t checked_size(int N, int degree) {
  size_t s = 1;
  for (int i = 0; i < degree; ++i) {
    if (N != 0 && s > g_entry_cap / static_cast<size_t>(N))
      throw std::length_error("tensor exceeds entry cap");
    s *= static_cast<size_t>(N);
  }
  if (s > g_entry_cap) throw std::length_error("tensor exceeds entry cap");
  return s;
}

void require_compatible(const Tensor& x, const Tensor& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  if (!x.field().compatible(y.field())) throw std::invalid_argument("field mismatch");
}

size_t ipow(int n, int e) {
  size_t s = 1;
  while (e-- > 0) s *= static_cast<size_t>(n);
  return s;
}

}  // namespace

size_t tensor_entry_cap() { return g_entry_cap; }
void set_tensor_entry_cap(size_t cap) { g_entry_cap = cap; }

Tensor::Tensor(const Field& f, int N, int degree)
    : field_(&f), N_(N), degree_(degree) {
  if (N < 0 || degree < 0) throw std::invalid_argument("bad tensor shape");
  data_.assign(checked_size(N, degree), f.zero());
}

Tensor Tensor::scalar(const Field& f, int N, Fe value) {
  Tensor t(f, N, 0);
  t.data_[0] = value;
  return t;
}

Tensor Tensor::identity(const Field& f, int N) {
  Tensor t(f, N, 2);
  for (int i = 0; i < N; ++i) t.data_[static_cast<size_t>(i) * N + i] = f.one();
  return t;
}

Tensor Tensor::from_matrix(const Field& f, const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("tensor needs a square matrix");
  Tensor t(f, m.rows, 2);
  for (size_t i = 0; i < t.data_.size(); ++i) t.data_[i] = m.a[i];
  return t;
}

Tensor Tensor::vector(const Field& f, std::span<const Fe> entries) {
  Tensor t(f, static_cast<int>(entries.size()), 1);
  for (size_t i = 0; i < entries.size(); ++i) t.data_[i] = entries[i];
  return t;
}

size_t Tensor::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("index arity mismatch");
  size_t o = 0;
  for (int i : idx) {
    if (i < 0 || i >= N_) throw std::out_of_range("tensor index");
    o = o * static_cast<size_t>(N_) + static_cast<size_t>(i);
  }
  return o;
}

Fe Tensor::at(std::span<const int> idx) const { return data_[offset(idx)]; }
void Tensor::set(std::span<const int> idx, Fe value) { data_[offset(idx)] = value; }

bool Tensor::is_zero() const {
  for (const auto& e : data_)
    if (!field_->is_zero(e)) return false;
  return true;
}

Mat Tensor::as_matrix() const {
  if (degree_ != 2) throw std::invalid_argument("as_matrix needs degree 2");
  Mat m(N_, N_);
  for (size_t i = 0; i < data_.size(); ++i) m.a[i] = data_[i];
  return m;
}

bool operator==(const Tensor& x, const Tensor& y) {
  if (x.N_ != y.N_ || x.degree_ != y.degree_) return false;
  const Field& f = x.field();
  for (size_t i = 0; i < x.data_.size(); ++i)
    if (!f.eq(x.data_[i], y.data_[i])) return false;
  return true;
}

Tensor p_product(const Tensor& x, const Tensor& y, int p) {
  require_compatible(x, y);
  if (p < 0 || p > x.degree() || p > y.degree())
    throw std::invalid_argument("contraction order too large");
  const Field& f = x.field();
  int N = x.dim();
  size_t rows = ipow(N, x.degree() - p);
  size_t inner = ipow(N, p);
  size_t cols = ipow(N, y.degree() - p);
  Tensor z(f, N, x.degree() + y.degree() - 2 * p);
  for (size_t i = 0; i < rows; ++i)
    for (size_t h = 0; h < inner; ++h) {
      Fe xv = x[i * inner + h];
      if (f.is_zero(xv)) continue;
      for (size_t j = 0; j < cols; ++j)
        z[i * cols + j] = f.add(z[i * cols + j], f.mul(xv, y[h * cols + j]));
    }
  return z;
}

Tensor tensor_product(const Tensor& x, const Tensor& y) {
  return p_product(x, y, 0);
}

Tensor pseudo_product(const Tensor& x, const Tensor& y) {
  require_compatible(x, y);
  if (x.degree() % 2 != 0 || y.degree() % 2 != 0)
    throw std::invalid_argument("pseudo product needs even degrees");
  const Field& f = x.field();
  int N = x.dim();
  int u = x.degree() / 2, v = y.degree() / 2;
  Tensor z(f, N, 2 * (u + v));
  size_t xu = ipow(N, u), yv = ipow(N, v);
  // flat layout: [x-rows][y-rows][x-cols][y-cols]
  for (size_t xr = 0; xr < xu; ++xr)
    for (size_t xc = 0; xc < xu; ++xc) {
      Fe xv_ = x[xr * xu + xc];
      if (f.is_zero(xv_)) continue;
      for (size_t yr = 0; yr < yv; ++yr)
        for (size_t yc = 0; yc < yv; ++yc) {
          size_t o = ((xr * yv + yr) * xu + xc) * yv + yc;
          z[o] = f.mul(xv_, y[yr * yv + yc]);
        }
    }
  return z;
}

Tensor pseudo_power(const Tensor& a, int r) {
  if (r < 0) throw std::invalid_argument("pseudo power needs r >= 0");
  if (a.degree() % 2 != 0)
    throw std::invalid_argument("pseudo power needs even degree");
  if (r == 0) return Tensor::scalar(a.field(), a.dim(), a.field().one());
  Tensor z = a;
  for (int i = 1; i < r; ++i) z = pseudo_product(z, a);
  return z;
}

Tensor apply_sigma(const Tensor& x) {
  Tensor z = x;
  const Field& f = x.field();
  for (size_t i = 0; i < z.size(); ++i) z[i] = f.sigma(z[i]);
  return z;
}

bool is_alternating(const Tensor& x) {
  const Field& f = x.field();
  int k = x.degree();
  int N = x.dim();
  std::vector<int> idx(k, 0);
  std::vector<int> swapped(k);
  size_t total = x.size();
  for (size_t flat = 0; flat < total; ++flat) {
    // decode flat index
    size_t rem = flat;
    for (int t = k - 1; t >= 0; --t) {
      idx[t] = static_cast<int>(rem % N);
      rem /= N;
    }
    bool repeated = false;
    for (int a = 0; a < k && !repeated; ++a)
      for (int b = a + 1; b < k; ++b)
        if (idx[a] == idx[b]) {
          repeated = true;
          break;
        }
    if (repeated) {
      if (!f.is_zero(x[flat])) return false;
      continue;
    }
    for (int t = 0; t + 1 < k; ++t) {
      swapped = idx;
      std::swap(swapped[t], swapped[t + 1]);
      if (!f.eq(x.at(swapped), f.neg(x[flat]))) return false;
    }
  }
  return true;
}

Tensor transpose(const Tensor& x) {
  if (x.degree() != 2) throw std::invalid_argument("transpose needs degree 2");
  return Tensor::from_matrix(x.field(), mat_transpose(x.as_matrix()));
}

Tensor add(const Tensor& x, const Tensor& y) {
  require_compatible(x, y);
  if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch");
  Tensor z = x;
  const Field& f = x.field();
  for (size_t i = 0; i < z.size(); ++i) z[i] = f.add(z[i], y[i]);
  return z;
}

Tensor scale(const Tensor& x, Fe s) {
  Tensor z = x;
  const Field& f = x.field();
  for (size_t i = 0; i < z.size(); ++i) z[i] = f.mul(z[i], s);
  return z;
}

Tensor negate(const Tensor& x) {
  Tensor z = x;
  const Field& f = x.field();
  for (size_t i = 0; i < z.size(); ++i) z[i] = f.neg(z[i]);
  return z;
}

namespace {

Tensor mode_apply(const Tensor& x, const Tensor& a, int mode, bool left) {
  if (a.degree() != 2 || a.dim() != x.dim())
    throw std::invalid_argument("mode apply needs a matching matrix");
  if (mode < 0 || mode >= x.degree()) throw std::invalid_argument("bad mode");
  const Field& f = x.field();
  int N = x.dim();
  size_t outer = ipow(N, mode);
  size_t inner = ipow(N, x.degree() - mode - 1);
  Tensor z(f, N, x.degree());
  for (size_t io = 0; io < outer; ++io)
    for (int h = 0; h < N; ++h)
      for (int j = 0; j < N; ++j) {
        Fe av = left ? a[static_cast<size_t>(j) * N + h]
                     : a[static_cast<size_t>(h) * N + j];
        if (f.is_zero(av)) continue;
        size_t src = (io * N + static_cast<size_t>(h)) * inner;
        size_t dst = (io * N + static_cast<size_t>(j)) * inner;
        for (size_t ii = 0; ii < inner; ++ii)
          z[dst + ii] = f.add(z[dst + ii], f.mul(x[src + ii], av));
      }
  return z;
}

}  // namespace

Tensor mode_apply_right(const Tensor& x, const Tensor& a, int mode) {
  return mode_apply(x, a, mode, false);
}

Tensor mode_apply_left(const Tensor& x, const Tensor& a, int mode) {
  return mode_apply(x, a, mode, true);
}

}  // namespace polar
