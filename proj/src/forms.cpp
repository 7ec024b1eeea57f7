#include "polar/forms.hpp"

#include <set>
#include <stdexcept>

#include "polar/tensor.hpp"

namespace polar {

SesquilinearForm::SesquilinearForm(const Field& f, Mat m, int eps)
    : field_(&f), N_(m.cols), m_(std::move(m)), eps_(eps >= 0 ? 1 : -1) {
  if (m_.rows != m_.cols) {
    diag_.detail = "matrix is not square";
    return;
  }
  diag_.square = true;
  for (auto& e : m_.a)
    if (f.is_rational() && e.b == 0) e = f.zero();
  Fe e = eps_ > 0 ? f.one() : f.neg(f.one());
  diag_.reflexive = true;
  for (int i = 0; i < N_ && diag_.reflexive; ++i)
    for (int j = 0; j < N_; ++j)
      if (!f.eq(m_.at(j, i), f.mul(e, f.sigma(m_.at(i, j))))) {
        diag_.reflexive = false;
        diag_.detail = "M^T != eps * M^sigma at (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")";
        break;
      }
  // Diagonal membership in {t + eps*sigma(t)} suffices: the trace subgroup is
  // closed under addition and under t -> sigma(l)*t*l, and polarization reduces
  // f(x,x) to diagonal contributions modulo such terms.
  diag_.trace_valued = true;
  for (int i = 0; i < N_; ++i)
    if (!f.trace_subgroup_contains(m_.at(i, i), eps_)) {
      diag_.trace_valued = false;
      diag_.detail = "diagonal entry " + std::to_string(i + 1) +
                     " outside the trace subgroup";
      break;
    }
}

Tensor SesquilinearForm::matrix_tensor() const {
  return Tensor::from_matrix(*field_, m_);
}

void SesquilinearForm::require_valid() const {
  if (!diag_.ok())
    throw std::invalid_argument("invalid sesquilinear form: " + diag_.detail);
}

Fe SesquilinearForm::evaluate(std::span<const Fe> x, std::span<const Fe> y) const {
  const Field& f = *field_;
  if (static_cast<int>(x.size()) != N_ || static_cast<int>(y.size()) != N_)
    throw std::invalid_argument("vector length mismatch");
  Fe acc = f.zero();
  for (int i = 0; i < N_; ++i) {
    Fe xs = f.sigma(x[i]);
    if (f.is_zero(xs)) continue;
    for (int j = 0; j < N_; ++j)
      acc = f.add(acc, f.mul(xs, f.mul(m_.at(i, j), y[j])));
  }
  return acc;
}

Subspace SesquilinearForm::radical() const {
  return row_space(*field_, right_kernel(*field_, m_));
}

bool SesquilinearForm::nondegenerate() const { return radical().k == 0; }

Subspace SesquilinearForm::perp(const Subspace& w) const {
  const Field& f = *field_;
  Mat lhs = mat_mul(f, mat_sigma(f, w.rows), m_);
  return row_space(f, right_kernel(f, lhs));
}

bool SesquilinearForm::is_totally_isotropic(const Subspace& w) const {
  const Field& f = *field_;
  for (int i = 0; i < w.k; ++i)
    for (int j = 0; j < w.k; ++j) {
      std::span<const Fe> ri(&w.rows.at(i, 0), static_cast<size_t>(N_));
      std::span<const Fe> rj(&w.rows.at(j, 0), static_cast<size_t>(N_));
      if (!f.is_zero(evaluate(ri, rj))) return false;
    }
  return true;
}

namespace {

struct WittSearch {
  const SesquilinearForm& form;
  const Field& f;
  int N;
  int best = 0;
  std::set<std::vector<long long>> seen;

  static std::vector<long long> key(const Mat& m) {
    std::vector<long long> k;
    k.reserve(m.a.size() * 2);
    for (const auto& e : m.a) {
      k.push_back(e.a);
      k.push_back(e.b);
    }
    return k;
  }

  void extend(const Subspace& w) {
    best = std::max(best, w.k);
    Subspace p = form.perp(w);
    // candidate extension vectors: isotropic vectors of perp(W) outside W
    long long count = 1;
    for (int i = 0; i < p.k; ++i) count *= f.order();
    std::vector<Fe> v(N);
    for (long long code = 1; code < count; ++code) {
      long long rem = code;
      for (auto& e : v) e = f.zero();
      for (int r = 0; r < p.k; ++r) {
        Fe c = f.element(rem % f.order());
        rem /= f.order();
        if (f.is_zero(c)) continue;
        for (int j = 0; j < N; ++j)
          v[j] = f.add(v[j], f.mul(c, p.rows.at(r, j)));
      }
      if (!f.is_zero(form.evaluate(v, v))) continue;
      Mat ext(w.k + 1, N);
      for (int r = 0; r < w.k; ++r)
        for (int j = 0; j < N; ++j) ext.at(r, j) = w.rows.at(r, j);
      for (int j = 0; j < N; ++j) ext.at(w.k, j) = v[j];
      Subspace next = row_space(f, ext);
      if (next.k != w.k + 1) continue;  // v already in W
      if (!seen.insert(key(next.rows)).second) continue;
      extend(next);
    }
  }
};

}  // namespace

int SesquilinearForm::witt_index() const {
  const Field& f = *field_;
  if (!f.is_finite()) throw std::domain_error("witt_index needs a finite field");
  require_valid();
  WittSearch search{*this, f, N_, 0, {}};
  Subspace trivial;
  trivial.N = N_;
  trivial.k = 0;
  trivial.rows = Mat(0, N_);
  search.extend(trivial);
  return search.best;
}

}  // namespace polar
