#include "polar/verify.hpp"

#include <chrono>
#include <map>
#include <random>
#include <stdexcept>

#include "polar/tensor.hpp"

namespace polar {

namespace {

void require_alternating(const Tensor& x) {
  if (!is_alternating(x)) throw std::invalid_argument("tensor is not alternating");
}

}  // namespace

Tensor theorem_lhs(const Tensor& x, const SesquilinearForm& form) {
  if (!x.field().compatible(form.field()))
    throw std::invalid_argument("field mismatch");
  if (x.dim() != form.dim()) throw std::invalid_argument("dimension mismatch");
  Tensor m = form.matrix_tensor();
  // Xi = X^sigma k-contracted with pseudo_power(M, k); the pseudo power is
  // separable, so this is M acting on each index in turn.
  Tensor xi = apply_sigma(x);
  for (int mode = 0; mode < x.degree(); ++mode) xi = mode_apply_right(xi, m, mode);
  return p_product(xi, x, 1);
}

Tensor theorem_lhs_alt(const Tensor& x, const SesquilinearForm& form) {
  if (!x.field().compatible(form.field()))
    throw std::invalid_argument("field mismatch");
  if (x.dim() != form.dim()) throw std::invalid_argument("dimension mismatch");
  Tensor msig = apply_sigma(form.matrix_tensor());
  Tensor z = apply_sigma(x);
  for (int mode = 0; mode + 1 < x.degree(); ++mode)
    z = mode_apply_left(z, msig, mode);
  return p_product(p_product(z, form.matrix_tensor(), 1), x, 1);
}

Tensor nondeg_lhs(const Tensor& x, const SesquilinearForm& form) {
  if (!mat_inverse(form.field(), form.matrix()))
    throw std::domain_error("form matrix is singular");
  Tensor z = p_product(apply_sigma(x), form.matrix_tensor(), 1);
  return p_product(z, x, 1);
}

Mat k2_matrix_lhs(const Mat& x, const SesquilinearForm& form) {
  const Field& f = form.field();
  Tensor xt = Tensor::from_matrix(f, x);
  require_alternating(xt);
  Mat msig = mat_sigma(f, form.matrix());
  Mat xsig = mat_sigma(f, x);
  return mat_mul(f, mat_mul(f, msig, xsig), mat_mul(f, form.matrix(), x));
}

MembershipVerdict in_polar_grassmannian(const Tensor& x,
                                        const SesquilinearForm& form) {
  if (x.is_zero()) throw std::invalid_argument("zero tensor");
  require_alternating(x);
  MembershipVerdict v;
  v.grassmannian = x.degree() < 2 ? true : satisfies_grassmannian(x);
  v.eq7_zero = theorem_lhs(x, form).is_zero();
  v.eq8_zero = theorem_lhs_alt(x, form).is_zero();
  if (mat_inverse(form.field(), form.matrix()))
    v.eq9_zero = nondeg_lhs(x, form).is_zero();
  std::optional<Subspace> dec;
  if (x.degree() == 1) {
    Mat row(1, x.dim());
    for (int i = 0; i < x.dim(); ++i) row.at(0, i) = x[static_cast<size_t>(i)];
    dec = row_space(form.field(), row);
  } else {
    dec = decompose(x);
  }
  if (dec) {
    v.subspace = dec;
    v.oracle_isotropic = form.is_totally_isotropic(*dec);
  }
  return v;
}

EquationSet theorem_equations(const SesquilinearForm& form, int k) {
  const Field& f = form.field();
  int N = form.dim();
  if (k < 1 || k > N) throw std::invalid_argument("need 1 <= k <= N");
  EquationSet eq;
  eq.field = &f;
  eq.N = N;
  eq.k = k;
  eq.vars = increasing_tuples(N, k);
  bool commutative = f.spec().sigma == SigmaKind::identity;
  const Mat& m = form.matrix();

  // iterate every output entry of X^sigma k-contract (pseudo^k M) o X
  int out_deg = 2 * k - 2;
  std::vector<int> out(out_deg, 0);
  std::vector<int> h(k, 0);
  std::map<std::string, std::vector<QuadTerm>> seen;
  auto advance = [&](std::vector<int>& idx) {
    for (int t = static_cast<int>(idx.size()) - 1; t >= 0; --t) {
      if (++idx[t] < N) return true;
      idx[t] = 0;
    }
    return false;
  };
  do {
    // out = (m_1..m_{k-1}, l_2..l_k)
    std::vector<QuadTerm> terms;
    for (auto& e : h) e = 0;
    do {
      std::vector<int> a = h;
      int sign_a = sort_with_sign(a);
      if (sign_a == 0) continue;
      for (int i = 0; i < N; ++i) {
        // product of M entries over the Xi index (m_1..m_{k-1}, i)
        Fe c = f.one();
        bool zero = false;
        for (int t = 0; t < k; ++t) {
          int col = t < k - 1 ? out[t] : i;
          Fe mv = m.at(h[t], col);
          if (f.is_zero(mv)) {
            zero = true;
            break;
          }
          c = f.mul(c, mv);
        }
        if (zero) continue;
        std::vector<int> b(k);
        b[0] = i;
        for (int t = 1; t < k; ++t) b[t] = out[k - 1 + t - 1];
        int sign_b = sort_with_sign(b);
        if (sign_b == 0) continue;
        QuadTerm term;
        term.coeff = sign_a * sign_b > 0 ? c : f.neg(c);
        term.a = tuple_index(eq.vars, a);
        term.b = tuple_index(eq.vars, b);
        term.sigma_on_a = !commutative;
        terms.push_back(term);
      }
    } while (advance(h));
    auto norm = normalize_quad_poly(f, std::move(terms), commutative);
    if (norm.empty()) continue;
    seen.emplace(quad_poly_key(f, norm), std::move(norm));
  } while (advance(out));
  for (auto& [key, poly] : seen) eq.polys.push_back(std::move(poly));
  return eq;
}

std::pair<bool, bool> lemma2_check(const Field& f, const Mat& xs, const Mat& xis) {
  if (mat_rank(f, xs) != xs.rows || mat_rank(f, xis) != xis.rows)
    throw std::invalid_argument("rows must be independent");
  bool inclusion = mat_is_zero(f, mat_mul(f, xis, mat_transpose(xs)));
  Tensor prod = p_product(dual_wedge_tensor(f, xis), wedge_tensor(f, xs), 1);
  return {inclusion, prod.is_zero()};
}

long long gaussian_binomial(long long q, int n, int k) {
  if (k < 0 || k > n) return 0;
  // product formula, evaluated as integer quotients of q-factorial terms
  __int128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    __int128 qn = 1, qd = 1;
    for (int t = 0; t < n - i; ++t) qn *= q;
    for (int t = 0; t < i + 1; ++t) qd *= q;
    num *= qn - 1;
    den *= qd - 1;
  }
  return static_cast<long long>(num / den);
}

void enumerate_subspaces(const Field& f, int N, int k,
                         const std::function<void(const Subspace&)>& fn) {
  if (!f.is_finite()) throw std::domain_error("enumeration needs a finite field");
  if (k < 0 || k > N) return;
  long long q = f.order();
  for (const auto& pivots : increasing_tuples(N, k)) {
    std::vector<bool> is_pivot(N, false);
    for (int p : pivots) is_pivot[p] = true;
    // free slots: to the right of the row's pivot, in non-pivot columns
    std::vector<std::pair<int, int>> free_slots;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < N; ++c)
        if (!is_pivot[c]) free_slots.emplace_back(r, c);
    long long total = 1;
    for (size_t i = 0; i < free_slots.size(); ++i) total *= q;
    for (long long code = 0; code < total; ++code) {
      Mat m(k, N);
      for (auto& e : m.a) e = f.zero();
      for (int r = 0; r < k; ++r) m.at(r, pivots[r]) = f.one();
      long long rem = code;
      for (const auto& [r, c] : free_slots) {
        m.at(r, c) = f.element(rem % q);
        rem /= q;
      }
      Subspace s;
      s.N = N;
      s.k = k;
      s.rows = std::move(m);
      s.pivots = pivots;
      fn(s);
    }
  }
}

VerificationReport verify_theorem(const SesquilinearForm& form, int k,
                                  const VerifyOptions& opts) {
  form.require_valid();
  const Field& f = form.field();
  if (!f.is_finite())
    throw std::domain_error("theorem verification needs a finite field");
  int N = form.dim();
  VerificationReport rep;
  rep.N = N;
  rep.k = k;
  rep.seed = opts.seed;
  rep.mode = opts.mode == VerifyMode::exhaustive ? "exhaustive" : "sampled";
  bool invertible = mat_inverse(f, form.matrix()).has_value();
  auto t0 = std::chrono::steady_clock::now();

  auto check = [&](const Subspace& s) {
    ++rep.subspaces;
    Tensor x = wedge_tensor(f, s.rows);
    bool iso = form.is_totally_isotropic(s);
    bool eq7 = theorem_lhs(x, form).is_zero();
    bool eq8 = theorem_lhs_alt(x, form).is_zero();
    if (iso) ++rep.isotropic;
    if (eq7) ++rep.eq7_members;
    auto mismatch = [&](const std::string& note) {
      ++rep.mismatches;
      if (static_cast<int>(rep.witnesses.size()) < opts.max_witnesses)
        rep.witnesses.push_back({s.rows, note});
    };
    if (eq7 != iso) mismatch("eq7 vs isotropy oracle");
    if (eq7 != eq8) mismatch("eq7 vs eq8");
    if (invertible) {
      bool eq9 = nondeg_lhs(x, form).is_zero();
      if (eq9 != eq7) mismatch("eq9 vs eq7");
    }
  };

  if (opts.mode == VerifyMode::exhaustive) {
    long long count = gaussian_binomial(f.order(), N, k);
    if (count > opts.budget) throw std::length_error("subspace count over budget");
    enumerate_subspaces(f, N, k, check);
  } else {
    std::mt19937_64 rng(opts.seed);
    long long done = 0;
    while (done < opts.samples) {
      Mat m(k, N);
      for (auto& e : m.a) e = f.element(static_cast<long long>(rng() % f.order()));
      if (mat_rank(f, m) != k) continue;
      check(row_space(f, m));
      ++done;
    }
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace polar
