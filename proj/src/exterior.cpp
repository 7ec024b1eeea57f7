#include "polar/exterior.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace polar {

Subspace row_space(const Field& f, const Mat& rows) {
  Mat m = rows;
  std::vector<int> pivots = rref(f, m);
  int k = static_cast<int>(pivots.size());
  Subspace s;
  s.N = rows.cols;
  s.k = k;
  s.pivots = pivots;
  s.rows = Mat(k, rows.cols);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < rows.cols; ++c) s.rows.at(r, c) = m.at(r, c);
  // normalize rational zero representation for operator==
  for (auto& e : s.rows.a)
    if (f.is_rational() && e.b == 0) e = f.zero();
  return s;
}

std::vector<std::vector<int>> increasing_tuples(int N, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > N) return out;
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == N - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

int tuple_index(const std::vector<std::vector<int>>& tuples,
                const std::vector<int>& t) {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  if (it == tuples.end() || *it != t) throw std::invalid_argument("tuple not found");
  return static_cast<int>(it - tuples.begin());
}

int sort_with_sign(std::vector<int>& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return sign;
}

Tensor wedge_tensor(const Field& f, const Mat& rows) {
  int k = rows.rows;
  int N = rows.cols;
  if (k > N) throw std::invalid_argument("more rows than the dimension");
  Tensor z(f, N, k);
  for (const auto& tuple : increasing_tuples(N, k)) {
    Mat minor(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) minor.at(r, c) = rows.at(r, tuple[c]);
    Fe d = determinant(f, minor);
    if (f.is_zero(d)) continue;
    std::vector<int> perm = tuple;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> check = perm;
      int sign = sort_with_sign(check);
      z.set(perm, sign > 0 ? d : f.neg(d));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return z;
}

Tensor dual_wedge_tensor(const Field& f, const Mat& rows) {
  // same determinant formula, coordinates read against the dual basis
  return wedge_tensor(f, rows);
}

Tensor wedge_tensor(const Subspace& s, const Field& f) {
  return wedge_tensor(f, s.rows);
}

bool EquationSet::satisfied_by(const std::vector<Fe>& coords) const {
  const Field& f = *field;
  for (const auto& poly : polys) {
    Fe acc = f.zero();
    for (const auto& term : poly) {
      Fe xa = coords[term.a];
      if (term.sigma_on_a) xa = f.sigma(xa);
      acc = f.add(acc, f.mul(term.coeff, f.mul(xa, coords[term.b])));
    }
    if (!f.is_zero(acc)) return false;
  }
  return true;
}

namespace {

std::string var_name(const std::vector<int>& tuple, bool sigma) {
  std::string s = sigma ? "s(x[" : "x[";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(tuple[i] + 1);
  }
  s += sigma ? "])" : "]";
  return s;
}

}  // namespace

std::string EquationSet::to_text() const {
  const Field& f = *field;
  Fe minus_one = f.neg(f.one());
  std::ostringstream out;
  for (const auto& poly : polys) {
    bool first = true;
    for (const auto& term : poly) {
      Fe c = term.coeff;
      bool negative = f.eq(c, minus_one) && !f.eq(c, f.one());
      if (first) {
        if (negative) out << "-";
        first = false;
      } else {
        out << (negative ? " - " : " + ");
      }
      if (!f.eq(c, f.one()) && !negative) out << f.to_string(c) << "*";
      out << var_name(vars[term.a], term.sigma_on_a) << "*"
          << var_name(vars[term.b], false);
    }
    out << " = 0\n";
  }
  return out.str();
}

std::vector<QuadTerm> normalize_quad_poly(const Field& f,
                                          std::vector<QuadTerm> terms,
                                          bool commutative) {
  if (commutative)
    for (auto& t : terms) {
      t.sigma_on_a = false;
      if (t.a > t.b) std::swap(t.a, t.b);
    }
  std::sort(terms.begin(), terms.end(), [](const QuadTerm& x, const QuadTerm& y) {
    return std::tie(x.a, x.sigma_on_a, x.b) < std::tie(y.a, y.sigma_on_a, y.b);
  });
  std::vector<QuadTerm> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().a == t.a && merged.back().b == t.b &&
        merged.back().sigma_on_a == t.sigma_on_a)
      merged.back().coeff = f.add(merged.back().coeff, t.coeff);
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [&](const QuadTerm& t) { return f.is_zero(t.coeff); });
  if (!merged.empty()) {
    Fe s = f.inv(merged.front().coeff);
    for (auto& t : merged) t.coeff = f.mul(t.coeff, s);
  }
  return merged;
}

std::string quad_poly_key(const Field& f, const std::vector<QuadTerm>& poly) {
  std::string key;
  for (const auto& t : poly)
    key += std::to_string(t.a) + (t.sigma_on_a ? "s" : "") + "," +
           std::to_string(t.b) + ":" + f.to_string(t.coeff) + ";";
  return key;
}

EquationSet plucker_relations(const Field& f, int N, int k) {
  if (k < 2 || k > N) throw std::invalid_argument("need 2 <= k <= N");
  EquationSet eq;
  eq.field = &f;
  eq.N = N;
  eq.k = k;
  eq.vars = increasing_tuples(N, k);
  std::map<std::string, std::vector<QuadTerm>> seen;
  for (const auto& left : increasing_tuples(N, k - 1))
    for (const auto& right : increasing_tuples(N, k + 1)) {
      std::vector<QuadTerm> terms;
      for (int t = 0; t <= k; ++t) {
        std::vector<int> a = left;
        a.push_back(right[t]);
        int sign_a = sort_with_sign(a);
        if (sign_a == 0) continue;
        std::vector<int> b;
        for (int u = 0; u <= k; ++u)
          if (u != t) b.push_back(right[u]);
        int total = (t % 2 == 0 ? 1 : -1) * sign_a;
        QuadTerm term;
        term.coeff = total > 0 ? f.one() : f.neg(f.one());
        term.a = tuple_index(eq.vars, a);
        term.b = tuple_index(eq.vars, b);
        terms.push_back(term);
      }
      auto norm = normalize_quad_poly(f, std::move(terms), true);
      if (norm.empty()) continue;
      seen.emplace(quad_poly_key(f, norm), std::move(norm));
    }
  for (auto& [key, poly] : seen) eq.polys.push_back(std::move(poly));
  return eq;
}

std::vector<Fe> plucker_coordinates(const Tensor& x) {
  std::vector<Fe> coords;
  for (const auto& tuple : increasing_tuples(x.dim(), x.degree()))
    coords.push_back(x.at(tuple));
  return coords;
}

bool satisfies_grassmannian(const Tensor& x) {
  if (!is_alternating(x)) throw std::invalid_argument("tensor is not alternating");
  if (x.degree() < 2) return true;
  EquationSet eq = plucker_relations(x.field(), x.dim(), x.degree());
  return eq.satisfied_by(plucker_coordinates(x));
}

Tensor wedge_with_vector(const Tensor& x, std::span<const Fe> v) {
  const Field& f = x.field();
  int N = x.dim();
  int k = x.degree();
  if (static_cast<int>(v.size()) != N) throw std::invalid_argument("vector length");
  Tensor z(f, N, k + 1);
  std::vector<int> idx(k + 1, 0);
  std::vector<int> rest(k);
  size_t total = z.size();
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (int t = k; t >= 0; --t) {
      idx[t] = static_cast<int>(rem % N);
      rem /= N;
    }
    Fe acc = f.zero();
    for (int t = 0; t <= k; ++t) {
      if (f.is_zero(v[idx[t]])) continue;
      int out = 0;
      for (int u = 0; u <= k; ++u)
        if (u != t) rest[out++] = idx[u];
      Fe contrib = f.mul(v[idx[t]], x.at(rest));
      acc = (t % 2 == 0) ? f.add(acc, contrib) : f.sub(acc, contrib);
    }
    z[flat] = acc;
  }
  return z;
}

std::optional<Subspace> decompose(const Tensor& x) {
  const Field& f = x.field();
  if (x.is_zero()) throw std::invalid_argument("decompose needs a nonzero tensor");
  if (!is_alternating(x)) throw std::invalid_argument("tensor is not alternating");
  int N = x.dim();
  int k = x.degree();
  // W = {v : v ^ X = 0}, one linear equation per increasing (k+1)-tuple
  auto tuples = increasing_tuples(N, k + 1);
  Mat sys(static_cast<int>(tuples.size()), N);
  std::vector<int> rest(k);
  for (size_t r = 0; r < tuples.size(); ++r) {
    const auto& tup = tuples[r];
    for (int t = 0; t <= k; ++t) {
      int out = 0;
      for (int u = 0; u <= k; ++u)
        if (u != t) rest[out++] = tup[u];
      Fe c = x.at(rest);
      sys.at(static_cast<int>(r), tup[t]) =
          (t % 2 == 0) ? c : f.neg(c);
    }
  }
  Mat w = right_kernel(f, sys);
  if (w.rows != k) return std::nullopt;
  Subspace s = row_space(f, w);
  Tensor rebuilt = wedge_tensor(f, s.rows);
  // proportionality check
  Fe lambda = f.zero();
  for (size_t i = 0; i < x.size(); ++i) {
    if (!f.is_zero(rebuilt[i])) {
      lambda = f.mul(x[i], f.inv(rebuilt[i]));
      break;
    }
  }
  if (f.is_zero(lambda)) return std::nullopt;
  if (!(scale(rebuilt, lambda) == x)) return std::nullopt;
  return s;
}

}  // namespace polar
