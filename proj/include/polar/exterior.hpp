#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polar/matrix.hpp"
#include "polar/tensor.hpp"

namespace polar {

// A k-dimensional subspace of F^N, held as the unique RREF row basis.
struct Subspace {
  int N = 0;
  int k = 0;
  Mat rows;  // k x N, reduced row echelon form
  std::vector<int> pivots;

  friend bool operator==(const Subspace&, const Subspace&) = default;
};

// Canonicalizes a row span; k becomes the rank of `rows`.
Subspace row_space(const Field& f, const Mat& rows);

// All strictly increasing k-tuples of {0,...,N-1} in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int N, int k);
int tuple_index(const std::vector<std::vector<int>>& tuples,
                const std::vector<int>& t);
// Sorts `t` in place; returns +1/-1 for the permutation sign, 0 on repeats.
int sort_with_sign(std::vector<int>& t);

// Degree-k alternating tensor of k x N row vectors: the entry at any index
// tuple is the k x k minor on those columns (signs and zeros included).
Tensor wedge_tensor(const Field& f, const Mat& rows);
// Same determinant formula read against the dual basis.
Tensor dual_wedge_tensor(const Field& f, const Mat& rows);

Tensor wedge_tensor(const Subspace& s, const Field& f);

// Quadratic polynomials in the (N choose k) Pluecker variables.
struct QuadTerm {
  Fe coeff;
  int a = 0;  // variable indices into EquationSet::vars
  int b = 0;
  bool sigma_on_a = false;
};

struct EquationSet {
  const Field* field = nullptr;
  int N = 0;
  int k = 0;
  std::vector<std::vector<int>> vars;  // increasing k-tuples, 0-based
  std::vector<std::vector<QuadTerm>> polys;

  bool satisfied_by(const std::vector<Fe>& coords) const;
  std::string to_text() const;  // one polynomial per line
};

// Canonical form: variables sorted (when commutative), like terms merged,
// leading coefficient scaled to 1.
std::vector<QuadTerm> normalize_quad_poly(const Field& f,
                                          std::vector<QuadTerm> terms,
                                          bool commutative);
std::string quad_poly_key(const Field& f, const std::vector<QuadTerm>& poly);

// The standard Grassmann-Pluecker quadratic relations, deduplicated and
// normalized to a leading coefficient of 1.
EquationSet plucker_relations(const Field& f, int N, int k);

std::vector<Fe> plucker_coordinates(const Tensor& x);  // at increasing tuples

bool satisfies_grassmannian(const Tensor& x);

// v ^ X as a degree-(k+1) alternating tensor.
Tensor wedge_with_vector(const Tensor& x, std::span<const Fe> v);

// Kernel-based decomposability oracle: recovers the subspace whose wedge
// tensor is proportional to X, if one exists.
std::optional<Subspace> decompose(const Tensor& x);

}  // namespace polar
