#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polar/forms.hpp"

namespace polar {

// Per-tensor verdict for membership in the polar k-Grassmannian.
struct MembershipVerdict {
  bool grassmannian = false;
  bool eq7_zero = false;
  bool eq8_zero = false;
  std::optional<bool> eq9_zero;          // only when M_f is invertible
  std::optional<bool> oracle_isotropic;  // only when X is decomposable
  std::optional<Subspace> subspace;

  bool member() const { return grassmannian && eq7_zero; }
};

struct MismatchWitness {
  Mat subspace_rows;
  std::string note;
};

struct VerificationReport {
  std::string form_description;
  int N = 0;
  int k = 0;
  std::string mode;
  uint64_t seed = 0;
  long long subspaces = 0;
  long long isotropic = 0;
  long long eq7_members = 0;
  long long mismatches = 0;
  std::vector<MismatchWitness> witnesses;  // capped
  double elapsed_seconds = 0.0;

  bool ok() const { return mismatches == 0; }
};

// X^sigma k-contracted with the k-th pseudo power of M_f, then 1-contracted
// with X; degree 2k-2.
Tensor theorem_lhs(const Tensor& x, const SesquilinearForm& form);
// The rewritten side: pseudo power of M_f^sigma on the left; vanishes exactly
// when theorem_lhs does (they differ by eps^(k-1)).
Tensor theorem_lhs_alt(const Tensor& x, const SesquilinearForm& form);
// Non-degenerate shortcut X^sigma o M_f o X; throws on a singular matrix.
Tensor nondeg_lhs(const Tensor& x, const SesquilinearForm& form);
// Plain matrix chain M_f^sigma X^sigma M_f X for alternating N x N matrices.
Mat k2_matrix_lhs(const Mat& x, const SesquilinearForm& form);

MembershipVerdict in_polar_grassmannian(const Tensor& x,
                                        const SesquilinearForm& form);

// Every entry of theorem_lhs expanded as a quadratic polynomial in the
// Pluecker variables (sigma on the first factor), deduplicated.
EquationSet theorem_equations(const SesquilinearForm& form, int k);

// (span inclusion <x_1..x_k> in the kernels of all xi_i, product Xi o X = O);
// the two flags agree by the kernel criterion.
std::pair<bool, bool> lemma2_check(const Field& f, const Mat& xs, const Mat& xis);

long long gaussian_binomial(long long q, int n, int k);

// Yields every k-subspace of F^N exactly once (RREF pivot-pattern order).
void enumerate_subspaces(const Field& f, int N, int k,
                         const std::function<void(const Subspace&)>& fn);

enum class VerifyMode { exhaustive, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exhaustive;
  long long samples = 1000;
  uint64_t seed = 0;
  long long budget = 1'000'000;  // max subspaces in exhaustive mode
  int max_witnesses = 10;
};

VerificationReport verify_theorem(const SesquilinearForm& form, int k,
                                  const VerifyOptions& opts = {});

}  // namespace polar
