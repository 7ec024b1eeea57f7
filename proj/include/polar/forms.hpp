#pragma once

#include <span>
#include <string>

#include "polar/exterior.hpp"
#include "polar/matrix.hpp"

namespace polar {

struct FormDiagnostics {
  bool square = false;
  bool reflexive = false;     // M^T = eps * M^sigma
  bool trace_valued = false;  // every diagonal entry in {t + eps*sigma(t)}
  std::string detail;

  bool ok() const { return square && reflexive && trace_valued; }
};

// A trace-valued (sigma, eps)-sesquilinear form f(x, y) = sigma(x)^T M y.
// Degenerate forms are allowed; validation only checks the form identities.
class SesquilinearForm {
 public:
  SesquilinearForm(const Field& f, Mat m, int eps);

  const Field& field() const { return *field_; }
  int dim() const { return N_; }
  int eps() const { return eps_; }
  const Mat& matrix() const { return m_; }
  Tensor matrix_tensor() const;
  const FormDiagnostics& diagnostics() const { return diag_; }
  void require_valid() const;  // throws if validation failed

  Fe evaluate(std::span<const Fe> x, std::span<const Fe> y) const;

  Subspace radical() const;
  bool nondegenerate() const;

  Subspace perp(const Subspace& w) const;
  bool is_totally_isotropic(const Subspace& w) const;

  // Maximum dimension of a totally isotropic subspace; finite fields only.
  int witt_index() const;

 private:
  const Field* field_;
  int N_;
  Mat m_;
  int eps_;
  FormDiagnostics diag_;
};

}  // namespace polar
