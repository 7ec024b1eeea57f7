#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace polar {

enum class SigmaKind { identity, frobenius };

// GF(p), GF(p^2) with a user-chosen irreducible modulus, or the rationals
// (p = 0). The involution sigma is either trivial or the Frobenius t -> t^p.
struct FieldSpec {
  long long p = 0;  // 0 selects the rationals
  int degree = 1;   // 1 or 2
  std::array<long long, 3> modulus{0, 0, 1};  // c0 + c1*x + c2*x^2 (degree 2)
  SigmaKind sigma = SigmaKind::identity;

  static FieldSpec gf(long long p);
  static FieldSpec gf_ext(long long p, std::array<long long, 3> modulus,
                          SigmaKind sigma = SigmaKind::frobenius);
  static FieldSpec rationals();

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// One field element. Finite fields: coefficients (a + b*x) over GF(p).
// Rationals: numerator a, denominator b > 0, lowest terms.
struct Fe {
  long long a = 0;
  long long b = 0;
  friend bool operator==(const Fe&, const Fe&) = default;
};

class Field {
 public:
  // Throws std::invalid_argument on a non-prime p, a reducible modulus,
  // or frobenius with degree 1.
  explicit Field(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  bool is_finite() const { return spec_.p != 0; }
  bool is_rational() const { return spec_.p == 0; }
  long long characteristic() const { return spec_.p; }
  long long order() const { return order_; }  // 0 for the rationals

  Fe zero() const;
  Fe one() const;
  Fe from_int(long long v) const;
  Fe make(long long a, long long b) const;  // coefficients, or num/den

  Fe add(Fe x, Fe y) const;
  Fe sub(Fe x, Fe y) const;
  Fe neg(Fe x) const;
  Fe mul(Fe x, Fe y) const;
  Fe inv(Fe x) const;  // throws on zero
  Fe pow(Fe x, long long e) const;
  Fe sigma(Fe x) const;

  bool is_zero(Fe x) const;
  bool eq(Fe x, Fe y) const;

  // Finite enumeration: element(i) for i in [0, order).
  Fe element(long long idx) const;
  long long index_of(Fe x) const;

  // True iff a = t + eps * sigma(t) for some t (eps = +1 or -1).
  bool trace_subgroup_contains(Fe a, int eps) const;

  std::string to_string(Fe x) const;
  Fe parse(const std::string& text) const;

  bool compatible(const Field& other) const { return spec_ == other.spec_; }

 private:
  FieldSpec spec_;
  long long order_ = 0;
  Fe reduce(long long a, long long b) const;
  Fe norm(Fe x) const;
};

}  // namespace polar
