#include "polar/field.hpp"

#include <numeric>
#include <stdexcept>

namespace polar {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<long long>(v);
}

}  // namespace

FieldSpec FieldSpec::gf(long long p) {
  FieldSpec s;
  s.p = p;
  return s;
}

FieldSpec FieldSpec::gf_ext(long long p, std::array<long long, 3> modulus,
                            SigmaKind sigma) {
  FieldSpec s;
  s.p = p;
  s.degree = 2;
  s.modulus = modulus;
  s.sigma = sigma;
  return s;
}

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

Field::Field(const FieldSpec& spec) : spec_(spec) {
  if (spec_.p == 0) {
    spec_.degree = 1;
    if (spec_.sigma != SigmaKind::identity)
      throw std::invalid_argument("frobenius needs a finite field");
    order_ = 0;
    return;
  }
  if (!is_prime(spec_.p)) throw std::invalid_argument("p is not prime");
  if (spec_.degree != 1 && spec_.degree != 2)
    throw std::invalid_argument("extension degree must be 1 or 2");
  if (spec_.degree == 1) {
    if (spec_.sigma == SigmaKind::frobenius)
      throw std::invalid_argument("frobenius requires degree 2");
    order_ = spec_.p;
    return;
  }
  if (mod(spec_.modulus[2], spec_.p) != 1)
    throw std::invalid_argument("modulus must be monic");
  for (long long t = 0; t < spec_.p; ++t) {
    long long v = mod(spec_.modulus[0] + spec_.modulus[1] * t + t * t, spec_.p);
    if (v == 0) throw std::invalid_argument("modulus is reducible");
  }
  spec_.modulus[0] = mod(spec_.modulus[0], spec_.p);
  spec_.modulus[1] = mod(spec_.modulus[1], spec_.p);
  spec_.modulus[2] = 1;
  order_ = spec_.p * spec_.p;
}

Fe Field::reduce(long long a, long long b) const {
  if (is_rational()) {
    if (b == 0) throw std::invalid_argument("zero denominator");
    long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    if (g == 0) return Fe{0, 1};
    a /= g;
    b /= g;
    if (b < 0) {
      a = -a;
      b = -b;
    }
    return Fe{a, b};
  }
  return Fe{mod(a, spec_.p), spec_.degree == 2 ? mod(b, spec_.p) : 0};
}

Fe Field::zero() const { return is_rational() ? Fe{0, 1} : Fe{0, 0}; }
Fe Field::one() const { return is_rational() ? Fe{1, 1} : Fe{1, 0}; }

Fe Field::from_int(long long v) const {
  return is_rational() ? Fe{v, 1} : reduce(v, 0);
}

Fe Field::make(long long a, long long b) const {
  if (is_rational()) return reduce(a, b);
  if (spec_.degree == 1 && b != 0)
    throw std::invalid_argument("second coefficient in a prime field");
  return reduce(a, b);
}

Fe Field::add(Fe x, Fe y) const {
  if (is_rational()) {
    x = norm(x);
    y = norm(y);
    return reduce(checked((__int128)x.a * y.b + (__int128)y.a * x.b),
                  checked((__int128)x.b * y.b));
  }
  return reduce(x.a + y.a, x.b + y.b);
}

Fe Field::sub(Fe x, Fe y) const { return add(x, neg(y)); }

Fe Field::neg(Fe x) const {
  if (is_rational()) {
    x = norm(x);
    return Fe{-x.a, x.b};
  }
  return reduce(-x.a, -x.b);
}

Fe Field::mul(Fe x, Fe y) const {
  if (is_rational()) {
    x = norm(x);
    y = norm(y);
    return reduce(checked((__int128)x.a * y.a), checked((__int128)x.b * y.b));
  }
  if (spec_.degree == 1) return reduce(x.a * y.a, 0);
  // (a + bx)(c + dx) with x^2 = -c1*x - c0
  long long p = spec_.p;
  long long ac = mod(x.a * y.a, p), bd = mod(x.b * y.b, p);
  long long cross = mod(x.a * y.b + x.b * y.a, p);
  long long c0 = spec_.modulus[0], c1 = spec_.modulus[1];
  return reduce(ac - bd * c0, cross - bd * c1);
}

Fe Field::inv(Fe x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero");
  if (is_rational()) {
    x = norm(x);
    return reduce(x.b, x.a);
  }
  return pow(x, order_ - 2);
}

Fe Field::pow(Fe x, long long e) const {
  if (e < 0) return pow(inv(x), -e);
  Fe r = one();
  Fe base = x;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fe Field::sigma(Fe x) const {
  if (spec_.sigma == SigmaKind::identity) return x;
  return pow(x, spec_.p);
}

bool Field::is_zero(Fe x) const { return x.a == 0 && (is_rational() || x.b == 0); }

bool Field::eq(Fe x, Fe y) const {
  if (is_rational()) return norm(x) == norm(y);
  return x == y;
}

Fe Field::norm(Fe x) const {
  // Accept the zero-initialized Fe{0,0} as rational zero.
  if (x.b == 0) {
    if (x.a != 0) throw std::invalid_argument("zero denominator");
    return Fe{0, 1};
  }
  return x;
}

Fe Field::element(long long idx) const {
  if (!is_finite()) throw std::domain_error("enumeration needs a finite field");
  if (idx < 0 || idx >= order_) throw std::out_of_range("element index");
  return Fe{idx % spec_.p, idx / spec_.p};
}

long long Field::index_of(Fe x) const {
  if (!is_finite()) throw std::domain_error("enumeration needs a finite field");
  return x.a + x.b * spec_.p;
}

bool Field::trace_subgroup_contains(Fe a, int eps) const {
  Fe e = eps >= 0 ? one() : neg(one());
  if (is_rational()) {
    // sigma = id: {t + t} = Q for eps=+1, {t - t} = {0} for eps=-1
    if (eps >= 0) return true;
    return is_zero(a);
  }
  for (long long i = 0; i < order_; ++i) {
    Fe t = element(i);
    if (add(t, mul(e, sigma(t))) == a) return true;
  }
  return false;
}

std::string Field::to_string(Fe x) const {
  if (is_rational()) {
    if (x.b == 1) return std::to_string(x.a);
    return std::to_string(x.a) + "/" + std::to_string(x.b);
  }
  if (spec_.degree == 1) return std::to_string(x.a);
  return "[" + std::to_string(x.a) + "," + std::to_string(x.b) + "]";
}

Fe Field::parse(const std::string& text) const {
  if (text.empty()) throw std::invalid_argument("empty element");
  if (text.front() == '[') {
    auto comma = text.find(',');
    auto close = text.find(']');
    if (comma == std::string::npos || close == std::string::npos)
      throw std::invalid_argument("bad element: " + text);
    return make(std::stoll(text.substr(1, comma - 1)),
                std::stoll(text.substr(comma + 1, close - comma - 1)));
  }
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    if (!is_rational()) throw std::invalid_argument("fraction in a finite field");
    return make(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  }
  return from_int(std::stoll(text));
}

}  // namespace polar
