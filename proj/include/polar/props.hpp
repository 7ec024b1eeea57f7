#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polar/tensor.hpp"

namespace polar {

// Deterministic splitmix64 stream; identical across platforms.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t bounded(uint64_t n) { return next() % n; }
};

Fe random_element(const Field& f, Rng& rng);
Tensor random_tensor(const Field& f, int N, int degree, Rng& rng);
Mat random_matrix(const Field& f, int rows, int cols, Rng& rng);
Mat random_invertible(const Field& f, int n, Rng& rng);
Tensor random_alternating(const Field& f, int N, int k, Rng& rng);

// Reference contraction written as the defining index sum, independent of the
// blocked implementation in tensor.cpp.
Tensor naive_p_product(const Tensor& x, const Tensor& y, int p);

struct PropsConfig {
  FieldSpec field;
  int N = 3;
  int trials = 1000;
  uint64_t seed = 1;
  bool corrupt_p_product = false;  // test hook: perturbs one product result
};

struct PropsCheck {
  std::string name;
  int trials = 0;
  bool pass = false;
};

struct PropsReport {
  std::vector<PropsCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Randomized suite for the product identities and both lemmas.
PropsReport run_identity_suite(const PropsConfig& cfg);

}  // namespace polar
