#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "polar/props.hpp"
#include "polar/verify.hpp"

using namespace polar;

namespace {

Mat symplectic4(const Field& f) {
  return mat_from(f, 4, 4, {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0});
}

Tensor generic_theorem_lhs(const Tensor& x, const SesquilinearForm& form) {
  // reference route: the literal composition of library primitives
  int k = x.degree();
  Tensor m = form.matrix_tensor();
  Tensor xi = p_product(apply_sigma(x), pseudo_power(m, k), k);
  return p_product(xi, x, 1);
}

Tensor generic_theorem_lhs_alt(const Tensor& x, const SesquilinearForm& form) {
  int k = x.degree();
  Tensor msig = apply_sigma(form.matrix_tensor());
  Tensor z = p_product(pseudo_power(msig, k - 1), apply_sigma(x), k - 1);
  return p_product(p_product(z, form.matrix_tensor(), 1), x, 1);
}

}  // namespace

TEST_CASE("theorem_lhs on the GF(2) symplectic space") {
  Field f(FieldSpec::gf(2));
  SesquilinearForm form(f, symplectic4(f), +1);
  REQUIRE(form.diagnostics().ok());

  Tensor zero(f, 4, 2);
  CHECK(theorem_lhs(zero, form).is_zero());

  Tensor w13 = wedge_tensor(f, mat_from(f, 2, 4, {1, 0, 0, 0, 0, 0, 1, 0}));
  Tensor w12 = wedge_tensor(f, mat_from(f, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
  Tensor lhs13 = theorem_lhs(w13, form);
  CHECK(lhs13.degree() == 2);
  CHECK(lhs13.is_zero());
  CHECK_FALSE(theorem_lhs(w12, form).is_zero());
}

TEST_CASE("fast path equals the literal tensor composition") {
  for (FieldSpec spec :
       {FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::gf_ext(2, {1, 1, 1})}) {
    Field f(spec);
    SesquilinearForm form(f, mat_identity(f, 4),
                          f.spec().sigma == SigmaKind::frobenius ? +1 : +1);
    if (!form.diagnostics().ok()) continue;  // GF(2) identity is not trace-valued
    Rng rng(31);
    for (int k : {1, 2, 3}) {
      Tensor x = random_alternating(f, 4, k, rng);
      CHECK(theorem_lhs(x, form) == generic_theorem_lhs(x, form));
      CHECK(theorem_lhs_alt(x, form) == generic_theorem_lhs_alt(x, form));
    }
  }
}

TEST_CASE("eq7 and eq8 differ by eps^(k-1) and vanish together") {
  Field f(FieldSpec::gf(3));
  SesquilinearForm form(f, symplectic4(f), -1);
  REQUIRE(form.diagnostics().ok());
  Rng rng(7);
  for (int k : {2, 3}) {
    Fe factor = f.pow(f.from_int(form.eps()), k - 1);
    for (int trial = 0; trial < 100; ++trial) {
      Tensor x = random_alternating(f, 4, k, rng);
      Tensor a = theorem_lhs(x, form);
      Tensor b = theorem_lhs_alt(x, form);
      CHECK(a == scale(b, factor));
      CHECK(a.is_zero() == b.is_zero());
    }
  }
}

TEST_CASE("eq7 and eq8 vanish together exhaustively, GF(2) N=4 k=2") {
  Field f(FieldSpec::gf(2));
  Mat m = mat_from(f, 4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  SesquilinearForm form(f, m, +1);
  auto tuples = increasing_tuples(4, 2);
  for (int code = 0; code < (1 << 6); ++code) {
    Tensor x(f, 4, 2);
    for (size_t t = 0; t < tuples.size(); ++t) {
      if (!((code >> t) & 1)) continue;
      std::vector<int> fwd = tuples[t], rev{tuples[t][1], tuples[t][0]};
      x.set(fwd, f.one());
      x.set(rev, f.one());
    }
    CHECK(theorem_lhs(x, form).is_zero() == theorem_lhs_alt(x, form).is_zero());
  }
}

TEST_CASE("k2_matrix_lhs matches theorem_lhs_alt entrywise") {
  for (FieldSpec spec : {FieldSpec::gf(3), FieldSpec::gf(5)}) {
    Field f(spec);
    SesquilinearForm form(f, symplectic4(f), -1);
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      Tensor x = random_alternating(f, 4, 2, rng);
      Mat chain = k2_matrix_lhs(x.as_matrix(), form);
      CHECK(Tensor::from_matrix(f, chain) == theorem_lhs_alt(x, form));
    }
  }
}

TEST_CASE("k2_matrix_lhs rejects non-alternating input") {
  Field f(FieldSpec::gf(3));
  SesquilinearForm form(f, symplectic4(f), -1);
  CHECK_THROWS_AS(k2_matrix_lhs(mat_identity(f, 4), form), std::invalid_argument);
}

TEST_CASE("nondeg_lhs needs an invertible matrix and agrees on members") {
  Field f(FieldSpec::gf(2));
  Mat m = mat_from(f, 4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  SesquilinearForm form(f, m, +1);
  Tensor w13 = wedge_tensor(f, mat_from(f, 2, 4, {1, 0, 0, 0, 0, 0, 1, 0}));
  Tensor w12 = wedge_tensor(f, mat_from(f, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
  CHECK(nondeg_lhs(w13, form).is_zero());
  CHECK_FALSE(nondeg_lhs(w12, form).is_zero());

  SesquilinearForm singular(f, Mat(4, 4), +1);
  CHECK_THROWS_AS(nondeg_lhs(w13, singular), std::domain_error);
}

TEST_CASE("eq7 = O implies eq9 = O for arbitrary alternating X") {
  Field f(FieldSpec::gf(3));
  SesquilinearForm form(f, symplectic4(f), -1);
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    Tensor x = random_alternating(f, 4, 2, rng);
    if (x.is_zero()) continue;
    if (theorem_lhs(x, form).is_zero()) CHECK(nondeg_lhs(x, form).is_zero());
  }
}

TEST_CASE("membership verdicts on the GF(2) symplectic quadrangle") {
  Field f(FieldSpec::gf(2));
  Mat m = mat_from(f, 4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  SesquilinearForm form(f, m, +1);
  Tensor w13 = wedge_tensor(f, mat_from(f, 2, 4, {1, 0, 0, 0, 0, 0, 1, 0}));
  MembershipVerdict v = in_polar_grassmannian(w13, form);
  CHECK(v.member());
  CHECK(v.eq7_zero == v.eq8_zero);
  REQUIRE(v.oracle_isotropic.has_value());
  CHECK(*v.oracle_isotropic);

  Tensor w12 = wedge_tensor(f, mat_from(f, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
  MembershipVerdict v2 = in_polar_grassmannian(w12, form);
  CHECK_FALSE(v2.member());
  CHECK_FALSE(*v2.oracle_isotropic);

  // non-decomposable tensor: Grassmannian conjunct rejects it
  Tensor klein(f, 4, 2);
  std::vector<int> i12{0, 1}, i21{1, 0}, i34{2, 3}, i43{3, 2};
  klein.set(i12, f.one());
  klein.set(i21, f.one());
  klein.set(i34, f.one());
  klein.set(i43, f.one());
  MembershipVerdict v3 = in_polar_grassmannian(klein, form);
  CHECK_FALSE(v3.grassmannian);
  CHECK_FALSE(v3.member());

  CHECK_THROWS_AS(in_polar_grassmannian(Tensor(f, 4, 2), form),
                  std::invalid_argument);
}

TEST_CASE("membership is scale invariant") {
  Field f(FieldSpec::gf(5));
  SesquilinearForm form(f, symplectic4(f), -1);
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    Tensor x = random_alternating(f, 4, 2, rng);
    if (x.is_zero()) continue;
    MembershipVerdict base = in_polar_grassmannian(x, form);
    for (long long li = 1; li < f.order(); ++li) {
      MembershipVerdict scaled =
          in_polar_grassmannian(scale(x, f.element(li)), form);
      CHECK(scaled.member() == base.member());
      CHECK(scaled.grassmannian == base.grassmannian);
    }
  }
}

TEST_CASE("k=1 membership reduces to vector isotropy") {
  Field f(FieldSpec::gf_ext(2, {1, 1, 1}));
  SesquilinearForm form(f, mat_identity(f, 4), +1);
  REQUIRE(form.diagnostics().ok());
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    Tensor x = random_tensor(f, 4, 1, rng);
    if (x.is_zero()) continue;
    std::vector<Fe> v(4);
    for (int i = 0; i < 4; ++i) v[i] = x[static_cast<size_t>(i)];
    bool isotropic = f.is_zero(form.evaluate(v, v));
    MembershipVerdict verdict = in_polar_grassmannian(x, form);
    CHECK(verdict.member() == isotropic);
    CHECK(*verdict.oracle_isotropic == isotropic);
  }
}

TEST_CASE("lemma 2.2 spot checks") {
  Field f(FieldSpec::gf(2));
  Mat xi = mat_from(f, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0});  // e1*, e2*
  Mat xa = mat_from(f, 2, 4, {0, 0, 1, 0, 0, 0, 0, 1});  // e3, e4
  auto [inc1, zero1] = lemma2_check(f, xa, xi);
  CHECK(inc1);
  CHECK(zero1);
  Mat xb = mat_from(f, 2, 4, {1, 0, 0, 0, 0, 0, 1, 0});  // e1, e3
  auto [inc2, zero2] = lemma2_check(f, xb, xi);
  CHECK_FALSE(inc2);
  CHECK_FALSE(zero2);

  Mat dep = mat_from(f, 2, 4, {1, 0, 0, 0, 1, 0, 0, 0});
  CHECK_THROWS_AS(lemma2_check(f, dep, xi), std::invalid_argument);
}

TEST_CASE("lemma 2.2 exhaustive over GF(2), N=4, k in {2,3}") {
  Field f(FieldSpec::gf(2));
  for (int k : {2, 3}) {
    std::vector<Subspace> all;
    enumerate_subspaces(f, 4, k, [&](const Subspace& s) { all.push_back(s); });
    for (const auto& xs : all)
      for (const auto& xis : all) {
        auto [inclusion, zero] = lemma2_check(f, xs.rows, xis.rows);
        CHECK(inclusion == zero);
      }
  }
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
  Field f2(FieldSpec::gf(2));
  Field f3(FieldSpec::gf(3));
  auto count = [](const Field& f, int N, int k) {
    long long c = 0;
    enumerate_subspaces(f, N, k, [&](const Subspace&) { ++c; });
    return c;
  };
  CHECK(count(f2, 2, 1) == 3);
  CHECK(count(f2, 4, 2) == 35);
  CHECK(count(f3, 4, 2) == 130);
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(3, 4, 2) == 130);
  CHECK(gaussian_binomial(2, 6, 3) == 1395);

  // uniqueness
  std::set<std::string> seen;
  enumerate_subspaces(f3, 4, 2, [&](const Subspace& s) {
    std::string key;
    for (const auto& e : s.rows.a) key += std::to_string(e.a) + ",";
    CHECK(seen.insert(key).second);
    CHECK(mat_rank(f3, s.rows) == 2);
  });
}

TEST_CASE("verify_theorem headline counts") {
  Field f2(FieldSpec::gf(2));
  Mat m2 = mat_from(f2, 4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  VerificationReport r1 = verify_theorem(SesquilinearForm(f2, m2, +1), 2);
  CHECK(r1.subspaces == 35);
  CHECK(r1.isotropic == 15);
  CHECK(r1.eq7_members == 15);
  CHECK(r1.ok());

  Field f3(FieldSpec::gf(3));
  VerificationReport r2 = verify_theorem(SesquilinearForm(f3, symplectic4(f3), -1), 2);
  CHECK(r2.subspaces == 130);
  CHECK(r2.isotropic == 40);
  CHECK(r2.ok());

  Field gf4(FieldSpec::gf_ext(2, {1, 1, 1}));
  VerificationReport r3 = verify_theorem(SesquilinearForm(gf4, mat_identity(gf4, 4), +1), 1);
  CHECK(r3.isotropic == 45);
  CHECK(r3.ok());
}

TEST_CASE("verify_theorem on a degenerate form skips eq9 and still agrees") {
  Field f(FieldSpec::gf(2));
  Mat m(5, 5);
  Mat s = mat_from(f, 4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = s.at(i, j);
  SesquilinearForm form(f, m, +1);
  REQUIRE(form.diagnostics().ok());
  CHECK_FALSE(form.nondegenerate());
  VerificationReport rep = verify_theorem(form, 2);
  CHECK(rep.ok());
  CHECK(rep.subspaces == gaussian_binomial(2, 5, 2));
}

TEST_CASE("sampled mode is reproducible for a fixed seed") {
  Field f(FieldSpec::gf(3));
  SesquilinearForm form(f, symplectic4(f), -1);
  VerifyOptions opts;
  opts.mode = VerifyMode::sampled;
  opts.samples = 50;
  opts.seed = 99;
  VerificationReport a = verify_theorem(form, 2, opts);
  VerificationReport b = verify_theorem(form, 2, opts);
  CHECK(a.subspaces == b.subspaces);
  CHECK(a.isotropic == b.isotropic);
  CHECK(a.ok());
  CHECK(b.ok());
}

TEST_CASE("budget errors") {
  Field f(FieldSpec::gf(3));
  SesquilinearForm form(f, symplectic4(f), -1);
  VerifyOptions opts;
  opts.budget = 10;
  CHECK_THROWS_AS(verify_theorem(form, 2, opts), std::length_error);
}

TEST_CASE("theorem_equations accept exactly the members, GF(2) N=4 k=2") {
  Field f(FieldSpec::gf(2));
  Mat m = mat_from(f, 4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  SesquilinearForm form(f, m, +1);
  EquationSet eqs = theorem_equations(form, 2);
  enumerate_subspaces(f, 4, 2, [&](const Subspace& s) {
    Tensor x = wedge_tensor(f, s.rows);
    bool sat = eqs.satisfied_by(plucker_coordinates(x));
    CHECK(sat == form.is_totally_isotropic(s));
  });
}

TEST_CASE("zero form matrix leaves no theorem equations") {
  Field f(FieldSpec::gf(3));
  SesquilinearForm form(f, Mat(4, 4), +1);
  CHECK(theorem_equations(form, 2).polys.empty());
}

TEST_CASE("identity suite passes on several fields") {
  for (FieldSpec spec : {FieldSpec::gf(2), FieldSpec::gf(3),
                         FieldSpec::gf_ext(2, {1, 1, 1}),
                         FieldSpec::rationals()}) {
    PropsConfig cfg;
    cfg.field = spec;
    cfg.N = 3;
    cfg.trials = 60;
    cfg.seed = 5;
    PropsReport rep = run_identity_suite(cfg);
    for (const auto& c : rep.checks) {
      INFO(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("corrupted p_product hook is caught by the suite") {
  PropsConfig cfg;
  cfg.field = FieldSpec::gf(3);
  cfg.N = 3;
  cfg.trials = 40;
  cfg.seed = 5;
  cfg.corrupt_p_product = true;
  CHECK_FALSE(run_identity_suite(cfg).all_pass());
}
