// Command line front end: inspect forms, verify the polar Grassmannian
// characterization, enumerate members, emit equation systems, and run the
// algebraic identity suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polar/props.hpp"
#include "polar/serialize.hpp"
#include "polar/verify.hpp"

using namespace polar;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitConfig = 2;

int cmd_info(const std::string& form_path, const std::string& format) {
  LoadedForm lf = load_form_file(form_path);
  const Field& f = *lf.field;
  const SesquilinearForm& form = *lf.form;
  const FormDiagnostics& d = form.diagnostics();
  if (!d.ok()) {
    std::cerr << "form validation failed: " << d.detail << "\n";
    return kExitConfig;
  }
  int radical_rank = form.radical().k;
  int n = f.is_finite() ? form.witt_index() : -1;
  if (format == "json") {
    json j;
    j["form"] = lf.description;
    j["field"] = field_spec_to_json(f.spec());
    j["N"] = form.dim();
    j["epsilon"] = form.eps();
    j["valid"] = true;
    j["radical_rank"] = radical_rank;
    j["nondegenerate"] = radical_rank == 0;
    if (n >= 0) {
      j["witt_index"] = n;
      j["k_range"] = {2, n};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "form: " << lf.description << "\n";
    std::cout << "field: " << field_spec_to_json(f.spec()).dump() << "\n";
    std::cout << "N=" << form.dim() << " epsilon=" << (form.eps() > 0 ? "+1" : "-1")
              << "\n";
    std::cout << "validation: ok\n";
    std::cout << "radical rank: " << radical_rank
              << (radical_rank == 0 ? " (non-degenerate)" : " (degenerate)") << "\n";
    if (n >= 0) {
      std::cout << "Witt index: " << n << "\n";
      std::cout << "valid k range: 2.." << n << "\n";
    } else {
      std::cout << "Witt index: skipped (infinite field)\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& form_path, int k, const std::string& mode,
               long long samples, uint64_t seed, const std::string& format) {
  LoadedForm lf = load_form_file(form_path);
  lf.form->require_valid();
  VerifyOptions opts;
  opts.mode = mode == "sampled" ? VerifyMode::sampled : VerifyMode::exhaustive;
  opts.samples = samples;
  opts.seed = seed;
  VerificationReport rep = verify_theorem(*lf.form, k, opts);
  rep.form_description = lf.description;
  if (format == "json")
    std::cout << report_to_json(rep, *lf.field).dump(2) << "\n";
  else
    std::cout << report_to_text(rep, *lf.field);
  return rep.ok() ? kExitOk : kExitMathFailure;
}

int cmd_enumerate(const std::string& form_path, int k, bool count_only,
                  const std::string& format) {
  LoadedForm lf = load_form_file(form_path);
  lf.form->require_valid();
  const Field& f = *lf.field;
  if (!f.is_finite()) {
    std::cerr << "enumeration needs a finite field\n";
    return kExitConfig;
  }
  long long count = 0;
  json listing = json::array();
  bool double_check_ok = true;
  enumerate_subspaces(f, lf.form->dim(), k, [&](const Subspace& s) {
    if (!lf.form->is_totally_isotropic(s)) return;
    MembershipVerdict v = in_polar_grassmannian(wedge_tensor(f, s.rows), *lf.form);
    if (!v.member()) double_check_ok = false;
    ++count;
    if (count_only) return;
    if (format == "json") {
      json rows = json::array();
      for (int r = 0; r < s.k; ++r) {
        json row = json::array();
        for (int c = 0; c < s.N; ++c)
          row.push_back(element_to_json(f, s.rows.at(r, c)));
        rows.push_back(row);
      }
      listing.push_back(rows);
    } else {
      for (int r = 0; r < s.k; ++r) {
        std::cout << (r ? " ; " : "");
        for (int c = 0; c < s.N; ++c)
          std::cout << (c ? " " : "") << f.to_string(s.rows.at(r, c));
      }
      std::cout << "\n";
    }
  });
  if (format == "json") {
    json j;
    j["k"] = k;
    j["count"] = count;
    if (!count_only) j["members"] = listing;
    j["tensor_check"] = double_check_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "total: " << count << "\n";
  }
  return double_check_ok ? kExitOk : kExitMathFailure;
}

int cmd_equations(const std::string& form_path, int k, bool self_check) {
  LoadedForm lf = load_form_file(form_path);
  lf.form->require_valid();
  const Field& f = *lf.field;
  int N = lf.form->dim();
  EquationSet grass = plucker_relations(f, N, k);
  EquationSet th = theorem_equations(*lf.form, k);
  std::cout << "# grassmannian relations N=" << N << " k=" << k << " ("
            << grass.polys.size() << ")\n";
  std::cout << grass.to_text();
  std::cout << "# form equations (" << th.polys.size() << ")\n";
  std::cout << th.to_text();
  if (self_check) {
    if (!f.is_finite()) {
      std::cerr << "self-check needs a finite field\n";
      return kExitConfig;
    }
    bool ok = true;
    enumerate_subspaces(f, N, k, [&](const Subspace& s) {
      if (!lf.form->is_totally_isotropic(s)) return;
      auto coords = plucker_coordinates(wedge_tensor(f, s.rows));
      if (!grass.satisfied_by(coords) || !th.satisfied_by(coords)) ok = false;
    });
    std::cout << "# self-check: " << (ok ? "ok" : "FAILED") << "\n";
    if (!ok) return kExitMathFailure;
  }
  return kExitOk;
}

int cmd_props(long long p, int d, std::vector<long long> modulus,
              const std::string& sigma, int N, int trials, uint64_t seed,
              const std::string& format, bool corrupt) {
  PropsConfig cfg;
  cfg.field.p = p;
  cfg.field.degree = d;
  if (!modulus.empty()) {
    if (modulus.size() != 3) {
      std::cerr << "--modulus needs 3 coefficients\n";
      return kExitConfig;
    }
    cfg.field.modulus = {modulus[0], modulus[1], modulus[2]};
  } else if (d == 2) {
    // default irreducible quadratics: x^2+x+1 over GF(2), x^2+1 otherwise
    cfg.field.modulus = p == 2 ? std::array<long long, 3>{1, 1, 1}
                               : std::array<long long, 3>{1, 0, 1};
  }
  cfg.field.sigma = sigma == "frobenius" ? SigmaKind::frobenius : SigmaKind::identity;
  cfg.N = N;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.corrupt_p_product = corrupt;
  PropsReport rep = run_identity_suite(cfg);
  if (format == "json")
    std::cout << props_report_to_json(rep, cfg).dump(2) << "\n";
  else
    std::cout << props_report_to_text(rep, cfg);
  return rep.all_pass() ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tensor equations for polar space Grassmannians"};
  app.require_subcommand(1);

  std::string form_path, mode = "exhaustive", format = "text", sigma = "identity";
  int k = 2, N = 3, d = 1, trials = 1000;
  long long samples = 1000, p = 3, cap = 0;
  uint64_t seed = 1;
  bool count_only = false, self_check = false, corrupt = false;
  std::vector<long long> modulus;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap", cap);
  };

  auto* info = app.add_subcommand("info", "validate a form file and print its data");
  info->add_option("--form", form_path)->required();
  add_common(info);

  auto* verify = app.add_subcommand("verify", "verify the tensor characterization");
  verify->add_option("--form", form_path)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);
  add_common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "list the polar k-Grassmannian");
  enumerate->add_option("--form", form_path)->required();
  enumerate->add_option("--k", k)->required();
  enumerate->add_flag("--count-only", count_only);
  add_common(enumerate);

  auto* equations = app.add_subcommand("equations", "emit the defining equations");
  equations->add_option("--form", form_path)->required();
  equations->add_option("--k", k)->required();
  equations->add_flag("--self-check", self_check);
  add_common(equations);

  auto* props = app.add_subcommand("props", "run the algebraic identity suite");
  props->add_option("--p", p);
  props->add_option("--d", d);
  props->add_option("--modulus", modulus)->delimiter(',');
  props->add_option("--sigma", sigma)
      ->check(CLI::IsMember({"identity", "frobenius"}));
  props->add_option("--N", N);
  props->add_option("--trials", trials);
  props->add_option("--seed", seed);
  props->add_flag("--corrupt-p-product", corrupt)->group("");  // test hook
  add_common(props);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cap > 0) set_tensor_entry_cap(static_cast<size_t>(cap));
    if (app.got_subcommand(info)) return cmd_info(form_path, format);
    if (app.got_subcommand(verify))
      return cmd_verify(form_path, k, mode, samples, seed, format);
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(form_path, k, count_only, format);
    if (app.got_subcommand(equations)) return cmd_equations(form_path, k, self_check);
    if (app.got_subcommand(props))
      return cmd_props(p, d, modulus, sigma, N, trials, seed, format, corrupt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
