#include "polar/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polar {

using nlohmann::json;

json field_spec_to_json(const FieldSpec& spec) {
  json j;
  j["p"] = spec.p;
  j["d"] = spec.degree;
  if (spec.degree == 2)
    j["modulus"] = {spec.modulus[0], spec.modulus[1], spec.modulus[2]};
  j["sigma"] = spec.sigma == SigmaKind::frobenius ? "frobenius" : "identity";
  return j;
}

FieldSpec field_spec_from_json(const json& j) {
  FieldSpec spec;
  spec.p = j.value("p", 0LL);
  spec.degree = j.value("d", 1);
  if (j.contains("modulus")) {
    auto m = j.at("modulus");
    if (m.size() != 3) throw std::invalid_argument("modulus needs 3 coefficients");
    spec.modulus = {m[0].get<long long>(), m[1].get<long long>(),
                    m[2].get<long long>()};
  }
  std::string s = j.value("sigma", "identity");
  if (s == "frobenius")
    spec.sigma = SigmaKind::frobenius;
  else if (s == "identity")
    spec.sigma = SigmaKind::identity;
  else
    throw std::invalid_argument("unknown sigma kind: " + s);
  return spec;
}

json element_to_json(const Field& f, Fe x) {
  if (f.is_rational()) {
    if (x.b == 1 || x.b == 0) return json(x.a);
    return json(f.to_string(x));
  }
  if (f.spec().degree == 1) return json(x.a);
  return json::array({x.a, x.b});
}

Fe element_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("element array needs 2 entries");
    return f.make(j[0].get<long long>(), j[1].get<long long>());
  }
  throw std::invalid_argument("bad element encoding");
}

LoadedForm load_form_json(const json& j) {
  LoadedForm out;
  out.field = std::make_shared<Field>(field_spec_from_json(j.at("field")));
  std::string eps = j.value("epsilon", "+1");
  int e;
  if (eps == "+1" || eps == "1")
    e = 1;
  else if (eps == "-1")
    e = -1;
  else
    throw std::invalid_argument("epsilon must be +1 or -1");
  auto rows = j.at("matrix");
  int n = static_cast<int>(rows.size());
  Mat m(n, n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw std::invalid_argument("matrix is not square");
    for (int c = 0; c < n; ++c)
      m.at(r, c) = element_from_json(*out.field, rows[r][c]);
  }
  out.form = std::make_shared<SesquilinearForm>(*out.field, std::move(m), e);
  out.description = j.value("name", "");
  return out;
}

LoadedForm load_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open form file: " + path);
  json j;
  in >> j;
  LoadedForm lf = load_form_json(j);
  if (lf.description.empty()) lf.description = path;
  return lf;
}

std::string tensor_to_text(const Tensor& t) {
  std::ostringstream out;
  out << t.dim() << " " << t.degree() << "\n";
  const Field& f = t.field();
  std::vector<int> idx(t.degree(), 0);
  size_t total = t.size();
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (int d = t.degree() - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(rem % t.dim());
      rem /= t.dim();
    }
    if (f.is_zero(t[flat])) continue;
    for (int i : idx) out << (i + 1) << " ";
    out << f.to_string(t[flat]) << "\n";
  }
  return out.str();
}

Tensor tensor_from_text(const Field& f, std::istream& in) {
  int N, r;
  if (!(in >> N >> r)) throw std::invalid_argument("bad tensor header");
  Tensor t(f, N, r);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) {
      if (!(ls >> idx[i])) throw std::invalid_argument("bad tensor line: " + line);
      --idx[i];
    }
    std::string value;
    if (!(ls >> value)) throw std::invalid_argument("bad tensor line: " + line);
    t.set(idx, f.parse(value));
  }
  return t;
}

json report_to_json(const VerificationReport& rep, const Field& f) {
  json j;
  j["form"] = rep.form_description;
  j["field"] = field_spec_to_json(f.spec());
  j["N"] = rep.N;
  j["k"] = rep.k;
  j["mode"] = rep.mode;
  j["seed"] = rep.seed;
  j["cap"] = tensor_entry_cap();
  j["subspaces"] = rep.subspaces;
  j["totally_isotropic"] = rep.isotropic;
  j["eq7_members"] = rep.eq7_members;
  j["mismatches"] = rep.mismatches;
  j["elapsed_seconds"] = rep.elapsed_seconds;
  json wits = json::array();
  for (const auto& w : rep.witnesses) {
    json rows = json::array();
    for (int r = 0; r < w.subspace_rows.rows; ++r) {
      json row = json::array();
      for (int c = 0; c < w.subspace_rows.cols; ++c)
        row.push_back(element_to_json(f, w.subspace_rows.at(r, c)));
      rows.push_back(row);
    }
    wits.push_back({{"rows", rows}, {"note", w.note}});
  }
  j["witnesses"] = wits;
  return j;
}

std::string report_to_text(const VerificationReport& rep, const Field& f) {
  std::ostringstream out;
  out << "form: " << rep.form_description << "\n";
  out << "field: " << field_spec_to_json(f.spec()).dump() << "\n";
  out << "N=" << rep.N << " k=" << rep.k << " mode=" << rep.mode
      << " seed=" << rep.seed << " cap=" << tensor_entry_cap() << "\n";
  out << "subspaces: " << rep.subspaces << "\n";
  out << "totally isotropic: " << rep.isotropic << "\n";
  out << "eq7 members: " << rep.eq7_members << "\n";
  out << "mismatches: " << rep.mismatches << "\n";
  for (const auto& w : rep.witnesses) {
    out << "witness (" << w.note << "):";
    for (int r = 0; r < w.subspace_rows.rows; ++r) {
      out << " [";
      for (int c = 0; c < w.subspace_rows.cols; ++c) {
        if (c) out << " ";
        out << f.to_string(w.subspace_rows.at(r, c));
      }
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

json props_report_to_json(const PropsReport& rep, const PropsConfig& cfg) {
  json j;
  j["field"] = field_spec_to_json(cfg.field);
  j["N"] = cfg.N;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["cap"] = tensor_entry_cap();
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"trials", c.trials}, {"pass", c.pass}});
  j["checks"] = checks;
  j["all_pass"] = rep.all_pass();
  return j;
}

std::string props_report_to_text(const PropsReport& rep, const PropsConfig& cfg) {
  std::ostringstream out;
  out << "field: " << field_spec_to_json(cfg.field).dump() << " N=" << cfg.N
      << " trials=" << cfg.trials << " seed=" << cfg.seed
      << " cap=" << tensor_entry_cap() << "\n";
  for (const auto& c : rep.checks)
    out << (c.pass ? "PASS" : "FAIL") << " [" << c.trials << " trials] " << c.name
        << "\n";
  out << (rep.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
  return out.str();
}

}  // namespace polar
