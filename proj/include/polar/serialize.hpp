#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include <json.hpp>

#include "polar/forms.hpp"
#include "polar/props.hpp"
#include "polar/verify.hpp"

namespace polar {

nlohmann::json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const Field& f, Fe x);
Fe element_from_json(const Field& f, const nlohmann::json& j);

// Form file: {"field": {...}, "epsilon": "+1"|"-1", "matrix": [[...], ...]}
struct LoadedForm {
  std::shared_ptr<Field> field;
  std::shared_ptr<SesquilinearForm> form;
  std::string description;
};
LoadedForm load_form_json(const nlohmann::json& j);
LoadedForm load_form_file(const std::string& path);

// Sparse fixture format: header "N r", then 1-based "i1 ... ir value" lines.
std::string tensor_to_text(const Tensor& t);
Tensor tensor_from_text(const Field& f, std::istream& in);

nlohmann::json report_to_json(const VerificationReport& rep, const Field& f);
std::string report_to_text(const VerificationReport& rep, const Field& f);

nlohmann::json props_report_to_json(const PropsReport& rep, const PropsConfig& cfg);
std::string props_report_to_text(const PropsReport& rep, const PropsConfig& cfg);

}  // namespace polar
