#include "odetype/certificate.hpp"

#include <sstream>

#include "odetype/expr.hpp"

namespace odetype {

namespace {

constexpr const char* kFormat = "odetype-certificate";
constexpr int kFormatVersion = 1;

void pretty_into(std::ostringstream& os, const CertificateDoc::Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : j.items()) {
    if (v.is_object() && !v.empty()) {
      os << pad << key << ":\n";
      pretty_into(os, v, indent + 2);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      os << pad << key << ":\n";
      for (const auto& item : v) {
        os << pad << "  -\n";
        pretty_into(os, item, indent + 4);
      }
    } else if (v.is_string()) {
      os << pad << key << ": " << v.get<std::string>() << "\n";
    } else {
      os << pad << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

CertificateDoc::Json CertificateDoc::to_json() const {
  Json j;
  j["format"] = kFormat;
  j["format_version"] = kFormatVersion;
  j["tool"] = {{"name", "odetype"}, {"version", tool_version}};
  j["command"] = command;
  j["verdict"] = verdict;
  j["input"] = input;
  j["evidence"] = evidence;
  j["hypotheses"] = hypotheses;
  return j;
}

std::string CertificateDoc::serialize() const { return to_json().dump(2) + "\n"; }

CertificateDoc CertificateDoc::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  auto need = [&](const char* key, bool (Json::*is)() const noexcept) -> const Json& {
    if (!j.is_object() || !j.contains(key) || !(j.at(key).*is)())
      throw InputError(std::string("certificate field '") + key + "' missing or mistyped");
    return j.at(key);
  };
  if (need("format", &Json::is_string).get<std::string>() != kFormat ||
      need("format_version", &Json::is_number_integer).get<int>() != kFormatVersion)
    throw InputError("unsupported certificate format");
  const Json& tool = need("tool", &Json::is_object);
  if (!tool.contains("version") || !tool.at("version").is_string()) throw InputError("certificate tool version missing");
  CertificateDoc d;
  d.tool_version = tool.at("version").get<std::string>();
  d.command = need("command", &Json::is_string).get<std::string>();
  d.verdict = need("verdict", &Json::is_string).get<std::string>();
  d.input = need("input", &Json::is_object);
  d.evidence = need("evidence", &Json::is_object);
  d.hypotheses = need("hypotheses", &Json::is_object);
  return d;
}

std::string CertificateDoc::pretty() const {
  std::ostringstream os;
  os << "command: " << command << "\nverdict: " << verdict << "\n";
  for (const auto& [name, block] : {std::pair{"input", &input}, {"evidence", &evidence}, {"hypotheses", &hypotheses}}) {
    if (block->empty()) continue;
    os << name << ":\n";
    pretty_into(os, *block, 2);
  }
  return os.str();
}

}  // namespace odetype
