#pragma once

#include <string>

#include <json.hpp>

namespace odetype {

/// Machine-readable result of one CLI invocation. Field names and layout
/// are frozen in docs/certificate-schema.md; rationals are "p/q" strings and
/// rational functions are strings the expression parser accepts.
struct CertificateDoc {
  using Json = nlohmann::ordered_json;

  std::string tool_version;
  std::string command;
  std::string verdict;
  Json input = Json::object();
  Json evidence = Json::object();
  Json hypotheses = Json::object();

  Json to_json() const;
  /// Two-space indented JSON with a trailing newline.
  std::string serialize() const;
  /// Inverse of serialize(); throws InputError on malformed documents.
  static CertificateDoc parse(const std::string& text);
  /// Indented "key: value" lines for humans.
  std::string pretty() const;
};

}  // namespace odetype
