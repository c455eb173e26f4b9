#pragma once

// JSON serialization of construction results. Every integer is carried as
// a decimal string: constructed values routinely exceed any fixed-width
// numeric type, and JSON numbers would silently lose precision.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "niven/construction.hpp"
#include "niven/digits.hpp"
#include "niven/errors.hpp"

namespace niven {

inline constexpr const char* kDocumentSchemaVersion = "1";

class MalformedDocumentError : public Error {
 public:
  explicit MalformedDocumentError(const std::string& what) : Error(what) {}
};

namespace detail {

inline std::string dec(const BigInt& n) { return n.str(); }

inline BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw MalformedDocumentError("empty integer field");
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) throw MalformedDocumentError("bare sign is not an integer");
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw MalformedDocumentError("non-decimal integer field: " + text);
  return BigInt(text);
}

inline CertificateClaim parse_claim(const nlohmann::ordered_json& j) {
  CertificateClaim claim;
  std::string name = j.at("name").get<std::string>();
  const std::string ds_prefix = "digit_sum_base_";
  const std::string niven_prefix = "niven_base_";
  if (name == "residue_mod_m") {
    claim.kind = ClaimKind::kMembership;
  } else if (name == "s_divides_value") {
    claim.kind = ClaimKind::kSDividesValue;
  } else if (name.rfind(ds_prefix, 0) == 0) {
    claim.kind = ClaimKind::kDigitSumEqualsS;
    claim.base = parse_bigint(name.substr(ds_prefix.size()));
  } else if (name.rfind(niven_prefix, 0) == 0) {
    claim.kind = ClaimKind::kDigitSumDivides;
    claim.base = parse_bigint(name.substr(niven_prefix.size()));
  } else {
    throw MalformedDocumentError("unknown claim name: " + name);
  }
  claim.expected = parse_bigint(j.at("expected").get<std::string>());
  claim.actual = parse_bigint(j.at("actual").get<std::string>());
  claim.pass = j.at("pass").get<bool>();
  return claim;
}

}  // namespace detail

inline nlohmann::ordered_json to_document(const ConstructionResult& result) {
  using detail::dec;
  nlohmann::ordered_json doc;
  doc["schema_version"] = kDocumentSchemaVersion;
  doc["params"] = {{"b", dec(result.params.b)},
                   {"k", std::to_string(result.params.k)},
                   {"B", dec(result.params.power_base())},
                   {"m", dec(result.params.m)},
                   {"r", dec(result.params.r)}};
  doc["s"] = dec(result.s.s);
  doc["omega"] = dec(result.omega);
  if (result.tower_exponent) doc["tower_K"] = dec(*result.tower_exponent);
  doc["value_decimal"] = dec(result.value);
  nlohmann::ordered_json renderings = nlohmann::ordered_json::object();
  nlohmann::ordered_json digit_sums = nlohmann::ordered_json::object();
  for (const BigInt& g : result.certificate_bases) {
    auto expansion = to_base(result.value, g);
    renderings[dec(g)] = render(expansion);
    digit_sums[dec(g)] = dec(expansion.digit_sum());
  }
  doc["renderings"] = std::move(renderings);
  doc["digit_sums"] = std::move(digit_sums);
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const CertificateClaim& c : result.certificate.claims) {
    claims.push_back({{"name", c.name()},
                      {"expected", dec(c.expected)},
                      {"actual", dec(c.actual)},
                      {"pass", c.pass}});
  }
  doc["claims"] = std::move(claims);
  return doc;
}

// Reconstructs a ConstructionResult from a document so the oracle can
// re-verify it. Admissibility provenance (rad(b), the CRT base point) is
// recomputed from the parsed parameters.
inline ConstructionResult from_document(const nlohmann::ordered_json& doc) {
  using detail::parse_bigint;
  try {
    std::string version = doc.at("schema_version").get<std::string>();
    if (version != kDocumentSchemaVersion)
      throw MalformedDocumentError("unsupported schema_version: " + version);
    const auto& p = doc.at("params");
    ConstructionParams params;
    params.b = parse_bigint(p.at("b").get<std::string>());
    params.k = static_cast<unsigned>(std::stoul(p.at("k").get<std::string>()));
    params.m = parse_bigint(p.at("m").get<std::string>());
    params.r = parse_bigint(p.at("r").get<std::string>());
    params = validate(params);
    ConstructionResult result;
    result.params = params;
    result.s = make_admissible(params, parse_bigint(doc.at("s").get<std::string>()));
    result.omega = parse_bigint(doc.at("omega").get<std::string>());
    if (doc.contains("tower_K"))
      result.tower_exponent = parse_bigint(doc.at("tower_K").get<std::string>());
    result.value = parse_bigint(doc.at("value_decimal").get<std::string>());
    for (const auto& cj : doc.at("claims")) {
      CertificateClaim claim = detail::parse_claim(cj);
      if (claim.base != 0) {
        if (std::find(result.certificate_bases.begin(),
                      result.certificate_bases.end(),
                      claim.base) == result.certificate_bases.end())
          result.certificate_bases.push_back(claim.base);
      }
      result.certificate.claims.push_back(std::move(claim));
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedDocumentError(std::string("bad certificate document: ") +
                                 e.what());
  } catch (const std::invalid_argument& e) {
    throw MalformedDocumentError(std::string("bad certificate document: ") +
                                 e.what());
  }
}

}  // namespace niven
