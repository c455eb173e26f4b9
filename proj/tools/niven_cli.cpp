// Command-line front end: construct simultaneous Niven numbers in an
// arithmetic progression, verify certificates, scan progressions
// exhaustively, and compute multiplicative orders.
//
// Exit codes: 0 success / all claims pass, 1 verification failure,
// 2 validation or parse error, 3 inadmissible s, 4 size cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "niven/construction.hpp"
#include "niven/digits.hpp"
#include "niven/document.hpp"
#include "niven/errors.hpp"
#include "niven/numtheory.hpp"
#include "niven/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInadmissible = 3;
constexpr int kExitSizeCap = 4;

std::uint64_t default_size_cap() {
  if (const char* env = std::getenv("NIVEN_SIZE_CAP_BITS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring invalid NIVEN_SIZE_CAP_BITS=" << env << "\n";
  }
  return niven::kDefaultSizeCapBits;
}

niven::BigInt parse_flag_int(const std::string& text, const char* flag) {
  if (text.empty())
    throw niven::ValidationError("bad_flag", std::string("missing value for ") + flag);
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size())
    throw niven::ValidationError("bad_flag", std::string("bad value for ") + flag);
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw niven::ValidationError("bad_flag", std::string("bad value for ") +
                                                   flag + ": " + text);
  return niven::BigInt(text);
}

// Positions (least-significant first) of the 1 digits, when the expansion
// uses only digits 0 and 1; otherwise empty.
std::vector<std::size_t> one_positions(
    const niven::BaseExpansion<niven::BigInt>& e) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    const auto& d = e.digits[e.digits.size() - 1 - i];
    if (d == 1) {
      positions.push_back(i);
    } else if (d != 0) {
      return {};
    }
  }
  return positions;
}

void print_text_result(const niven::ConstructionResult& result,
                       const niven::oracle::VerificationVerdict& verdict) {
  const auto& p = result.params;
  std::cout << "params: b=" << p.b << " k=" << p.k << " B=" << p.power_base()
            << " m=" << p.m << " r=" << p.r << "\n";
  std::cout << "s = " << result.s.s << " (rad(b) = " << result.s.q << ")\n";
  if (result.tower_exponent)
    std::cout << "tower exponent K = " << *result.tower_exponent << "\n";
  std::cout << "omega = " << result.omega << "\n";
  std::cout << "value = " << result.value << "\n";
  for (const auto& g : result.certificate_bases) {
    auto expansion = niven::to_base(result.value, g);
    std::cout << "base " << g << ": " << niven::render(expansion);
    auto ones = one_positions(expansion);
    if (!ones.empty()) {
      std::cout << " (1s at positions";
      for (std::size_t i = 0; i < ones.size(); ++i)
        std::cout << (i ? ", " : " ") << ones[i];
      std::cout << "; digit sum " << expansion.digit_sum() << ")";
    } else {
      std::cout << " (digit sum " << expansion.digit_sum() << ")";
    }
    std::cout << "\n";
  }
  for (const auto& v : verdict.claims)
    std::cout << "claim " << v.name << ": expected " << v.expected
              << ", recomputed " << v.recomputed << " ["
              << (v.pass ? "pass" : "FAIL") << "]\n";
  std::cout << "certificate: " << (verdict.all_pass ? "PASS" : "FAIL") << "\n";
}

int run_construct(const std::string& b_str, const std::string& k_str,
                  const std::string& m_str, const std::string& r_str,
                  const std::optional<std::string>& s_str,
                  const std::optional<std::string>& s_min_str, bool tower,
                  std::uint64_t size_cap, const std::string& format) {
  niven::ConstructionParams params;
  params.b = parse_flag_int(b_str, "--b");
  params.k = static_cast<unsigned>(std::stoul(k_str));
  params.m = parse_flag_int(m_str, "--m");
  params.r = parse_flag_int(r_str, "--r");
  params = niven::validate(params);

  niven::AdmissibleS s =
      s_str ? niven::make_admissible(params, parse_flag_int(*s_str, "--s"))
            : niven::AdmissibleStream(
                  params,
                  s_min_str ? parse_flag_int(*s_min_str, "--s-min") : 1)
                  .next();

  niven::ConstructionResult result =
      tower ? niven::construct_tower(params, s, size_cap)
            : niven::construct(params, s, size_cap);
  auto verdict = niven::oracle::verify_certificate(result);

  if (format == "json") {
    std::cout << niven::to_document(result).dump(2) << "\n";
  } else {
    print_text_result(result, verdict);
  }
  if (!result.certificate.all_pass() || !verdict.all_pass) {
    std::cerr << "error: internal verification failure\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int run_verify(const std::optional<std::string>& input_path,
               const std::optional<std::string>& value_str,
               const std::string& b_str, const std::string& k_str,
               const std::string& m_str, const std::string& r_str,
               const std::optional<std::string>& s_str, bool tower) {
  niven::ConstructionResult result;
  if (input_path) {
    std::ifstream in(*input_path);
    if (!in) {
      std::cerr << "error: cannot open " << *input_path << "\n";
      return kExitValidation;
    }
    nlohmann::ordered_json doc;
    try {
      doc = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: malformed document: " << e.what() << "\n";
      return kExitValidation;
    }
    result = niven::from_document(doc);
  } else {
    if (!value_str || !s_str)
      throw niven::ValidationError("missing_flag",
                                   "verify needs --input or --value with --s");
    niven::ConstructionParams params;
    params.b = parse_flag_int(b_str, "--b");
    params.k = static_cast<unsigned>(std::stoul(k_str));
    params.m = parse_flag_int(m_str, "--m");
    params.r = parse_flag_int(r_str, "--r");
    params = niven::validate(params);
    result.params = params;
    result.s = niven::make_admissible(params, parse_flag_int(*s_str, "--s"));
    result.value = parse_flag_int(*value_str, "--value");
    result.omega = 0;  // not needed for verification
    result.certificate_bases =
        tower ? niven::detail::tower_bases(params.b, params.k)
              : niven::detail::divisor_bases(params.b, params.k);
    // Claims carry the expected values only; the oracle recomputes.
    result.certificate.claims.push_back(
        {niven::ClaimKind::kMembership, 0, params.r, 0, false});
    for (const auto& g : result.certificate_bases) {
      result.certificate.claims.push_back(
          {niven::ClaimKind::kDigitSumEqualsS, g, result.s.s, 0, false});
      result.certificate.claims.push_back(
          {niven::ClaimKind::kDigitSumDivides, g, 0, 0, false});
    }
    result.certificate.claims.push_back(
        {niven::ClaimKind::kSDividesValue, 0, 0, 0, false});
  }

  auto verdict = niven::oracle::verify_certificate(result);
  for (const auto& v : verdict.claims)
    std::cout << v.name << ": expected " << v.expected << ", recomputed "
              << v.recomputed << " [" << (v.pass ? "pass" : "FAIL") << "]\n";
  std::cout << "verdict: " << (verdict.all_pass ? "PASS" : "FAIL") << "\n";
  return verdict.all_pass ? kExitOk : kExitVerificationFailed;
}

int run_scan(const std::string& b_str, const std::string& k_str,
             const std::string& m_str, const std::string& r_str,
             const std::string& limit_str, unsigned shards,
             const std::string& format) {
  niven::ConstructionParams params;
  params.b = parse_flag_int(b_str, "--b");
  params.k = static_cast<unsigned>(std::stoul(k_str));
  params.m = parse_flag_int(m_str, "--m");
  params.r = parse_flag_int(r_str, "--r");
  params = niven::validate(params);
  niven::BigInt limit = parse_flag_int(limit_str, "--limit");
  if (limit < 1)
    throw niven::ValidationError("limit_too_small", "--limit must be >= 1");

  auto report = niven::oracle::scan_simultaneous(params, limit, shards);
  niven::BigInt big_base = params.power_base();
  if (format == "json") {
    for (const auto& n : report.hits) {
      nlohmann::ordered_json line;
      line["n"] = n.str();
      line["digit_sum_b"] = niven::digit_sum(n, params.b).str();
      line["digit_sum_B"] = niven::digit_sum(n, big_base).str();
      std::cout << line.dump() << "\n";
    }
    nlohmann::ordered_json summary;
    summary["limit"] = limit.str();
    summary["count"] = std::to_string(report.count());
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "n (digit sums in bases " << params.b << ", " << big_base
              << ")\n";
    for (const auto& n : report.hits)
      std::cout << n << " (" << niven::digit_sum(n, params.b) << ", "
                << niven::digit_sum(n, big_base) << ")\n";
    std::cout << "count: " << report.count() << " up to " << limit << "\n";
  }
  return kExitOk;
}

int run_order(const std::string& a_str, const std::string& n_str) {
  niven::BigInt a = parse_flag_int(a_str, "--a");
  niven::BigInt n = parse_flag_int(n_str, "--n");
  if (n < 1)
    throw niven::ValidationError("modulus_too_small", "--n must be >= 1");
  std::cout << niven::multiplicative_order(a, n) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous Niven numbers in arithmetic progressions"};
  app.require_subcommand(1);

  std::string b_str, k_str = "1", m_str = "1", r_str = "0";
  std::optional<std::string> s_str, s_min_str, input_path, value_str;
  std::string limit_str, a_str, n_str;
  std::string format = "text";
  bool tower = false;
  unsigned shards = 1;
  std::uint64_t size_cap = default_size_cap();

  auto* construct = app.add_subcommand("construct",
                                       "Construct a simultaneous Niven number");
  construct->add_option("--b", b_str, "Base b >= 2")->required();
  construct->add_option("--k", k_str, "Exponent k >= 1 (B = b^k)");
  construct->add_option("--m", m_str, "Progression modulus");
  construct->add_option("--r", r_str, "Progression residue");
  auto* s_opt = construct->add_option("--s", s_str, "Digit sum (must be admissible)");
  construct->add_option("--s-min", s_min_str, "Use first admissible s >= this")
      ->excludes(s_opt);
  construct->add_flag("--tower", tower,
                      "Use K = lcm(1..k); result is b^l-Niven for all l <= k");
  construct->add_option("--size-cap", size_cap, "Output size cap in bits");
  construct->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Re-verify a certificate");
  verify->add_option("--input", input_path, "Certificate document (JSON)");
  verify->add_option("--value", value_str, "Constructed value (decimal)");
  verify->add_option("--b", b_str, "Base b");
  verify->add_option("--k", k_str, "Exponent k");
  verify->add_option("--m", m_str, "Progression modulus");
  verify->add_option("--r", r_str, "Progression residue");
  verify->add_option("--s", s_str, "Digit sum");
  verify->add_flag("--tower", tower, "Check the tower claim set");

  auto* scan = app.add_subcommand(
      "scan", "Exhaustively scan a progression for simultaneous Niven numbers");
  scan->add_option("--b", b_str, "Base b >= 2")->required();
  scan->add_option("--k", k_str, "Exponent k >= 1");
  scan->add_option("--m", m_str, "Progression modulus");
  scan->add_option("--r", r_str, "Progression residue");
  scan->add_option("--limit", limit_str, "Scan bound (inclusive)")->required();
  scan->add_option("--shards", shards, "Worker threads");
  scan->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* order = app.add_subcommand("order", "Multiplicative order of a mod N");
  order->add_option("--a", a_str, "Element")->required();
  order->add_option("--n", n_str, "Modulus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (construct->parsed())
      return run_construct(b_str, k_str, m_str, r_str, s_str, s_min_str, tower,
                           size_cap, format);
    if (verify->parsed())
      return run_verify(input_path, value_str, b_str, k_str, m_str, r_str,
                        s_str, tower);
    if (scan->parsed())
      return run_scan(b_str, k_str, m_str, r_str, limit_str, shards, format);
    if (order->parsed()) return run_order(a_str, n_str);
  } catch (const niven::ValidationError& e) {
    std::cerr << "error [" << e.condition() << "]: " << e.what() << "\n";
    return kExitValidation;
  } catch (const niven::InadmissibleError& e) {
    std::cerr << "error [" << e.condition() << "]: " << e.what() << "\n";
    return kExitInadmissible;
  } catch (const niven::SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const niven::MalformedDocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const niven::NotInvertibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const niven::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
