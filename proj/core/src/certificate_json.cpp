#include "compseq/certificate_json.hpp"

#include <limits>

#include "json.hpp"

namespace compseq {

namespace {

using nlohmann::json;

json big_to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw CertificateFormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

Integer big_from_json(const json& j, const char* name) {
  const json& v = field(j, name);
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                  : to_integer(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) {
      throw CertificateFormatError(std::string("field \"") + name + "\" is not a decimal integer");
    }
    return out;
  }
  throw CertificateFormatError(std::string("field \"") + name + "\" must be an integer");
}

std::int64_t int_from_json(const json& j, const char* name) {
  const Integer v = big_from_json(j, name);
  if (!v.fits_slong_p()) throw CertificateFormatError(std::string("field \"") + name + "\" is out of range");
  return v.get_si();
}

std::uint64_t uint_from_json(const json& j, const char* name) {
  const Integer v = big_from_json(j, name);
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw CertificateFormatError(std::string("field \"") + name + "\" is out of range");
  }
  return std::stoull(v.get_str());
}

std::optional<std::int64_t> opt_int_from_json(const json& j, const char* name) {
  if (field(j, name).is_null()) return std::nullopt;
  return int_from_json(j, name);
}

std::string string_from_json(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw CertificateFormatError(std::string("field \"") + name + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

std::string certificate_to_json(const ProofCertificate& cert, int indent) {
  json j = json::object();
  j["polynomial"] = cert.polynomial;
  j["j0"] = cert.j0;
  j["reps"] = big_to_json(Integer(std::to_string(cert.reps)));
  j["offset"] = cert.offset;
  j["lambda"] = cert.lambda ? json(*cert.lambda) : json(nullptr);
  j["n1"] = cert.n1 ? json(*cert.n1) : json(nullptr);
  j["d1"] = cert.d1;
  j["d2"] = cert.d2;
  j["root_bound"] = big_to_json(cert.root_bound);
  j["base_case_max"] = big_to_json(cert.base_case_max);
  j["k_explored"] = cert.k_explored;
  j["lambda_deficiency"] = big_to_json(Integer(std::to_string(cert.lambda_deficiency)));
  j["verified"] = cert.verified;
  return j.dump(indent);
}

ProofCertificate certificate_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateFormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CertificateFormatError("certificate must be a JSON object");

  ProofCertificate cert;
  cert.polynomial = string_from_json(j, "polynomial");
  cert.j0 = int_from_json(j, "j0");
  cert.reps = uint_from_json(j, "reps");
  cert.offset = int_from_json(j, "offset");
  cert.lambda = opt_int_from_json(j, "lambda");
  cert.n1 = opt_int_from_json(j, "n1");
  cert.d1 = string_from_json(j, "d1");
  cert.d2 = string_from_json(j, "d2");
  cert.root_bound = big_from_json(j, "root_bound");
  cert.base_case_max = big_from_json(j, "base_case_max");
  cert.k_explored = int_from_json(j, "k_explored");
  cert.lambda_deficiency = uint_from_json(j, "lambda_deficiency");
  const json& verified = field(j, "verified");
  if (!verified.is_boolean()) throw CertificateFormatError("field \"verified\" must be a boolean");
  cert.verified = verified.get<bool>();
  return cert;
}

std::string report_to_json(const CompletenessReport& report, int indent) {
  json j = json::object();
  j["verdict"] = report.verdict;
  j["degree"] = report.degree;
  j["value_gcd"] = big_to_json(report.value_gcd);
  j["positivity_from"] = report.positivity_from ? json(*report.positivity_from) : json(nullptr);
  j["strictly_increasing_from"] =
      report.strictly_increasing_from ? json(*report.strictly_increasing_from) : json(nullptr);
  j["failures"] = report.failures;
  return j.dump(indent);
}

}  // namespace compseq
