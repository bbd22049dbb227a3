#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "compseq/certify.hpp"
#include "compseq/complete.hpp"

namespace compseq {

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serializes to the certificate file format. Integers that do not fit in
/// 64 bits are written as decimal strings.
std::string certificate_to_json(const ProofCertificate& cert, int indent = 2);

/// Throws CertificateFormatError on malformed input or missing fields.
ProofCertificate certificate_from_json(std::string_view text);

std::string report_to_json(const CompletenessReport& report, int indent = 2);

}  // namespace compseq
