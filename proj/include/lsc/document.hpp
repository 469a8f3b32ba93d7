// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsc/certificate.hpp"

namespace lsc {

inline constexpr const char* kToolVersion = "lsc 1.0.0";

// Ordered key/value lines plus a trailing checksum over everything above it.
// Field order is fixed by the producer, numbers are plain decimal, witness
// lists are ascending and comma-separated, and nothing in the checksummed
// region depends on time or machine — identical runs give identical bytes.
struct CertificateDocument {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) {
    fields.push_back({std::move(key), std::move(value)});
  }
  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return &v;
    return nullptr;
  }
};

// Standard header + verdict fields shared by every certify-style document.
CertificateDocument document_skeleton(const std::string& expr_text,
                                      const std::string& command_text, const Verdict& verdict);

// "key: value\n" per field, then "checksum: fnv1a:<16 hex digits>\n".
std::string render(const CertificateDocument& doc);
// Same fields as a JSON object (insertion order preserved), checksum included.
std::string render_json(const CertificateDocument& doc);

// Parses render() output, verifying the checksum line. Throws Error(Parse) on
// malformed input or checksum mismatch.
CertificateDocument parse_document(const std::string& text);

// Appends the payload fields of one certificate, keys prefixed (used for
// nested and per-part payloads).
void add_certificate_fields(CertificateDocument& doc, const Certificate& cert,
                            const std::string& prefix = "");

// Helpers with the serialization conventions of witness payloads.
std::string join_ints(const std::vector<Int>& xs);              // "1,2,3"
std::string join_intervals(const std::vector<Interval>& ivs);   // "[1,2],[4,4]"
std::vector<Int> interval_elements(const std::vector<Interval>& ivs);  // ascending, deduped

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace lsc
