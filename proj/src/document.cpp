// SPDX-License-Identifier: Apache-2.0
#include "lsc/document.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace lsc {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string join_ints(const std::vector<Int>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  return out.str();
}

std::string join_intervals(const std::vector<Interval>& ivs) {
  std::ostringstream out;
  for (size_t i = 0; i < ivs.size(); ++i) {
    if (i) out << ",";
    out << "[" << ivs[i].lo << "," << ivs[i].hi << "]";
  }
  return out.str();
}

std::vector<Int> interval_elements(const std::vector<Interval>& ivs) {
  std::vector<Int> out;
  for (const Interval& iv : ivs)
    for (Int n = iv.lo; n <= iv.hi; ++n) out.push_back(n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Certified: return "Certified";
    case Outcome::Refuted: return "Refuted";
    default: return "Unknown";
  }
}

}  // namespace

void add_certificate_fields(CertificateDocument& doc, const Certificate& cert,
                            const std::string& prefix) {
  if (const auto* c = std::get_if<SyndeticCert>(&cert)) {
    doc.add(prefix + "cert", "syndetic");
    doc.add(prefix + "gap", std::to_string(c->gap));
    doc.add(prefix + "checked-window", std::to_string(c->checked_window));
  } else if (const auto* c = std::get_if<ThickCert>(&cert)) {
    doc.add(prefix + "cert", "thick");
    doc.add(prefix + "level", std::to_string(c->level));
    doc.add(prefix + "intervals", join_intervals(c->witnesses));
    doc.add(prefix + "witness", join_ints(interval_elements(c->witnesses)));
  } else if (const auto* c = std::get_if<PsCert>(&cert)) {
    doc.add(prefix + "cert", "piecewise-syndetic");
    doc.add(prefix + "shift", std::to_string(c->shift));
    add_certificate_fields(doc, Certificate{c->inner}, prefix + "inner-");
  } else if (const auto* c = std::get_if<IpCert>(&cert)) {
    doc.add(prefix + "cert", "finite-sums");
    doc.add(prefix + "generators", join_ints(c->generators));
    std::vector<Int> sums;
    for (Int g : c->generators) {
      const size_t count = sums.size();
      for (size_t i = 0; i < count; ++i) sums.push_back(sums[i] + g);
      sums.push_back(g);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    doc.add(prefix + "witness", join_ints(sums));
  }
}

CertificateDocument document_skeleton(const std::string& expr_text,
                                      const std::string& command_text, const Verdict& verdict) {
  CertificateDocument doc;
  doc.add("tool", kToolVersion);
  doc.add("expr", expr_text);
  doc.add("command", command_text);
  doc.add("verdict", outcome_name(verdict.outcome));
  doc.add("exact", verdict.exact ? "yes" : "no");
  doc.add("bound", std::to_string(verdict.bound));
  add_certificate_fields(doc, verdict.cert);
  return doc;
}

std::string render(const CertificateDocument& doc) {
  std::ostringstream out;
  for (const auto& [k, v] : doc.fields) out << k << ": " << v << "\n";
  std::ostringstream sum;
  sum << "checksum: fnv1a:" << std::hex << std::setw(16) << std::setfill('0')
      << fnv1a(out.str()) << "\n";
  return out.str() + sum.str();
}

std::string render_json(const CertificateDocument& doc) {
  nlohmann::ordered_json j;
  std::string head;
  for (const auto& [k, v] : doc.fields) {
    j[k] = v;
    head += k + ": " + v + "\n";
  }
  std::ostringstream sum;
  sum << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(head);
  j["checksum"] = sum.str();
  return j.dump(2) + "\n";
}

CertificateDocument parse_document(const std::string& text) {
  CertificateDocument doc;
  std::string checksum_claim;
  std::string head;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const size_t colon = line.find(": ");
    if (colon == std::string::npos)
      throw Error(Error::Code::Parse, "document line without a 'key: value' form");
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 2);
    if (key == "checksum") {
      checksum_claim = value;
      break;
    }
    head += line + "\n";
    doc.add(std::move(key), std::move(value));
  }
  if (checksum_claim.empty())
    throw Error(Error::Code::Parse, "document has no checksum line");
  std::ostringstream sum;
  sum << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(head);
  if (sum.str() != checksum_claim)
    throw Error(Error::Code::Parse, "document checksum mismatch");
  return doc;
}

}  // namespace lsc
