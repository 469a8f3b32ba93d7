// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>

#include "lsc/document.hpp"

namespace lsc {

// Bad invocation (missing flag, unknown verb): exit status 64, as opposed to
// engine errors (Error, status 65) and verdict statuses (0/1/2).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Command {
  std::string verb;    // eval | certify | build | split | decompose | word | report
  std::string target;  // verb-specific subtarget (e.g. certify syndetic)
  std::map<std::string, std::string> flags;
};

struct Execution {
  int exit_code = 0;
  std::string output;  // exactly what goes to stdout
  std::optional<CertificateDocument> document;
};

// Runs a command against the engine. Throws UsageError for malformed
// invocations and Error for engine-level failures.
Execution execute(const Command& cmd);

// The deterministic "command:" line: verb, target, then flags in sorted
// order, excluding expression-valued flags (set/probe/sched), which live in
// their own document fields.
std::string canonical_command_text(const Command& cmd);

// Inverse of the above (flags come back without set/probe/sched).
Command parse_command_text(const std::string& text);

// Reassembles a runnable command from a stored document, pulling expression
// fields back into flags. Used to replay certificates.
Command command_from_document(const CertificateDocument& doc);

// Static containment table between the largeness families.
std::string lattice_table();

}  // namespace lsc
