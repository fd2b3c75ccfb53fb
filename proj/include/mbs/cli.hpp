// Document and certificate formats plus the command-line driver.
//
// Documents are versioned JSON files declaring named decorated objects and
// maps between them; certificates serialize derivations.  Both formats are
// canonical: emitting a parsed document reproduces its normal form byte for
// byte, which keeps the corpus golden-testable.  The driver returns the
// four-value exit contract instead of calling exit(), so it is testable in
// process.
#pragma once

#include <iosfwd>
#include <stdexcept>

#include "mbs/derivation.hpp"

namespace mbs {

// Exit contract shared by every subcommand.
inline constexpr int kExitPass = 0;          // verified / lifted / all green
inline constexpr int kExitFail = 1;          // refuted with witness
inline constexpr int kExitInconclusive = 2;  // budget or cap ran out
inline constexpr int kExitInputError = 3;    // malformed input or arguments

inline constexpr const char* kDocumentVersion = "mbd/1";
inline constexpr const char* kCertificateVersion = "mbd-cert/1";

// Raised on malformed or semantically invalid documents and certificates.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Document {
  std::string version = kDocumentVersion;
  int cap = kDefaultCap;
  std::map<std::string, MBPtr> objects;
  std::map<std::string, DecoratedMap> maps;
};

// Parses and validates a document.  Decoration sets that are not closed
// (thin outside lean) are repaired and reported through `warnings` unless
// `strict`, in which case they are rejected.
Document parse_document(const std::string& text, bool strict = false,
                        std::vector<std::string>* warnings = nullptr);

// Canonical serialization; parse-then-emit is idempotent on its output.
std::string emit_document(const Document& doc);

std::string emit_certificate(const Derivation& d);
Derivation parse_certificate(const std::string& text);

// Runs one command line (without the program name); writes the report to
// `out`, diagnostics to `err`, and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mbs
