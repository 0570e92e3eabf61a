// Step-by-step proof transcripts: coordinates, hypothesis equations,
// specialization, the explicit combination, conclusion and difficulty.
#pragma once

#include <string>
#include <vector>

#include "geoprove/prover.hpp"

namespace geoprove {

struct TranscriptSection {
  std::string heading;
  std::vector<std::string> lines;  // numbered per section when rendered
};

struct Transcript {
  std::vector<TranscriptSection> sections;
  std::string mode_line;
  std::string difficulty_line;

  std::string to_text() const;
};

// `sys` is the unspecialized system; `spec` the applied specialization
// (possibly empty); `cert` the certificate produced on the specialized
// system. Throws UnverifiedCertificate when a proved certificate fails
// its identity recheck.
Transcript build_transcript(const PolySystem& sys, const Specialization& spec,
                            const Certificate& cert);

// format: "text" or "json"
std::string render(const PolySystem& sys, const Specialization& spec,
                   const Certificate& cert, const std::string& format);

}  // namespace geoprove
