#include "geoprove/transcript.hpp"

#include "geoprove/errors.hpp"
#include "geoprove/json_io.hpp"

namespace geoprove {

namespace {

std::string equation(const std::string& name, const Polynomial& p, const MonomialOrder& ord,
                     const std::string& note = "") {
  std::string out = name + ": " + p.to_string(ord) + " = 0";
  if (!note.empty()) out += "   (" + note + ")";
  return out;
}

}  // namespace

Transcript build_transcript(const PolySystem& sys, const Specialization& spec,
                            const Certificate& cert) {
  if (cert.mode != TruthMode::Unproved && !verify_certificate(cert))
    throw UnverifiedCertificateError("refusing to render an unverified certificate");

  Transcript t;
  const MonomialOrder sys_ord = system_order(sys, "tdeg");

  TranscriptSection coords{"Coordinates", {}};
  for (const auto& step : sys.construction.steps) {
    auto it = sys.coordinates.find(step.name);
    if (it == sys.coordinates.end()) continue;
    auto [x, y] = it->second;
    std::string kind = step.kind == StepKind::FreePoint ? "free point" : "point";
    if (step.kind == StepKind::PerpendicularThrough) kind = "auxiliary point of";
    coords.lines.push_back(kind + " " + step.name + " = (" + sys.table->name(x) + ", " +
                           sys.table->name(y) + ")  [" + sys.table->alias(x) + ", " +
                           sys.table->alias(y) + "]");
  }
  t.sections.push_back(std::move(coords));

  TranscriptSection hyps{"Hypotheses", {}};
  for (const auto& h : sys.hypotheses)
    hyps.lines.push_back(equation(h.name, h.poly, sys_ord, h.source));
  hyps.lines.push_back(equation("Thesis", sys.thesis, sys_ord, sys.thesis_text));
  t.sections.push_back(std::move(hyps));

  TranscriptSection spec_section{"Specialization", {}};
  if (spec.empty()) {
    spec_section.lines.push_back("no specialization applied");
  } else {
    PolySystem specialized = specialize(sys, spec);
    for (const auto& [name, coords_pair] : spec.assignments)
      spec_section.lines.push_back(name + " = (" + coords_pair.first.to_string() + ", " +
                                   coords_pair.second.to_string() + ")");
    for (const auto& h : specialized.hypotheses)
      spec_section.lines.push_back(equation(h.name, h.poly, sys_ord));
    spec_section.lines.push_back(equation("Thesis", specialized.thesis, sys_ord));
  }
  t.sections.push_back(std::move(spec_section));

  TranscriptSection comb{"Combination", {}};
  if (cert.mode == TruthMode::Unproved) {
    comb.lines.push_back("no combination found");
  } else if (cert.target.is_zero()) {
    comb.lines.push_back("the thesis simplifies to the zero polynomial: 0 = 0");
  } else {
    // fully parenthesized so the right-hand side re-parses and expands
    // back to the target
    std::string line = cert.target.to_string(cert.order) + " = ";
    bool first = true;
    for (std::size_t i = 0; i < cert.generators.size(); ++i) {
      if (cert.cofactors[i].is_zero()) continue;
      if (!first) line += " + ";
      first = false;
      line += "(" + cert.cofactors[i].to_string(cert.order) + ")*(" +
              cert.generators[i].to_string(cert.order) + ")";
    }
    comb.lines.push_back(line);
  }
  t.sections.push_back(std::move(comb));

  if (cert.mode == TruthMode::Unproved) {
    t.mode_line = "Statement is not proved";
    t.difficulty_line = "Difficulty: undefined";
  } else {
    t.mode_line = "Statement is " + to_string(cert.mode);
    if (!cert.nondegeneracy.empty()) {
      t.mode_line += " under the nondegeneracy condition";
      if (cert.nondegeneracy.size() > 1) t.mode_line += "s";
      for (const auto& g : cert.nondegeneracy)
        t.mode_line += " " + g.to_string(cert.order) + " != 0";
    }
    t.difficulty_line = "Difficulty: " + cert.difficulty.to_string();
    if (cert.upper_bound) t.difficulty_line += " (upper bound)";
  }
  return t;
}

std::string Transcript::to_text() const {
  std::string out;
  for (const auto& section : sections) {
    out += section.heading + "\n";
    int n = 0;
    for (const auto& line : section.lines)
      out += "  " + std::to_string(++n) + ". " + line + "\n";
  }
  out += mode_line + "\n" + difficulty_line + "\n";
  return out;
}

std::string render(const PolySystem& sys, const Specialization& spec,
                   const Certificate& cert, const std::string& format) {
  Transcript t = build_transcript(sys, spec, cert);
  if (format == "text") return t.to_text();
  if (format == "json") return to_json(t).dump(2) + "\n";
  throw std::invalid_argument("render: format must be 'text' or 'json'");
}

}  // namespace geoprove
