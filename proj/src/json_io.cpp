#include "geoprove/json_io.hpp"

namespace geoprove {

using nlohmann::json;

std::string mode_tag(TruthMode mode) {
  switch (mode) {
    case TruthMode::FormallyTrue: return "formally_true";
    case TruthMode::GeometricallyTrue: return "geometrically_true";
    case TruthMode::GenerallyTrue: return "generally_true";
    case TruthMode::Unproved: return "unproved";
  }
  return "?";
}

namespace {

json order_json(const MonomialOrder& ord, const VariableTable& table) {
  json vars = json::array();
  for (const auto& block : ord.blocks())
    for (std::uint32_t v : block.vars) vars.push_back(table.name(v));
  return json{{"kind", ord.label()}, {"variables", vars}};
}

json poly_list(const std::vector<Polynomial>& polys, const MonomialOrder& ord) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string(ord));
  return out;
}

}  // namespace

json to_json(const PolySystem& sys) {
  const MonomialOrder ord = system_order(sys, "tdeg");
  json vars = json::array();
  for (std::uint32_t i = 0; i < sys.table->size(); ++i) {
    std::string role = "dependent";
    if (sys.free_vars.count(i)) role = "free";
    if (sys.applied_specialization.count(i)) role = "specialized";
    json entry{{"name", sys.table->name(i)}, {"alias", sys.table->alias(i)}, {"role", role}};
    auto it = sys.applied_specialization.find(i);
    if (it != sys.applied_specialization.end()) entry["value"] = it->second.to_string();
    vars.push_back(entry);
  }

  json points = json::object();
  for (const auto& [name, coords] : sys.coordinates)
    points[name] = json::array({sys.table->name(coords.first), sys.table->name(coords.second)});

  json hyps = json::array();
  for (const auto& h : sys.hypotheses)
    hyps.push_back(json{{"name", h.name}, {"source", h.source}, {"poly", h.poly.to_string(ord)}});

  return json{{"encoding", to_string(sys.encoding)},
              {"variables", vars},
              {"points", points},
              {"hypotheses", hyps},
              {"thesis", json{{"statement", sys.thesis_text},
                              {"poly", sys.thesis.to_string(ord)}}}};
}

json to_json(const Certificate& cert) {
  json difficulty;
  if (cert.mode == TruthMode::Unproved) {
    difficulty = nullptr;
  } else {
    difficulty = json::object();
    if (cert.difficulty.trivial)
      difficulty["value"] = "trivial";
    else
      difficulty["value"] = cert.difficulty.value;
    difficulty["minimized"] = cert.minimized;
    difficulty["upper_bound"] = cert.upper_bound;
    if (cert.difficulty_excluding_auxiliary)
      difficulty["excluding_auxiliary"] = *cert.difficulty_excluding_auxiliary;
  }
  return json{{"mode", mode_tag(cert.mode)},
              {"order", order_json(cert.order, *cert.table)},
              {"target", cert.target.to_string(cert.order)},
              {"generators", poly_list(cert.generators, cert.order)},
              {"cofactors", poly_list(cert.cofactors, cert.order)},
              {"nondegeneracy", poly_list(cert.nondegeneracy, cert.order)},
              {"auxiliary_generators", cert.auxiliary_generators},
              {"difficulty", difficulty}};
}

json to_json(const Transcript& t) {
  json sections = json::array();
  for (const auto& section : t.sections) {
    json lines = json::array();
    int n = 0;
    for (const auto& line : section.lines) lines.push_back(json{{"n", ++n}, {"text", line}});
    sections.push_back(json{{"heading", section.heading}, {"lines", lines}});
  }
  return json{{"sections", sections},
              {"mode", t.mode_line},
              {"difficulty", t.difficulty_line}};
}

json to_json(const DiscoveryReport& report) {
  json candidates = json::array();
  int rank = 0;
  for (const auto& cand : report.candidates) {
    json entry{{"rank", ++rank},
               {"statement", cand.text()},
               {"kind", to_string(cand.predicate.kind)},
               {"status", to_string(cand.status)}};
    if (cand.certificate) {
      entry["mode"] = mode_tag(cand.certificate->mode);
      entry["certificate"] = to_json(*cand.certificate);
    }
    if (cand.status == CandidateStatus::Refuted && cand.witness_value) {
      entry["witness_value"] = cand.witness_value->to_string();
      entry["witness"] = json::object();
      for (const auto& [name, value] : cand.witness)
        entry["witness"][name] = value.to_string();
    }
    candidates.push_back(std::move(entry));
  }
  return json{{"construction", report.construction_id},
              {"seed", report.seed},
              {"trials", report.trials},
              {"candidates", candidates}};
}

}  // namespace geoprove
