// The .geo construction language and the polynomial expression parser.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoprove/polynomial.hpp"

namespace geoprove {

enum class StepKind {
  FreePoint,
  Midpoint,
  LineThrough,
  PerpendicularThrough,
  ParallelThrough,
  IntersectLines,
  PointOnLine,
};

enum class PredicateKind {
  Collinear,
  EqualLength,
  Perpendicular,
  Parallel,
  PointOnLine,
  PointOnCircle,
};

struct Step {
  StepKind kind = StepKind::FreePoint;
  std::string name;
  std::vector<std::string> args;  // names of earlier objects
  int line = 0;
};

struct Predicate {
  PredicateKind kind = PredicateKind::Collinear;
  std::vector<std::string> args;
  int line = 0;

  std::string to_string() const;
};

enum class Encoding { Direct, Translation };

std::string to_string(StepKind kind);
std::string to_string(PredicateKind kind);
std::optional<PredicateKind> predicate_kind_from_string(const std::string& name);
std::string to_string(Encoding e);
Encoding encoding_from_string(const std::string& name);

struct Construction {
  std::vector<Step> steps;
  Predicate thesis;
  // set when the source carried an `encoding` pragma
  std::optional<Encoding> encoding;

  bool is_point(const std::string& name) const;
  bool is_line(const std::string& name) const;
  const Step* find(const std::string& name) const;
  std::vector<std::string> point_names() const;
  std::vector<std::string> line_names() const;
  std::vector<std::string> free_point_names() const;

  // Same construction with another thesis (used by discovery).
  Construction with_thesis(const Predicate& p) const;
};

// Parses the line-oriented .geo format; well-formedness (references,
// duplicates, thesis presence, arities) is fully decided here.
Construction parse_construction(const std::string& source);

// Parses the canonical polynomial text form: +, -, *, ^, parentheses,
// integer or p/q literals, names resolved in `table` (aliases too).
Polynomial parse_polynomial(const std::string& source, const VariableTablePtr& table);

}  // namespace geoprove
