// Turns a Construction into a PolySystem: coordinate variables, hypothesis
// polynomials per step, thesis polynomial, optional specialization.
#pragma once

#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "geoprove/dsl.hpp"
#include "geoprove/polynomial.hpp"

namespace geoprove {

struct Hypothesis {
  std::string name;    // H1, H2, ...
  std::string source;  // the construction step it came from
  Polynomial poly;
};

// A line as (base point, direction vector), both componentwise polynomials
// in the coordinate variables. Membership of X is det(X - base, dir) = 0.
struct LineRep {
  std::array<Polynomial, 2> base;
  std::array<Polynomial, 2> dir;
};

struct PolySystem {
  VariableTablePtr table;
  Construction construction;
  Encoding encoding = Encoding::Direct;

  std::vector<Hypothesis> hypotheses;
  Polynomial thesis;
  std::string thesis_text;

  std::set<std::uint32_t> free_vars;
  std::set<std::uint32_t> dependent_vars;
  // object name -> (x, y) variable indices; includes internal translation
  // auxiliary points
  std::map<std::string, std::pair<std::uint32_t, std::uint32_t>> coordinates;
  std::vector<std::string> free_points;  // declaration order
  std::map<std::string, LineRep> lines;

  // Solved-form definitions of explicitly-constructed coordinates
  // (midpoints, translation auxiliary points), closed over the remaining
  // variables. Used by the triviality check and the witness sampler.
  std::map<std::uint32_t, Polynomial> explicit_defs;

  // free-variable values substituted so far
  std::map<std::uint32_t, Rational> applied_specialization;

  std::vector<Polynomial> hypothesis_polys() const;
  // Thesis with all explicit definitions substituted; the statement is
  // trivial precisely when this is the zero polynomial.
  Polynomial thesis_normal_form() const;
  PolySystem(VariableTablePtr t) : table(std::move(t)), thesis(Polynomial::zero(table)) {}
};

struct Specialization {
  // free point name -> coordinates
  std::vector<std::pair<std::string, std::pair<Rational, Rational>>> assignments;
  bool empty() const { return assignments.empty(); }
};

PolySystem translate(const Construction& c, Encoding encoding);
PolySystem specialize(const PolySystem& sys, const Specialization& s);
Specialization default_specialization(const PolySystem& sys);

// Exact coordinates for every variable of `sys`, produced by replaying the
// construction on random rational free points (numerators and denominators
// bounded by 1000). Entries of `forced` pin individual variables (used to
// sample the specialized variety). Throws DegenerateSample when a sampled
// configuration collapses (parallel lines meeting, zero directions).
std::map<std::uint32_t, Rational> sample_witness(
    const PolySystem& sys, std::mt19937_64& rng,
    const std::map<std::uint32_t, Rational>* forced = nullptr);

}  // namespace geoprove
