#include "geoprove/algebraize.hpp"

#include <algorithm>
#include <cctype>

#include "geoprove/errors.hpp"

namespace geoprove {

std::vector<Polynomial> PolySystem::hypothesis_polys() const {
  std::vector<Polynomial> out;
  out.reserve(hypotheses.size());
  for (const auto& h : hypotheses) out.push_back(h.poly);
  return out;
}

Polynomial PolySystem::thesis_normal_form() const {
  return thesis.substitute(explicit_defs);
}

namespace {

std::string lowercased(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

struct Translator {
  const Construction& c;
  Encoding encoding;
  std::shared_ptr<VariableTable> table = std::make_shared<VariableTable>();
  PolySystem* sys = nullptr;
  int coord_counter = 0;

  std::pair<std::uint32_t, std::uint32_t> add_point_vars(const std::string& obj) {
    // names like a_1/a_2; fall back to the original case, then an ordinal,
    // when lowercasing collides
    std::string base = lowercased(obj);
    auto free_pair = [&](const std::string& stem) {
      return !table->contains(stem + "_1") && !table->contains(stem + "_2");
    };
    std::string stem = base;
    if (!free_pair(stem)) stem = obj;
    if (!free_pair(stem)) {
      int k = 2;
      while (!free_pair(base + std::to_string(k))) ++k;
      stem = base + std::to_string(k);
    }
    auto alias = [&]() { return "v" + std::to_string(13 + coord_counter++); };
    std::uint32_t x = table->add(stem + "_1", alias());
    std::uint32_t y = table->add(stem + "_2", alias());
    return {x, y};
  }

  Polynomial var(std::uint32_t idx) const { return Polynomial::variable(sys->table, idx); }
  Polynomial constant(long v) const { return Polynomial::constant(sys->table, Rational(v)); }

  std::array<Polynomial, 2> point_coords(const std::string& name) const {
    auto [x, y] = sys->coordinates.at(name);
    return {var(x), var(y)};
  }

  const LineRep& line(const std::string& name) const { return sys->lines.at(name); }

  // det(X - base, dir)
  Polynomial on_line(const std::array<Polynomial, 2>& X, const LineRep& l) const {
    return (X[0] - l.base[0]) * l.dir[1] - (X[1] - l.base[1]) * l.dir[0];
  }

  void add_hypothesis(const Polynomial& p, const Step& step) {
    std::string source = step.name.empty() ? to_string(step.kind) : step.name;
    if (step.kind == StepKind::FreePoint) {
      source = "point " + step.name;
    } else {
      source = step.name + " = " + to_string(step.kind) + "(";
      for (std::size_t i = 0; i < step.args.size(); ++i) {
        if (i) source += ", ";
        source += step.args[i];
      }
      source += ")";
    }
    sys->hypotheses.push_back(
        Hypothesis{"H" + std::to_string(sys->hypotheses.size() + 1), source, p});
  }

  void close_and_record_def(std::uint32_t v, const Polynomial& def) {
    sys->explicit_defs.emplace(v, def.substitute(sys->explicit_defs));
  }

  void run_step(const Step& step) {
    switch (step.kind) {
      case StepKind::FreePoint: {
        auto [x, y] = add_point_vars(step.name);
        sys->coordinates[step.name] = {x, y};
        sys->free_vars.insert(x);
        sys->free_vars.insert(y);
        sys->free_points.push_back(step.name);
        break;
      }
      case StepKind::Midpoint: {
        auto [x, y] = add_point_vars(step.name);
        sys->coordinates[step.name] = {x, y};
        sys->dependent_vars.insert(x);
        sys->dependent_vars.insert(y);
        auto p = point_coords(step.args[0]);
        auto q = point_coords(step.args[1]);
        add_hypothesis(constant(2) * var(x) - p[0] - q[0], step);
        add_hypothesis(constant(2) * var(y) - p[1] - q[1], step);
        Rational half(1, 2);
        close_and_record_def(x, (p[0] + q[0]).scaled(half));
        close_and_record_def(y, (p[1] + q[1]).scaled(half));
        break;
      }
      case StepKind::LineThrough: {
        auto p = point_coords(step.args[0]);
        auto q = point_coords(step.args[1]);
        sys->lines.insert_or_assign(step.name, LineRep{{p[0], p[1]}, {q[0] - p[0], q[1] - p[1]}});
        break;
      }
      case StepKind::PerpendicularThrough: {
        auto v = point_coords(step.args[0]);
        const LineRep& m = line(step.args[1]);
        // rot90(u) = (-u2, u1): det-membership against the rotated
        // direction is exactly the dot product with dir(m)
        std::array<Polynomial, 2> normal = {-m.dir[1], m.dir[0]};
        if (encoding == Encoding::Direct) {
          sys->lines.insert_or_assign(step.name, LineRep{{v[0], v[1]}, normal});
        } else {
          // the translated auxiliary point V + rot90(dir(m)), with its
          // two linear defining equations (y-coordinate first)
          auto [x, y] = add_point_vars(step.name);
          sys->coordinates[step.name] = {x, y};
          sys->dependent_vars.insert(x);
          sys->dependent_vars.insert(y);
          add_hypothesis(-var(y) + v[1] + m.dir[0], step);
          add_hypothesis(-var(x) + v[0] - m.dir[1], step);
          close_and_record_def(x, v[0] - m.dir[1]);
          close_and_record_def(y, v[1] + m.dir[0]);
          sys->lines.insert_or_assign(step.name, LineRep{{v[0], v[1]}, {var(x) - v[0], var(y) - v[1]}});
        }
        break;
      }
      case StepKind::ParallelThrough: {
        auto v = point_coords(step.args[0]);
        const LineRep& m = line(step.args[1]);
        sys->lines.insert_or_assign(step.name, LineRep{{v[0], v[1]}, m.dir});
        break;
      }
      case StepKind::IntersectLines: {
        auto [x, y] = add_point_vars(step.name);
        sys->coordinates[step.name] = {x, y};
        sys->dependent_vars.insert(x);
        sys->dependent_vars.insert(y);
        std::array<Polynomial, 2> X = {var(x), var(y)};
        add_hypothesis(on_line(X, line(step.args[0])), step);
        add_hypothesis(on_line(X, line(step.args[1])), step);
        break;
      }
      case StepKind::PointOnLine: {
        auto [x, y] = add_point_vars(step.name);
        sys->coordinates[step.name] = {x, y};
        sys->dependent_vars.insert(x);
        sys->dependent_vars.insert(y);
        std::array<Polynomial, 2> X = {var(x), var(y)};
        add_hypothesis(on_line(X, line(step.args[0])), step);
        break;
      }
    }
  }

  Polynomial squared_distance(const std::string& a, const std::string& b) {
    auto p = point_coords(a);
    auto q = point_coords(b);
    return (q[0] - p[0]) * (q[0] - p[0]) + (q[1] - p[1]) * (q[1] - p[1]);
  }

  Polynomial thesis_poly(const Predicate& pred) {
    switch (pred.kind) {
      case PredicateKind::Collinear: {
        auto p = point_coords(pred.args[0]);
        auto q = point_coords(pred.args[1]);
        auto r = point_coords(pred.args[2]);
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
      }
      case PredicateKind::EqualLength:
        return squared_distance(pred.args[0], pred.args[1]) -
               squared_distance(pred.args[2], pred.args[3]);
      case PredicateKind::Perpendicular: {
        const LineRep& l = line(pred.args[0]);
        const LineRep& m = line(pred.args[1]);
        return l.dir[0] * m.dir[0] + l.dir[1] * m.dir[1];
      }
      case PredicateKind::Parallel: {
        const LineRep& l = line(pred.args[0]);
        const LineRep& m = line(pred.args[1]);
        return l.dir[0] * m.dir[1] - l.dir[1] * m.dir[0];
      }
      case PredicateKind::PointOnLine: {
        auto p = point_coords(pred.args[0]);
        return on_line({p[0], p[1]}, line(pred.args[1]));
      }
      case PredicateKind::PointOnCircle: {
        return squared_distance(pred.args[1], pred.args[0]) -
               squared_distance(pred.args[1], pred.args[2]);
      }
    }
    throw InvalidSystemError("unhandled predicate kind");
  }
};

}  // namespace

PolySystem translate(const Construction& c, Encoding encoding) {
  Translator tr{c, encoding};

  // pass 1: create all variables so the table is complete before any
  // polynomial is built
  PolySystem sys(tr.table);
  tr.sys = &sys;
  // table fills during the step walk; PolySystem holds the same shared table
  for (const auto& step : c.steps) tr.run_step(step);
  sys.thesis = tr.thesis_poly(c.thesis);
  sys.thesis_text = c.thesis.to_string();
  sys.construction = c;
  sys.encoding = encoding;
  return sys;
}

PolySystem specialize(const PolySystem& sys, const Specialization& s) {
  if (s.empty()) return sys;
  std::map<std::uint32_t, Rational> values;
  for (const auto& [name, coords] : s.assignments) {
    auto it = sys.coordinates.find(name);
    if (it == sys.coordinates.end()) throw NotAFreeVariableError(name + " (unknown point)");
    auto [x, y] = it->second;
    if (!sys.free_vars.count(x) || !sys.free_vars.count(y))
      throw NotAFreeVariableError(name);
    values[x] = coords.first;
    values[y] = coords.second;
  }

  PolySystem out = sys;
  for (auto& h : out.hypotheses) {
    h.poly = h.poly.substitute_values(values);
    if (!h.poly.is_zero()) h.poly = h.poly.normalized();
  }
  out.thesis = out.thesis.substitute_values(values);
  if (!out.thesis.is_zero()) out.thesis = out.thesis.normalized();
  for (auto& [v, def] : out.explicit_defs) def = def.substitute_values(values);
  for (auto& [name, rep] : out.lines) {
    for (auto& p : rep.base) p = p.substitute_values(values);
    for (auto& p : rep.dir) p = p.substitute_values(values);
  }
  for (const auto& [v, value] : values) {
    out.free_vars.erase(v);
    out.applied_specialization[v] = value;
  }
  return out;
}

Specialization default_specialization(const PolySystem& sys) {
  std::vector<std::string> available;
  for (const auto& name : sys.free_points) {
    auto [x, y] = sys.coordinates.at(name);
    if (sys.free_vars.count(x) && sys.free_vars.count(y)) available.push_back(name);
  }
  if (available.size() < 2) throw NotEnoughFreePointsError(available.size());
  Specialization s;
  s.assignments.push_back({available[0], {Rational(0), Rational(0)}});
  s.assignments.push_back({available[1], {Rational(0), Rational(1)}});
  return s;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  return Rational(num(rng), den(rng));
}

Rational eval_at(const Polynomial& p, const std::map<std::uint32_t, Rational>& values) {
  return p.evaluate(values);
}

}  // namespace

std::map<std::uint32_t, Rational> sample_witness(
    const PolySystem& sys, std::mt19937_64& rng,
    const std::map<std::uint32_t, Rational>* forced) {
  std::map<std::uint32_t, Rational> values;
  auto pick = [&](std::uint32_t v) {
    if (forced) {
      auto it = forced->find(v);
      if (it != forced->end()) return it->second;
    }
    return random_rational(rng);
  };

  // line as two evaluated rows a*x1 + b*x2 = c
  auto line_row = [&](const LineRep& rep) {
    Rational b1 = eval_at(rep.base[0], values), b2 = eval_at(rep.base[1], values);
    Rational d1 = eval_at(rep.dir[0], values), d2 = eval_at(rep.dir[1], values);
    // det(X - base, dir) = 0  <=>  d2*x1 - d1*x2 = d2*b1 - d1*b2
    struct Row { Rational a, b, c, d1, d2, b1, b2; };
    return Row{d2, -d1, d2 * b1 - d1 * b2, d1, d2, b1, b2};
  };

  for (const auto& step : sys.construction.steps) {
    switch (step.kind) {
      case StepKind::FreePoint: {
        auto [x, y] = sys.coordinates.at(step.name);
        values[x] = pick(x);
        values[y] = pick(y);
        break;
      }
      case StepKind::Midpoint: {
        auto [x, y] = sys.coordinates.at(step.name);
        values[x] = eval_at(sys.explicit_defs.at(x), values);
        values[y] = eval_at(sys.explicit_defs.at(y), values);
        break;
      }
      case StepKind::PerpendicularThrough: {
        if (sys.encoding == Encoding::Translation) {
          auto [x, y] = sys.coordinates.at(step.name);
          values[x] = eval_at(sys.explicit_defs.at(x), values);
          values[y] = eval_at(sys.explicit_defs.at(y), values);
        }
        break;
      }
      case StepKind::LineThrough:
      case StepKind::ParallelThrough:
        break;
      case StepKind::IntersectLines: {
        auto r1 = line_row(sys.lines.at(step.args[0]));
        auto r2 = line_row(sys.lines.at(step.args[1]));
        Rational det = r1.a * r2.b - r2.a * r1.b;
        if (det.is_zero())
          throw DegenerateSampleError("lines " + step.args[0] + " and " + step.args[1] +
                                      " do not meet in one point for this sample");
        auto [x, y] = sys.coordinates.at(step.name);
        values[x] = (r1.c * r2.b - r2.c * r1.b) / det;
        values[y] = (r1.a * r2.c - r2.a * r1.c) / det;
        break;
      }
      case StepKind::PointOnLine: {
        auto row = line_row(sys.lines.at(step.args[0]));
        if (row.d1.is_zero() && row.d2.is_zero())
          throw DegenerateSampleError("line " + step.args[0] +
                                      " has zero direction for this sample");
        Rational lambda = random_rational(rng);
        auto [x, y] = sys.coordinates.at(step.name);
        values[x] = row.b1 + lambda * row.d1;
        values[y] = row.b2 + lambda * row.d2;
        break;
      }
    }
  }
  return values;
}

}  // namespace geoprove
