#include "geoprove/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "geoprove/errors.hpp"

namespace geoprove {

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::FreePoint: return "point";
    case StepKind::Midpoint: return "midpoint";
    case StepKind::LineThrough: return "line";
    case StepKind::PerpendicularThrough: return "perpendicular";
    case StepKind::ParallelThrough: return "parallel";
    case StepKind::IntersectLines: return "intersect";
    case StepKind::PointOnLine: return "point_on";
  }
  return "?";
}

std::string to_string(PredicateKind kind) {
  switch (kind) {
    case PredicateKind::Collinear: return "collinear";
    case PredicateKind::EqualLength: return "equal_length";
    case PredicateKind::Perpendicular: return "perpendicular";
    case PredicateKind::Parallel: return "parallel";
    case PredicateKind::PointOnLine: return "point_on_line";
    case PredicateKind::PointOnCircle: return "point_on_circle";
  }
  return "?";
}

std::optional<PredicateKind> predicate_kind_from_string(const std::string& name) {
  if (name == "collinear") return PredicateKind::Collinear;
  if (name == "equal_length") return PredicateKind::EqualLength;
  if (name == "perpendicular") return PredicateKind::Perpendicular;
  if (name == "parallel") return PredicateKind::Parallel;
  if (name == "point_on_line") return PredicateKind::PointOnLine;
  if (name == "point_on_circle") return PredicateKind::PointOnCircle;
  return std::nullopt;
}

std::string to_string(Encoding e) {
  return e == Encoding::Direct ? "direct" : "translation";
}

Encoding encoding_from_string(const std::string& name) {
  if (name == "direct") return Encoding::Direct;
  if (name == "translation") return Encoding::Translation;
  throw std::invalid_argument("unknown encoding '" + name + "'");
}

std::string Predicate::to_string() const {
  std::string out = geoprove::to_string(kind) + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i];
  }
  return out + ")";
}

bool Construction::is_point(const std::string& name) const {
  const Step* s = find(name);
  if (!s) return false;
  switch (s->kind) {
    case StepKind::FreePoint:
    case StepKind::Midpoint:
    case StepKind::IntersectLines:
    case StepKind::PointOnLine:
      return true;
    default:
      return false;
  }
}

bool Construction::is_line(const std::string& name) const {
  const Step* s = find(name);
  if (!s) return false;
  switch (s->kind) {
    case StepKind::LineThrough:
    case StepKind::PerpendicularThrough:
    case StepKind::ParallelThrough:
      return true;
    default:
      return false;
  }
}

const Step* Construction::find(const std::string& name) const {
  for (const auto& s : steps)
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<std::string> Construction::point_names() const {
  std::vector<std::string> out;
  for (const auto& s : steps)
    if (is_point(s.name)) out.push_back(s.name);
  return out;
}

std::vector<std::string> Construction::line_names() const {
  std::vector<std::string> out;
  for (const auto& s : steps)
    if (is_line(s.name)) out.push_back(s.name);
  return out;
}

std::vector<std::string> Construction::free_point_names() const {
  std::vector<std::string> out;
  for (const auto& s : steps)
    if (s.kind == StepKind::FreePoint) out.push_back(s.name);
  return out;
}

Construction Construction::with_thesis(const Predicate& p) const {
  Construction out = *this;
  out.thesis = p;
  return out;
}

// ---------------------------------------------------------------------------
// .geo parser

namespace {

struct Cursor {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= src.size(); }
  char peek() const { return done() ? '\0' : src[pos]; }
  char take() {
    char c = src[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_blanks_and_comments(bool stop_at_newline) {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') take();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        take();
      } else if (c == '\n' && !stop_at_newline) {
        take();
      } else {
        break;
      }
    }
  }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_ident(Cursor& cur) {
  cur.skip_blanks_and_comments(true);
  if (!ident_start(cur.peek()))
    throw SyntaxError(cur.line, cur.col, "expected an identifier");
  std::string out;
  while (!cur.done() && ident_char(cur.peek())) out += cur.take();
  return out;
}

void expect_char(Cursor& cur, char c) {
  cur.skip_blanks_and_comments(true);
  if (cur.peek() != c)
    throw SyntaxError(cur.line, cur.col, std::string("expected '") + c + "'");
  cur.take();
}

std::vector<std::string> read_args(Cursor& cur) {
  expect_char(cur, '(');
  std::vector<std::string> args;
  cur.skip_blanks_and_comments(true);
  if (cur.peek() == ')') {
    cur.take();
    return args;
  }
  for (;;) {
    args.push_back(read_ident(cur));
    cur.skip_blanks_and_comments(true);
    if (cur.peek() == ',') {
      cur.take();
      continue;
    }
    expect_char(cur, ')');
    return args;
  }
}

void end_statement(Cursor& cur) {
  cur.skip_blanks_and_comments(true);
  if (cur.done()) return;
  char c = cur.peek();
  if (c == '\n' || c == ';') {
    cur.take();
    return;
  }
  throw SyntaxError(cur.line, cur.col, "expected end of statement (';' or newline)");
}

struct Checker {
  const std::vector<Step>& steps;

  const Step* lookup(const std::string& name) const {
    for (const auto& s : steps)
      if (s.name == name) return &s;
    return nullptr;
  }
  bool is_point(const Step& s) const {
    return s.kind == StepKind::FreePoint || s.kind == StepKind::Midpoint ||
           s.kind == StepKind::IntersectLines || s.kind == StepKind::PointOnLine;
  }
  void require(const std::string& name, bool want_point, int line) const {
    const Step* s = lookup(name);
    if (!s) throw UnknownReferenceError(name, line);
    if (is_point(*s) != want_point)
      throw SyntaxError(line, 1, "'" + name + "' is a " +
                                     (is_point(*s) ? "point" : "line") + ", expected a " +
                                     (want_point ? "point" : "line"));
  }
};

}  // namespace

Construction parse_construction(const std::string& source) {
  Cursor cur{source};
  Construction out;
  std::optional<Predicate> thesis;
  bool free_point_seen = false;

  auto check_new_name = [&](const std::string& name, int line) {
    for (const auto& s : out.steps)
      if (s.name == name) throw DuplicateNameError(name, line);
  };

  for (;;) {
    cur.skip_blanks_and_comments(false);
    if (cur.done()) break;
    int line = cur.line;
    if (cur.peek() == ';') {  // stray separator
      cur.take();
      continue;
    }
    std::string head = read_ident(cur);

    if (head == "point") {
      std::string name = read_ident(cur);
      check_new_name(name, line);
      out.steps.push_back(Step{StepKind::FreePoint, name, {}, line});
      free_point_seen = true;
      end_statement(cur);
      continue;
    }
    if (head == "encoding") {
      std::string which = read_ident(cur);
      if (which != "direct" && which != "translation")
        throw SyntaxError(line, cur.col, "expected 'direct' or 'translation'");
      out.encoding = encoding_from_string(which);
      end_statement(cur);
      continue;
    }
    if (head == "thesis") {
      if (thesis) throw SyntaxError(line, cur.col, "duplicate thesis");
      std::string pred_name = read_ident(cur);
      auto kind = predicate_kind_from_string(pred_name);
      if (!kind)
        throw SyntaxError(line, cur.col, "unknown predicate '" + pred_name + "'");
      auto args = read_args(cur);
      Checker check{out.steps};
      switch (*kind) {
        case PredicateKind::Collinear:
          if (args.size() != 3) throw SyntaxError(line, cur.col, "collinear takes 3 points");
          for (const auto& a : args) check.require(a, true, line);
          break;
        case PredicateKind::EqualLength:
          if (args.size() != 4)
            throw SyntaxError(line, cur.col, "equal_length takes 4 points");
          for (const auto& a : args) check.require(a, true, line);
          break;
        case PredicateKind::Perpendicular:
        case PredicateKind::Parallel:
          if (args.size() != 2) throw SyntaxError(line, cur.col, "predicate takes 2 lines");
          for (const auto& a : args) check.require(a, false, line);
          break;
        case PredicateKind::PointOnLine:
          if (args.size() != 2)
            throw SyntaxError(line, cur.col, "point_on_line takes a point and a line");
          check.require(args[0], true, line);
          check.require(args[1], false, line);
          break;
        case PredicateKind::PointOnCircle:
          if (args.size() != 3)
            throw SyntaxError(line, cur.col,
                              "point_on_circle takes point, center, through-point");
          for (const auto& a : args) check.require(a, true, line);
          break;
      }
      thesis = Predicate{*kind, args, line};
      end_statement(cur);
      continue;
    }

    // NAME = function(args)
    expect_char(cur, '=');
    std::string func = read_ident(cur);
    auto args = read_args(cur);
    check_new_name(head, line);
    Checker check{out.steps};

    StepKind kind;
    if (func == "midpoint") {
      kind = StepKind::Midpoint;
      if (args.size() != 2) throw SyntaxError(line, cur.col, "midpoint takes 2 points");
      for (const auto& a : args) check.require(a, true, line);
    } else if (func == "line") {
      kind = StepKind::LineThrough;
      if (args.size() != 2) throw SyntaxError(line, cur.col, "line takes 2 points");
      for (const auto& a : args) check.require(a, true, line);
    } else if (func == "perpendicular") {
      kind = StepKind::PerpendicularThrough;
      if (args.size() != 2)
        throw SyntaxError(line, cur.col, "perpendicular takes a point and a line");
      check.require(args[0], true, line);
      check.require(args[1], false, line);
    } else if (func == "parallel") {
      kind = StepKind::ParallelThrough;
      if (args.size() != 2)
        throw SyntaxError(line, cur.col, "parallel takes a point and a line");
      check.require(args[0], true, line);
      check.require(args[1], false, line);
    } else if (func == "intersect") {
      kind = StepKind::IntersectLines;
      if (args.size() != 2) throw SyntaxError(line, cur.col, "intersect takes 2 lines");
      for (const auto& a : args) check.require(a, false, line);
    } else if (func == "point_on") {
      kind = StepKind::PointOnLine;
      if (args.size() != 1) throw SyntaxError(line, cur.col, "point_on takes 1 line");
      check.require(args[0], false, line);
    } else {
      throw SyntaxError(line, cur.col, "unknown construction '" + func + "'");
    }
    out.steps.push_back(Step{kind, head, args, line});
    end_statement(cur);
  }

  if (!thesis) throw MissingThesisError();
  if (!free_point_seen)
    throw SyntaxError(cur.line, cur.col, "construction has no free point");
  out.thesis = *thesis;
  return out;
}

// ---------------------------------------------------------------------------
// polynomial expression parser

namespace {

constexpr std::uint32_t kMaxExponent = 4096;

struct PolyParser {
  Cursor cur;
  const VariableTablePtr& table;

  void skip() { cur.skip_blanks_and_comments(false); }

  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(cur.line, cur.col, what);
  }

  std::string read_number() {
    std::string digits;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
      digits += cur.take();
    if (digits.empty()) fail("expected a number");
    return digits;
  }

  std::uint32_t read_exponent() {
    skip();
    std::string digits = read_number();
    if (digits.size() > 6) fail("exponent too large");
    unsigned long e = std::stoul(digits);
    if (e > kMaxExponent) fail("exponent too large");
    return static_cast<std::uint32_t>(e);
  }

  Polynomial parse_atom() {
    skip();
    char c = cur.peek();
    if (c == '(') {
      cur.take();
      Polynomial inner = parse_expr();
      skip();
      if (cur.peek() != ')') fail("expected ')'");
      cur.take();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_number();
      skip();
      if (cur.peek() == '/') {
        cur.take();
        skip();
        std::string den = read_number();
        if (mpz_class(den) == 0) fail("zero denominator");
        return Polynomial::constant(table, Rational::from_string(num + "/" + den));
      }
      return Polynomial::constant(table, Rational::from_string(num));
    }
    if (ident_start(c)) {
      std::string name;
      while (!cur.done() && ident_char(cur.peek())) name += cur.take();
      auto idx = table->find(name);
      if (!idx) throw UnknownVariableError(name);
      return Polynomial::variable(table, *idx);
    }
    fail("expected a number, variable, or '('");
  }

  Polynomial parse_factor() {
    skip();
    if (cur.peek() == '-') {
      cur.take();
      return -parse_factor();
    }
    Polynomial base = parse_atom();
    skip();
    if (cur.peek() == '^') {
      cur.take();
      std::uint32_t e = read_exponent();
      return base.pow(e);
    }
    return base;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      skip();
      if (cur.peek() == '*') {
        cur.take();
        acc = acc * parse_factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_expr() {
    skip();
    bool negate = false;
    if (cur.peek() == '+' || cur.peek() == '-') negate = cur.take() == '-';
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      skip();
      char c = cur.peek();
      if (c == '+' || c == '-') {
        cur.take();
        Polynomial rhs = parse_term();
        acc = (c == '+') ? acc + rhs : acc - rhs;
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& source, const VariableTablePtr& table) {
  if (!table || table->size() == 0)
    throw std::invalid_argument("parse_polynomial: empty variable universe");
  PolyParser parser{Cursor{source}, table};
  Polynomial out = parser.parse_expr();
  parser.skip();
  if (!parser.cur.done())
    throw SyntaxError(parser.cur.line, parser.cur.col, "unexpected trailing input");
  return out;
}

}  // namespace geoprove
