#include "tscalc/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <utility>

#include "tscalc/errors.hpp"

namespace tscalc {
namespace {

constexpr const char* kUnionSign = "\xE2\x88\xAA";  // the union symbol in UTF-8

enum class Tok { Number, Ident, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double num = 0.0;
  int line = 1;
  int col = 1;
  std::size_t begin = 0;
  std::size_t end = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto push = [&](Tok k, std::size_t b, std::size_t e, int l, int c, double num = 0.0) {
    out.push_back(Token{k, src.substr(b, e - b), num, l, c, b, e});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    int l = line;
    int cl = col;
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < src.size() &&
        static_cast<unsigned char>(src[i + 1]) == 0x88 &&
        static_cast<unsigned char>(src[i + 2]) == 0xAA) {
      push(Tok::Sym, i, i + 3, l, cl);
      i += 3;
      ++col;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      std::size_t b = i;
      while (i < src.size() && is_digit(src[i])) {
        ++i;
        ++col;
      }
      if (i < src.size() && src[i] == '.') {
        ++i;
        ++col;
        while (i < src.size() && is_digit(src[i])) {
          ++i;
          ++col;
        }
      }
      // An exponent is consumed only when a digit provably follows, so a
      // trailing 'e' stays a separate token (the Euler constant).
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && is_digit(src[j])) {
          col += static_cast<int>(j + 1 - i);
          i = j + 1;
          while (i < src.size() && is_digit(src[i])) {
            ++i;
            ++col;
          }
        }
      }
      std::string text = src.substr(b, i - b);
      push(Tok::Number, b, i, l, cl, std::strtod(text.c_str(), nullptr));
      continue;
    }
    if (ident_start(c)) {
      std::size_t b = i;
      while (i < src.size() && ident_char(src[i])) {
        ++i;
        ++col;
      }
      push(Tok::Ident, b, i, l, cl);
      continue;
    }
    if ((c == '=' || c == '<' || c == '>') && i + 1 < src.size() && src[i + 1] == '=') {
      push(Tok::Sym, i, i + 2, l, cl);
      i += 2;
      col += 2;
      continue;
    }
    if (c == '=') {
      throw ParseError("expected '==' for an equality test", l, cl, "=");
    }
    if (std::strchr("()[],;:<>+-*/^", c) != nullptr) {
      push(Tok::Sym, i, i + 1, l, cl);
      ++i;
      ++col;
      continue;
    }
    throw ParseError("unexpected character", l, cl, std::string(1, c));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  end.begin = src.size();
  end.end = src.size();
  out.push_back(std::move(end));
  return out;
}

const char* term_kind_name(ScaleTerm::Kind k) {
  switch (k) {
    case ScaleTerm::Kind::Interval:
      return "interval";
    case ScaleTerm::Kind::Points:
      return "points";
    case ScaleTerm::Kind::HGrid:
      return "hgrid";
    case ScaleTerm::Kind::Geom:
      return "geom";
  }
  return "?";
}

std::vector<ScaleComponent> term_components(const ScaleTerm& t) {
  switch (t.kind) {
    case ScaleTerm::Kind::Interval: {
      double a = t.args[0].value;
      double b = t.args[1].value;
      if (!(a < b)) {
        throw ParseError("interval needs start < end", t.line, t.column, "interval");
      }
      return {ContinuumSegment{a, b}};
    }
    case ScaleTerm::Kind::Points: {
      std::vector<double> pts;
      pts.reserve(t.args.size());
      for (const ScaleNum& n : t.args) pts.push_back(n.value);
      return {DiscretePoints{std::move(pts)}};
    }
    case ScaleTerm::Kind::HGrid: {
      try {
        return TimeScale::hgrid(t.args[0].value, t.args[1].value, t.args[2].value).components();
      } catch (const ScaleError& e) {
        throw ParseError(e.what(), t.line, t.column, "hgrid");
      }
    }
    case ScaleTerm::Kind::Geom: {
      try {
        return TimeScale::geom(t.args[0].value, t.args[1].value, t.args[2].value).components();
      } catch (const ScaleError& e) {
        throw ParseError(e.what(), t.line, t.column, "geom");
      }
    }
  }
  throw ParseError("unknown scale term", t.line, t.column, "");
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src), toks_(lex(src)) {}

  ScaleSpec scale() {
    ScaleSpec spec;
    spec.terms.push_back(scale_term());
    while (at_ident("u") || at_sym(kUnionSign)) {
      get();
      spec.terms.push_back(scale_term());
    }
    expect_end();
    // Validate incrementally so a conflict is pinned on the term that
    // introduces it.
    std::vector<ScaleComponent> comps;
    for (const ScaleTerm& t : spec.terms) {
      std::vector<ScaleComponent> piece = term_components(t);
      comps.insert(comps.end(), piece.begin(), piece.end());
      try {
        TimeScale probe(comps);
        (void)probe;
      } catch (const ScaleError& e) {
        throw ParseError(e.what(), t.line, t.column, term_kind_name(t.kind));
      }
    }
    return spec;
  }

  FnSpec fn() {
    FnSpec spec;
    if (at_ident("piece")) {
      spec.pieces.push_back(piece_spec());
      while (at_sym(";")) {
        get();
        spec.pieces.push_back(piece_spec());
      }
    } else {
      PieceSpec ps;
      ps.line = peek().line;
      ps.column = peek().col;
      ps.explicit_cond = false;
      ps.cond = Condition::everywhere();
      ps.pair = pair_spec();
      spec.pieces.push_back(std::move(ps));
    }
    expect_end();
    return spec;
  }

  RealExpr expr_only() {
    RealExpr e = expression();
    expect_end();
    return e;
  }

 private:
  const std::string& src_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;

  const Token& peek() const { return toks_[i_]; }
  const Token& get() {
    const Token& t = toks_[i_];
    if (t.kind != Tok::End) ++i_;
    return t;
  }
  bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
  void expect_sym(const char* s, const char* what) {
    if (!at_sym(s)) fail(peek(), std::string("expected '") + s + "' " + what);
    get();
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail(peek(), "unexpected trailing input");
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(msg, t.line, t.col, t.kind == Tok::End ? "end of input" : t.text);
  }

  std::size_t prev_end() const { return i_ > 0 ? toks_[i_ - 1].end : 0; }
  std::string slice(std::size_t b, std::size_t e) const {
    return e > b ? src_.substr(b, e - b) : std::string();
  }

  // ---- numbers shared by scale terms and conditions -----------------------

  ScaleNum scale_num() {
    std::string text;
    double sign = 1.0;
    if (at_sym("-")) {
      get();
      text += "-";
      sign = -1.0;
    } else if (at_sym("+")) {
      get();
    }
    if (peek().kind != Tok::Number) fail(peek(), "expected a number");
    Token num = get();
    text += num.text;
    double value = sign * num.num;
    if (at_sym("/")) {
      get();
      if (peek().kind != Tok::Number) fail(peek(), "expected a denominator");
      Token den = get();
      if (den.num == 0.0) fail(den, "zero denominator");
      text += "/" + den.text;
      value = sign * num.num / den.num;
    }
    return ScaleNum{value, text};
  }

  // ---- scales --------------------------------------------------------------

  ScaleTerm scale_term() {
    if (peek().kind != Tok::Ident) {
      fail(peek(), "expected a scale term (interval, points, hgrid, geom)");
    }
    Token name = get();
    ScaleTerm term;
    term.line = name.line;
    term.column = name.col;
    std::size_t min_args = 0;
    std::size_t max_args = 0;
    if (name.text == "interval") {
      term.kind = ScaleTerm::Kind::Interval;
      min_args = max_args = 2;
    } else if (name.text == "points") {
      term.kind = ScaleTerm::Kind::Points;
      min_args = 1;
      max_args = std::numeric_limits<std::size_t>::max();
    } else if (name.text == "hgrid") {
      term.kind = ScaleTerm::Kind::HGrid;
      min_args = max_args = 3;
    } else if (name.text == "geom") {
      term.kind = ScaleTerm::Kind::Geom;
      min_args = max_args = 3;
    } else {
      fail(name, "unknown scale term");
    }
    expect_sym("(", "after the term name");
    term.args.push_back(scale_num());
    while (at_sym(",")) {
      get();
      term.args.push_back(scale_num());
    }
    expect_sym(")", "to close the argument list");
    if (term.args.size() < min_args || term.args.size() > max_args) {
      fail(name, std::string("wrong number of arguments for ") + name.text);
    }
    return term;
  }

  // ---- expressions ----------------------------------------------------------

  RealExpr expression() {
    RealExpr e = addend();
    while (at_sym("+") || at_sym("-")) {
      bool plus = at_sym("+");
      get();
      RealExpr r = addend();
      e = plus ? e + r : e - r;
    }
    return e;
  }

  RealExpr addend() {
    RealExpr e = unary();
    while (at_sym("*") || at_sym("/")) {
      bool times = at_sym("*");
      get();
      RealExpr r = unary();
      e = times ? e * r : e / r;
    }
    return e;
  }

  RealExpr unary() {
    if (at_sym("-")) {
      get();
      return -unary();
    }
    if (at_sym("+")) {
      get();
      return unary();
    }
    return powered();
  }

  RealExpr powered() {
    RealExpr base = primary();
    if (at_sym("^")) {
      get();
      RealExpr ex = unary();  // right-associative; the exponent may be signed
      return pow(base, ex);
    }
    return base;
  }

  RealExpr primary() {
    if (peek().kind == Tok::Number) {
      return RealExpr::constant(get().num);
    }
    if (at_sym("(")) {
      get();
      RealExpr e = expression();
      expect_sym(")", "to close the group");
      return e;
    }
    if (peek().kind == Tok::Ident) {
      Token name = get();
      if (name.text == "t" || name.text == "s") return RealExpr::variable();
      if (name.text == "e") return RealExpr::constant(M_E);
      if (name.text == "pi") return RealExpr::constant(M_PI);
      if (name.text == "sin" || name.text == "cos" || name.text == "exp" ||
          name.text == "log" || name.text == "sqrt" || name.text == "abs") {
        expect_sym("(", "after the function name");
        RealExpr arg = expression();
        expect_sym(")", "to close the call");
        if (name.text == "sin") return sin(arg);
        if (name.text == "cos") return cos(arg);
        if (name.text == "exp") return exp(arg);
        if (name.text == "log") return log(arg);
        if (name.text == "sqrt") return sqrt(arg);
        return abs(arg);
      }
      fail(name, "unknown identifier");
    }
    fail(peek(), "expected an expression");
  }

  // ---- functions ------------------------------------------------------------

  struct ParsedPair {
    RealExpr lo;
    RealExpr hi;
    std::string lo_text;
    std::string hi_text;
    Token lo_tok;
    Token hi_tok;
  };

  ParsedPair bracket_pair() {
    expect_sym("[", "to open the endpoint pair");
    Token lo_tok = peek();
    std::size_t b1 = peek().begin;
    RealExpr lo = expression();
    std::size_t e1 = prev_end();
    expect_sym(",", "between the endpoints");
    Token hi_tok = peek();
    std::size_t b2 = peek().begin;
    RealExpr hi = expression();
    std::size_t e2 = prev_end();
    expect_sym("]", "to close the endpoint pair");
    return ParsedPair{std::move(lo), std::move(hi), slice(b1, e1), slice(b2, e2), lo_tok, hi_tok};
  }

  PairSpec pair_spec() {
    PairSpec p;
    if (at_ident("dirichlet")) {
      get();
      expect_sym("(", "after 'dirichlet'");
      ParsedPair first = bracket_pair();
      expect_sym(",", "between the dirichlet branches");
      ParsedPair second = bracket_pair();
      expect_sym(")", "to close 'dirichlet'");
      if (!first.lo.is_constant()) fail(first.lo_tok, "dirichlet endpoints must be constants");
      if (!first.hi.is_constant()) fail(first.hi_tok, "dirichlet endpoints must be constants");
      if (!second.lo.is_constant()) fail(second.lo_tok, "dirichlet endpoints must be constants");
      if (!second.hi.is_constant()) fail(second.hi_tok, "dirichlet endpoints must be constants");
      p.dirichlet = true;
      p.lower = first.lo;
      p.upper = first.hi;
      p.lower2 = second.lo;
      p.upper2 = second.hi;
      p.lower_text = first.lo_text;
      p.upper_text = first.hi_text;
      p.lower2_text = second.lo_text;
      p.upper2_text = second.hi_text;
      return p;
    }
    ParsedPair pair = bracket_pair();
    p.lower = pair.lo;
    p.upper = pair.hi;
    p.lower_text = pair.lo_text;
    p.upper_text = pair.hi_text;
    return p;
  }

  // ---- conditions -----------------------------------------------------------

  struct Operand {
    bool is_var;
    double value;
    Token tok;
  };

  Operand cond_operand() {
    if (peek().kind == Tok::Ident && (peek().text == "t" || peek().text == "s")) {
      Token tk = get();
      return Operand{true, 0.0, tk};
    }
    Token first = peek();
    ScaleNum n = scale_num();
    return Operand{false, n.value, first};
  }

  bool at_cmp() const {
    return at_sym("<") || at_sym("<=") || at_sym(">") || at_sym(">=") || at_sym("==");
  }

  void merge_bound(Condition& c, bool is_lower, double v, bool strict, const Token& where) {
    auto& slot = is_lower ? c.lower : c.upper;
    if (slot) fail(where, is_lower ? "duplicate lower bound" : "duplicate upper bound");
    slot = Condition::Bound{v, strict};
  }

  void apply_cmp(Condition& c, const Operand& lhs, const std::string& op, const Operand& rhs,
                 const Token& where) {
    if (lhs.is_var == rhs.is_var) fail(where, "comparison must relate t to a number");
    if (op == "==") {
      if (c.eq) fail(where, "duplicate equality constraint");
      c.eq = lhs.is_var ? rhs.value : lhs.value;
      return;
    }
    bool lt = op == "<" || op == "<=";
    bool strict = op == "<" || op == ">";
    if (lhs.is_var) {
      merge_bound(c, !lt, rhs.value, strict, where);  // t < v bounds above, t > v below
    } else {
      merge_bound(c, lt, lhs.value, strict, where);  // v < t bounds below, v > t above
    }
  }

  Condition cond_spec() {
    Condition c;
    while (true) {
      if (at_ident("in_geom") || at_ident("in_grid")) {
        Token name = get();
        expect_sym("(", "after the membership test");
        ScaleNum n = scale_num();
        expect_sym(")", "to close the membership test");
        if (name.text == "in_geom") {
          if (c.geom_ratio) fail(name, "duplicate in_geom constraint");
          if (!(n.value > 1.0)) fail(name, "in_geom ratio must exceed 1");
          c.geom_ratio = n.value;
        } else {
          if (c.grid_step) fail(name, "duplicate in_grid constraint");
          if (!(n.value > 0.0)) fail(name, "in_grid step must be positive");
          c.grid_step = n.value;
        }
      } else {
        Operand prev = cond_operand();
        if (!at_cmp()) fail(peek(), "expected a comparison");
        int ops = 0;
        while (at_cmp()) {
          if (++ops > 2) fail(peek(), "comparison chain too long");
          Token op = get();
          Operand next = cond_operand();
          apply_cmp(c, prev, op.text, next, op);
          prev = next;
        }
      }
      if (at_ident("and")) {
        get();
        continue;
      }
      break;
    }
    return c;
  }

  PieceSpec piece_spec() {
    if (!at_ident("piece")) fail(peek(), "expected 'piece'");
    Token name = get();
    PieceSpec ps;
    ps.line = name.line;
    ps.column = name.col;
    ps.explicit_cond = true;
    expect_sym("(", "after 'piece'");
    std::size_t cb = peek().begin;
    ps.cond = cond_spec();
    std::size_t ce = prev_end();
    ps.cond_text = slice(cb, ce);
    expect_sym(":", "between the condition and the pair");
    ps.pair = pair_spec();
    expect_sym(")", "to close the piece");
    return ps;
  }
};

std::string emit_pair(const PairSpec& p) {
  if (p.dirichlet) {
    return "dirichlet([" + p.lower_text + ", " + p.upper_text + "], [" + p.lower2_text + ", " +
           p.upper2_text + "])";
  }
  return "[" + p.lower_text + ", " + p.upper_text + "]";
}

}  // namespace

ScaleSpec parse_scale(const std::string& text) {
  Parser p(text);
  return p.scale();
}

TimeScale elaborate(const ScaleSpec& spec) {
  if (spec.terms.empty()) throw ParseError("empty scale", 1, 1, "");
  std::vector<ScaleComponent> comps;
  for (const ScaleTerm& t : spec.terms) {
    std::vector<ScaleComponent> piece = term_components(t);
    comps.insert(comps.end(), piece.begin(), piece.end());
  }
  return TimeScale(std::move(comps));
}

std::string emit(const ScaleSpec& spec) {
  std::string out;
  for (std::size_t k = 0; k < spec.terms.size(); ++k) {
    if (k != 0) out += " u ";
    const ScaleTerm& t = spec.terms[k];
    out += term_kind_name(t.kind);
    out += "(";
    for (std::size_t a = 0; a < t.args.size(); ++a) {
      if (a != 0) out += ", ";
      out += t.args[a].text;
    }
    out += ")";
  }
  return out;
}

FnSpec parse_fn(const std::string& text) {
  Parser p(text);
  return p.fn();
}

IntervalFn elaborate(const FnSpec& spec) {
  if (spec.pieces.empty()) throw ParseError("empty function", 1, 1, "");
  std::vector<Piece> pieces;
  pieces.reserve(spec.pieces.size());
  for (const PieceSpec& ps : spec.pieces) {
    Piece p;
    p.cond = ps.cond;
    if (ps.pair.dirichlet) {
      double a1 = ps.pair.lower(0.0);
      double b1 = ps.pair.upper(0.0);
      double a2 = ps.pair.lower2(0.0);
      double b2 = ps.pair.upper2(0.0);
      Interval on(std::min(a1, b1), std::max(a1, b1));
      Interval off(std::min(a2, b2), std::max(a2, b2));
      EnvelopePair hull{std::min(on.lo, off.lo), std::max(on.hi, off.hi)};
      p.lower = RealExpr::constant(on.lo);
      p.upper = RealExpr::constant(on.hi);
      p.continuous = false;
      p.mono_lower = Monotone::Increasing;
      p.mono_upper = Monotone::Increasing;
      p.oracle = [hull](double, double) { return hull; };
    } else {
      p.lower = ps.pair.lower;
      p.upper = ps.pair.upper;
      p.continuous = true;
    }
    pieces.push_back(std::move(p));
  }
  return IntervalFn(std::move(pieces));
}

std::string emit(const FnSpec& spec) {
  if (spec.pieces.size() == 1 && !spec.pieces[0].explicit_cond) {
    return emit_pair(spec.pieces[0].pair);
  }
  std::string out;
  for (std::size_t k = 0; k < spec.pieces.size(); ++k) {
    if (k != 0) out += "; ";
    const PieceSpec& ps = spec.pieces[k];
    out += "piece(";
    out += ps.explicit_cond ? ps.cond_text : ps.cond.str();
    out += " : ";
    out += emit_pair(ps.pair);
    out += ")";
  }
  return out;
}

RealExpr parse_expr(const std::string& text) {
  Parser p(text);
  return p.expr_only();
}

}  // namespace tscalc
