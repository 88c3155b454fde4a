#include "cleanring/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>

#include "cleanring/ideals.hpp"

namespace cleanring {

std::string to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::lexical:
      return "lexical";
    case ParseErrorKind::syntactic:
      return "syntactic";
    case ParseErrorKind::arity:
      return "arity";
    case ParseErrorKind::size_cap:
      return "size-cap";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : Error(std::move(message)), kind_(kind), line_(line), column_(column), expected_(std::move(expected)) {}

std::string ParseError::diagnostic() const {
  std::string s = to_string(kind_) + " error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " +
                  what();
  if (!expected_.empty()) {
    s += " (expected ";
    for (std::size_t i = 0; i < expected_.size(); ++i) s += (i ? ", " : "") + expected_[i];
    s += ")";
  }
  return s;
}

namespace {

struct Token {
  enum class Kind { open, close, symbol, number, end };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view in) : in_(in) {}

  Token next() {
    skip_space();
    const std::size_t line = line_, col = col_;
    if (pos_ >= in_.size()) return {Token::Kind::end, "", line, col};
    const char c = in_[pos_];
    if (c == '(' || c == ')') {
      advance();
      return {c == '(' ? Token::Kind::open : Token::Kind::close, std::string(1, c), line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') return number(line, col);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < in_.size() && symbol_char(in_[pos_])) s += advance();
      return {Token::Kind::symbol, s, line, col};
    }
    throw ParseError(ParseErrorKind::lexical, line, col, std::string("unexpected character '") + c + "'");
  }

 private:
  static bool symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
  }

  Token number(std::size_t line, std::size_t col) {
    std::string s;
    if (in_[pos_] == '-' || in_[pos_] == '+') s += advance();
    auto digits = [&] {
      std::size_t count = 0;
      while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
        s += advance();
        ++count;
      }
      return count;
    };
    bool ok = digits() > 0;
    if (ok && pos_ < in_.size() && in_[pos_] == '/') {
      s += advance();
      ok = digits() > 0;
    }
    if (ok && pos_ < in_.size() && symbol_char(in_[pos_])) {
      while (pos_ < in_.size() && symbol_char(in_[pos_])) s += advance();
      ok = false;
    }
    if (!ok) throw ParseError(ParseErrorKind::lexical, line, col, "malformed number '" + s + "'");
    return {Token::Kind::number, s, line, col};
  }

  void skip_space() {
    while (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (c == ';') {
        while (pos_ < in_.size() && in_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  char advance() {
    const char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

const std::vector<std::string> kInsideList{"')'", "'('", "atom"};

SExpr read_list(Lexer& lex, const Token& open) {
  SExpr list{SExpr::Kind::list, "", {}, open.line, open.column};
  while (true) {
    Token t = lex.next();
    switch (t.kind) {
      case Token::Kind::close:
        return list;
      case Token::Kind::end:
        throw ParseError(ParseErrorKind::syntactic, t.line, t.column, "unexpected end of input", kInsideList);
      case Token::Kind::open:
        list.items.push_back(read_list(lex, t));
        break;
      case Token::Kind::symbol:
        list.items.push_back({SExpr::Kind::symbol, t.text, {}, t.line, t.column});
        break;
      case Token::Kind::number:
        list.items.push_back({SExpr::Kind::number, t.text, {}, t.line, t.column});
        break;
    }
  }
}

[[noreturn]] void syntax(const SExpr& at, const std::string& msg, std::vector<std::string> expected) {
  throw ParseError(ParseErrorKind::syntactic, at.line, at.column, msg, std::move(expected));
}

std::string describe(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::list:
      return "list";
    case SExpr::Kind::symbol:
      return "symbol '" + e.text + "'";
    case SExpr::Kind::number:
      return "number '" + e.text + "'";
  }
  return "?";
}

std::size_t to_size(const SExpr& e) {
  if (e.kind != SExpr::Kind::number || e.text.find_first_not_of("0123456789") != std::string::npos) {
    syntax(e, "expected a non-negative integer, found " + describe(e), {"integer"});
  }
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), v);
  if (ec != std::errc() || ptr != e.text.data() + e.text.size()) syntax(e, "integer out of range", {"integer"});
  return v;
}

const std::vector<std::string> kConstructors{"zn",       "product",  "matrix", "tri2",      "tri3",  "morita",
                                             "idealize", "quotient", "series", "localized", "corner"};

void arity(const SExpr& form, const std::string& head, std::size_t min, std::size_t max) {
  const std::size_t got = form.items.size() - 1;
  if (got >= min && got <= max) return;
  std::string want = min == max ? std::to_string(min)
                     : max == std::numeric_limits<std::size_t>::max() ? "at least " + std::to_string(min)
                                                                       : std::to_string(min) + " or " +
                                                                             std::to_string(max);
  throw ParseError(ParseErrorKind::arity, form.line, form.column,
                   "'" + head + "' takes " + want + " argument" + (want == "1" ? "" : "s") + ", got " +
                       std::to_string(got));
}

ModuleSpec module_from_sexpr(const SExpr& e) {
  if (e.kind == SExpr::Kind::symbol) {
    if (e.text == "regular") return {ModuleSpec::Kind::regular, 0, ""};
    if (e.text == "zero") return {ModuleSpec::Kind::zero, 0, ""};
    return {ModuleSpec::Kind::named, 0, e.text};
  }
  if (e.kind == SExpr::Kind::list && !e.items.empty() && e.items[0].kind == SExpr::Kind::symbol &&
      e.items[0].text == "znmod") {
    arity(e, "znmod", 1, 1);
    return {ModuleSpec::Kind::znmod, to_size(e.items[1]), ""};
  }
  syntax(e, "expected a module, found " + describe(e), {"regular", "zero", "(znmod m)", "module name"});
}

IdealSpec ideal_from_sexpr(const SExpr& e) {
  if (e.kind == SExpr::Kind::symbol && e.text == "radical") return {IdealSpec::Kind::radical, {}};
  if (e.kind == SExpr::Kind::list && !e.items.empty() && e.items[0].kind == SExpr::Kind::symbol &&
      e.items[0].text == "ideal") {
    IdealSpec s;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      if (e.items[i].kind != SExpr::Kind::number) syntax(e.items[i], "expected a generator", {"number"});
      s.generators.push_back(e.items[i].text);
    }
    return s;
  }
  syntax(e, "expected an ideal, found " + describe(e), {"(ideal g ...)", "radical"});
}

std::string print(const IdealSpec& s) {
  if (s.kind == IdealSpec::Kind::radical) return "radical";
  std::string out = "(ideal";
  for (const auto& g : s.generators) out += " " + g;
  return out + ")";
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view input) {
  Lexer lex(input);
  std::vector<SExpr> forms;
  while (true) {
    Token t = lex.next();
    switch (t.kind) {
      case Token::Kind::end:
        return forms;
      case Token::Kind::close:
        throw ParseError(ParseErrorKind::syntactic, t.line, t.column, "unexpected ')'",
                         {"'('", "atom", "end of input"});
      case Token::Kind::open:
        forms.push_back(read_list(lex, t));
        break;
      case Token::Kind::symbol:
        forms.push_back({SExpr::Kind::symbol, t.text, {}, t.line, t.column});
        break;
      case Token::Kind::number:
        forms.push_back({SExpr::Kind::number, t.text, {}, t.line, t.column});
        break;
    }
  }
}

RingSpec ring_spec_from_sexpr(const SExpr& e) {
  RingSpec s;
  if (e.kind == SExpr::Kind::symbol) {
    s.kind = RingSpec::Kind::named;
    s.name = e.text;
    return s;
  }
  if (e.kind == SExpr::Kind::number) syntax(e, "expected a ring expression, found " + describe(e), {"'('", "ring name"});
  if (e.items.empty()) syntax(e, "empty form", kConstructors);
  const SExpr& head = e.items[0];
  if (head.kind != SExpr::Kind::symbol) syntax(head, "expected a constructor, found " + describe(head), kConstructors);
  const std::string& h = head.text;
  const std::size_t many = std::numeric_limits<std::size_t>::max();
  auto ring_at = [&](std::size_t i) { return ring_spec_from_sexpr(e.items[i]); };
  if (h == "zn") {
    arity(e, h, 1, 1);
    s.kind = RingSpec::Kind::zn;
    s.numbers = {to_size(e.items[1])};
  } else if (h == "product") {
    arity(e, h, 1, many);
    s.kind = RingSpec::Kind::product;
    for (std::size_t i = 1; i < e.items.size(); ++i) s.rings.push_back(ring_at(i));
  } else if (h == "matrix") {
    arity(e, h, 2, 2);
    s.kind = RingSpec::Kind::matrix;
    s.numbers = {to_size(e.items[1])};
    s.rings = {ring_at(2)};
  } else if (h == "tri2") {
    arity(e, h, 3, 3);
    s.kind = RingSpec::Kind::tri2;
    s.rings = {ring_at(1), ring_at(2)};
    s.modules = {module_from_sexpr(e.items[3])};
  } else if (h == "tri3") {
    arity(e, h, 6, 7);
    s.kind = RingSpec::Kind::tri3;
    s.rings = {ring_at(1), ring_at(2), ring_at(3)};
    s.modules = {module_from_sexpr(e.items[4]), module_from_sexpr(e.items[5]), module_from_sexpr(e.items[6])};
    if (e.items.size() == 8) {
      const SExpr& p = e.items[7];
      if (p.kind != SExpr::Kind::symbol) syntax(p, "expected a pairing, found " + describe(p), {"zero", "mul", "pairing name"});
      if (p.text != "zero") s.pairing = p.text;
    }
  } else if (h == "morita") {
    arity(e, h, 4, 4);
    s.kind = RingSpec::Kind::morita;
    s.rings = {ring_at(1), ring_at(2)};
    s.modules = {module_from_sexpr(e.items[3]), module_from_sexpr(e.items[4])};
  } else if (h == "idealize") {
    arity(e, h, 2, 2);
    s.kind = RingSpec::Kind::idealize;
    s.rings = {ring_at(1)};
    s.modules = {module_from_sexpr(e.items[2])};
  } else if (h == "quotient") {
    arity(e, h, 2, 2);
    s.kind = RingSpec::Kind::quotient;
    s.rings = {ring_at(1)};
    s.ideal = ideal_from_sexpr(e.items[2]);
  } else if (h == "series") {
    arity(e, h, 2, 2);
    s.kind = RingSpec::Kind::series;
    s.rings = {ring_at(1)};
    s.numbers = {to_size(e.items[2])};
  } else if (h == "localized") {
    arity(e, h, 1, many);
    s.kind = RingSpec::Kind::localized;
    for (std::size_t i = 1; i < e.items.size(); ++i) s.numbers.push_back(to_size(e.items[i]));
  } else if (h == "corner") {
    arity(e, h, 2, 2);
    s.kind = RingSpec::Kind::corner;
    s.rings = {ring_at(1)};
    s.numbers = {to_size(e.items[2])};
  } else {
    syntax(head, "unknown constructor '" + h + "'", kConstructors);
  }
  return s;
}

RingSpec parse_ring_spec(std::string_view input) {
  std::vector<SExpr> forms = read_sexprs(input);
  if (forms.empty()) throw ParseError(ParseErrorKind::syntactic, 1, 1, "empty input", {"'('", "ring name"});
  if (forms.size() > 1) {
    throw ParseError(ParseErrorKind::syntactic, forms[1].line, forms[1].column, "unexpected trailing input",
                     {"end of input"});
  }
  return ring_spec_from_sexpr(forms[0]);
}

std::string print(const ModuleSpec& m) {
  switch (m.kind) {
    case ModuleSpec::Kind::regular:
      return "regular";
    case ModuleSpec::Kind::zero:
      return "zero";
    case ModuleSpec::Kind::znmod:
      return "(znmod " + std::to_string(m.modulus) + ")";
    case ModuleSpec::Kind::named:
      return m.name;
  }
  return "?";
}

std::string print(const RingSpec& s) {
  auto rings = [&] {
    std::string out;
    for (const auto& r : s.rings) out += " " + print(r);
    return out;
  };
  auto modules = [&] {
    std::string out;
    for (const auto& m : s.modules) out += " " + print(m);
    return out;
  };
  auto num = [&](std::size_t i) { return std::to_string(s.numbers.at(i)); };
  switch (s.kind) {
    case RingSpec::Kind::zn:
      return "(zn " + num(0) + ")";
    case RingSpec::Kind::product:
      return "(product" + rings() + ")";
    case RingSpec::Kind::matrix:
      return "(matrix " + num(0) + rings() + ")";
    case RingSpec::Kind::tri2:
    case RingSpec::Kind::morita:
    case RingSpec::Kind::idealize:
      return std::string(s.kind == RingSpec::Kind::tri2     ? "(tri2"
                         : s.kind == RingSpec::Kind::morita ? "(morita"
                                                            : "(idealize") +
             rings() + modules() + ")";
    case RingSpec::Kind::tri3:
      return "(tri3" + rings() + modules() + (s.pairing ? " " + *s.pairing : "") + ")";
    case RingSpec::Kind::quotient:
      return "(quotient" + rings() + " " + print(*s.ideal) + ")";
    case RingSpec::Kind::series:
      return "(series" + rings() + " " + num(0) + ")";
    case RingSpec::Kind::localized: {
      std::string out = "(localized";
      for (std::size_t p : s.numbers) out += " " + std::to_string(p);
      return out + ")";
    }
    case RingSpec::Kind::corner:
      return "(corner" + rings() + " " + num(0) + ")";
    case RingSpec::Kind::named:
      return s.name;
  }
  return "?";
}

namespace {

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t sat_pow(std::size_t a, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = sat_mul(r, a);
  return r;
}

std::size_t module_order(const ModuleSpec& m, std::size_t left, const SpecEnv& env) {
  switch (m.kind) {
    case ModuleSpec::Kind::regular:
      return left;
    case ModuleSpec::Kind::zero:
      return 1;
    case ModuleSpec::Kind::znmod:
      return m.modulus;
    case ModuleSpec::Kind::named: {
      auto it = env.modules.find(m.name);
      if (it == env.modules.end()) throw DomainError("unknown module '" + m.name + "'");
      return it->second.order();
    }
  }
  return 1;
}

std::size_t finite_estimate(const RingSpec& s, const SpecEnv& env) {
  auto sub = [&](std::size_t i) {
    auto o = estimate_order(s.rings.at(i), env);
    if (!o) throw DomainError("a localized ring cannot be a component of " + print(s));
    return *o;
  };
  switch (s.kind) {
    case RingSpec::Kind::zn:
      return s.numbers[0];
    case RingSpec::Kind::product: {
      std::size_t n = 1;
      for (std::size_t i = 0; i < s.rings.size(); ++i) n = sat_mul(n, sub(i));
      return n;
    }
    case RingSpec::Kind::matrix:
      return sat_pow(sub(0), sat_mul(s.numbers[0], s.numbers[0]));
    case RingSpec::Kind::tri2:
      return sat_mul(sat_mul(sub(0), sub(1)), module_order(s.modules[0], sub(1), env));
    case RingSpec::Kind::tri3: {
      std::size_t n = sat_mul(sat_mul(sub(0), sub(1)), sub(2));
      n = sat_mul(n, module_order(s.modules[0], sub(1), env));
      n = sat_mul(n, module_order(s.modules[1], sub(2), env));
      return sat_mul(n, module_order(s.modules[2], sub(2), env));
    }
    case RingSpec::Kind::morita: {
      std::size_t n = sat_mul(sub(0), sub(1));
      n = sat_mul(n, module_order(s.modules[0], sub(0), env));
      return sat_mul(n, module_order(s.modules[1], sub(1), env));
    }
    case RingSpec::Kind::idealize:
      return sat_mul(sub(0), module_order(s.modules[0], sub(0), env));
    case RingSpec::Kind::quotient:
    case RingSpec::Kind::corner:
      return sub(0);
    case RingSpec::Kind::series:
      return sat_pow(sub(0), s.numbers[0]);
    case RingSpec::Kind::named: {
      auto it = env.rings.find(s.name);
      if (it == env.rings.end()) throw DomainError("unknown ring '" + s.name + "'");
      return it->second.order();
    }
    case RingSpec::Kind::localized:
      break;
  }
  return 0;
}

FiniteRing finite(const BuiltRing& b, const std::string& where) {
  if (!b.finite) throw DomainError("a localized ring cannot be used inside " + where);
  return *b.finite;
}

Bimodule make_module(const ModuleSpec& m, const FiniteRing& left, const FiniteRing& right, const SpecEnv& env) {
  switch (m.kind) {
    case ModuleSpec::Kind::regular:
      if (!(left == right)) throw DomainError("'regular' needs equal left and right rings");
      return Bimodule::regular(left);
    case ModuleSpec::Kind::zero:
      return Bimodule::zero(left, right);
    case ModuleSpec::Kind::znmod: {
      if (m.modulus == 0) throw DomainError("znmod needs m >= 1");
      Bimodule b = Bimodule::cyclic(left, right, m.modulus);
      b.require_valid();
      return b;
    }
    case ModuleSpec::Kind::named: {
      auto it = env.modules.find(m.name);
      if (it == env.modules.end()) throw DomainError("unknown module '" + m.name + "'");
      if (!(it->second.left_ring() == left) || !(it->second.right_ring() == right)) {
        throw DomainError("module '" + m.name + "' acts on different rings here");
      }
      return it->second;
    }
  }
  throw DomainError("bad module");
}

BuiltRing build(const RingSpec& s, const SpecEnv& env, std::size_t cap) {
  auto sub = [&](std::size_t i) { return finite(build(s.rings.at(i), env, cap), print(s)); };
  switch (s.kind) {
    case RingSpec::Kind::zn:
      return {zn(s.numbers[0]), std::nullopt};
    case RingSpec::Kind::product: {
      std::vector<FiniteRing> fs;
      for (std::size_t i = 0; i < s.rings.size(); ++i) fs.push_back(sub(i));
      return {direct_product(fs, cap), std::nullopt};
    }
    case RingSpec::Kind::matrix:
      if (s.numbers[0] == 0) throw DomainError("matrix size must be >= 1");
      return {matrix_ring(sub(0), s.numbers[0], cap), std::nullopt};
    case RingSpec::Kind::tri2: {
      FiniteRing R = sub(0), S = sub(1);
      return {tri2(R, S, make_module(s.modules[0], S, R, env), cap), std::nullopt};
    }
    case RingSpec::Kind::tri3: {
      FiniteRing A1 = sub(0), A2 = sub(1), A3 = sub(2);
      Bimodule A21 = make_module(s.modules[0], A2, A1, env);
      Bimodule A31 = make_module(s.modules[1], A3, A1, env);
      Bimodule A32 = make_module(s.modules[2], A3, A2, env);
      std::optional<PairingMap> comp;
      if (s.pairing) {
        if (*s.pairing == "mul") {
          comp = PairingMap::cyclic_product(A32, A21, A31);
        } else {
          auto it = env.pairings.find(*s.pairing);
          if (it == env.pairings.end()) throw DomainError("unknown pairing '" + *s.pairing + "'");
          comp = it->second;
        }
      }
      return {tri3(A1, A2, A3, A21, A31, A32, comp, cap), std::nullopt};
    }
    case RingSpec::Kind::morita: {
      FiniteRing R = sub(0), S = sub(1);
      return {morita_zero(R, S, make_module(s.modules[0], R, S, env), make_module(s.modules[1], S, R, env), cap),
              std::nullopt};
    }
    case RingSpec::Kind::idealize: {
      FiniteRing R = sub(0);
      return {idealization(R, make_module(s.modules[0], R, R, env), cap), std::nullopt};
    }
    case RingSpec::Kind::quotient: {
      FiniteRing R = sub(0);
      IdealSet I = ideal_closure(R, resolve_ideal_generators(R, *s.ideal));
      QuotientRing q = quotient(R, I.members(), print(*s.ideal));
      const std::string shown = s.ideal->kind == IdealSpec::Kind::radical ? "J" : I.label();
      return {q.ring.relabeled(R.label() + "/" + shown, print(s)), std::nullopt};
    }
    case RingSpec::Kind::series:
      if (s.numbers[0] == 0) throw DomainError("series length must be >= 1");
      return {truncated_power_series(sub(0), s.numbers[0], cap), std::nullopt};
    case RingSpec::Kind::localized: {
      std::vector<unsigned> ps;
      for (std::size_t p : s.numbers) {
        if (p > std::numeric_limits<unsigned>::max()) throw DomainError("prime too large");
        ps.push_back(static_cast<unsigned>(p));
      }
      return {std::nullopt, PrimeSet(ps)};
    }
    case RingSpec::Kind::corner: {
      FiniteRing R = sub(0);
      if (s.numbers[0] >= R.order()) throw DomainError("corner idempotent out of range");
      return {corner_ring(R, static_cast<Elem>(s.numbers[0])).ring, std::nullopt};
    }
    case RingSpec::Kind::named: {
      auto it = env.rings.find(s.name);
      if (it == env.rings.end()) throw DomainError("unknown ring '" + s.name + "'");
      return {it->second, std::nullopt};
    }
  }
  throw DomainError("bad ring spec");
}

}  // namespace

std::optional<std::size_t> estimate_order(const RingSpec& s, const SpecEnv& env) {
  if (s.kind == RingSpec::Kind::localized) return std::nullopt;
  return finite_estimate(s, env);
}

std::string BuiltRing::label() const { return finite ? finite->label() : localized->label(); }

BuiltRing build_ring(const RingSpec& s, const SpecEnv& env, std::size_t max_order) {
  // Every intermediate is at most as large as the final estimate, except
  // under quotient/corner; those re-check through the constructors' caps.
  if (auto n = estimate_order(s, env); n && *n > max_order) {
    throw ParseError(ParseErrorKind::size_cap, 1, 1,
                     print(s) + " has order " +
                         (*n == std::numeric_limits<std::size_t>::max() ? std::string("> 2^64") : std::to_string(*n)) +
                         ", above the cap " + std::to_string(max_order));
  }
  return build(s, env, max_order);
}

BuiltRing build_ring(std::string_view input, const SpecEnv& env, std::size_t max_order) {
  return build_ring(parse_ring_spec(input), env, max_order);
}

std::vector<Elem> resolve_ideal_generators(const FiniteRing& R, const IdealSpec& ideal) {
  if (ideal.kind == IdealSpec::Kind::radical) return jacobson_radical(R);
  std::vector<Elem> gens;
  for (const std::string& g : ideal.generators) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(g.data(), g.data() + g.size(), v);
    if (ec != std::errc() || ptr != g.data() + g.size()) throw DomainError("'" + g + "' is not an element index");
    if (v >= R.order()) throw DomainError("element " + g + " out of range for " + R.label());
    gens.push_back(static_cast<Elem>(v));
  }
  return gens;
}

namespace {

std::vector<Elem> rows_of(const SExpr& block, const std::string& key, std::size_t rows, std::size_t cols) {
  std::vector<Elem> flat;
  if (block.items.size() != rows + 1) {
    throw ParseError(ParseErrorKind::arity, block.line, block.column,
                     "'" + key + "' needs " + std::to_string(rows) + " rows, got " +
                         std::to_string(block.items.size() - 1));
  }
  for (std::size_t r = 1; r < block.items.size(); ++r) {
    const SExpr& row = block.items[r];
    if (row.kind != SExpr::Kind::list) syntax(row, "expected a row of indices", {"'('"});
    if (row.items.size() != cols) {
      throw ParseError(ParseErrorKind::arity, row.line, row.column,
                       "row of '" + key + "' needs " + std::to_string(cols) + " entries, got " +
                           std::to_string(row.items.size()));
    }
    for (const SExpr& v : row.items) flat.push_back(static_cast<Elem>(to_size(v)));
  }
  return flat;
}

/// Blocks (key ...) after the name, keyed by their head symbol.
std::map<std::string, const SExpr*> blocks(const SExpr& form, std::size_t first,
                                           const std::vector<std::string>& keys) {
  std::map<std::string, const SExpr*> out;
  for (std::size_t i = first; i < form.items.size(); ++i) {
    const SExpr& b = form.items[i];
    if (b.kind != SExpr::Kind::list || b.items.empty() || b.items[0].kind != SExpr::Kind::symbol) {
      syntax(b, "expected a table block", keys);
    }
    if (std::find(keys.begin(), keys.end(), b.items[0].text) == keys.end()) {
      syntax(b.items[0], "unknown block '" + b.items[0].text + "'", keys);
    }
    out[b.items[0].text] = &b;
  }
  for (const auto& k : keys) {
    if (!out.count(k)) syntax(form, "missing block '" + k + "'", {k});
  }
  return out;
}

std::size_t single(const SExpr& block) {
  if (block.items.size() != 2) {
    throw ParseError(ParseErrorKind::arity, block.line, block.column,
                     "'" + block.items[0].text + "' takes 1 argument");
  }
  return to_size(block.items[1]);
}

std::string name_of(const SExpr& form) {
  if (form.items.size() < 2 || form.items[1].kind != SExpr::Kind::symbol) {
    syntax(form, "definition needs a name", {"name"});
  }
  return form.items[1].text;
}

}  // namespace

SpecFile parse_spec_file(std::string_view input, std::size_t max_order) {
  SpecFile file;
  for (const SExpr& form : read_sexprs(input)) {
    const bool is_def = form.kind == SExpr::Kind::list && !form.items.empty() &&
                        form.items[0].kind == SExpr::Kind::symbol && form.items[0].text.rfind("define-", 0) == 0;
    if (!is_def) {
      file.ring = ring_spec_from_sexpr(form);
      continue;
    }
    const std::string& head = form.items[0].text;
    const std::string name = name_of(form);
    if (head == "define-ring") {
      auto b = blocks(form, 2, {"order", "one", "add", "mul"});
      RingTables t;
      t.label = name;
      t.construction = name;
      t.order = single(*b["order"]);
      if (t.order > max_order) {
        throw ParseError(ParseErrorKind::size_cap, form.line, form.column,
                         "ring '" + name + "' has order " + std::to_string(t.order) + ", above the cap " +
                             std::to_string(max_order));
      }
      t.one = static_cast<Elem>(single(*b["one"]));
      t.add = rows_of(*b["add"], "add", t.order, t.order);
      t.mul = rows_of(*b["mul"], "mul", t.order, t.order);
      file.env.rings.insert_or_assign(name, FiniteRing::checked(std::move(t), max_order));
    } else if (head == "define-bimodule") {
      if (form.items.size() < 4) {
        throw ParseError(ParseErrorKind::arity, form.line, form.column,
                         "'define-bimodule' needs a name, two rings and table blocks");
      }
      FiniteRing left = finite(build_ring(ring_spec_from_sexpr(form.items[2]), file.env, max_order), head);
      FiniteRing right = finite(build_ring(ring_spec_from_sexpr(form.items[3]), file.env, max_order), head);
      auto b = blocks(form, 4, {"order", "add", "left", "right"});
      const std::size_t n = single(*b["order"]);
      if (n > max_order) {
        throw ParseError(ParseErrorKind::size_cap, form.line, form.column, "module '" + name + "' is above the cap");
      }
      Bimodule M(left, right, n, rows_of(*b["add"], "add", n, n), rows_of(*b["left"], "left", left.order(), n),
                 rows_of(*b["right"], "right", n, right.order()), name);
      M.require_valid();
      file.env.modules.insert_or_assign(name, std::move(M));
    } else if (head == "define-pairing") {
      const std::size_t rows = form.items.size() - 2;
      if (rows == 0) throw ParseError(ParseErrorKind::arity, form.line, form.column, "'define-pairing' needs rows");
      const SExpr& first = form.items[2];
      if (first.kind != SExpr::Kind::list) syntax(first, "expected a row of indices", {"'('"});
      const std::size_t cols = first.items.size();
      SExpr table{SExpr::Kind::list, "", {}, form.line, form.column};
      table.items.push_back({SExpr::Kind::symbol, "pairing", {}, form.line, form.column});
      table.items.insert(table.items.end(), form.items.begin() + 2, form.items.end());
      file.env.pairings.insert_or_assign(name, PairingMap(rows, cols, rows_of(table, "pairing", rows, cols), name));
    } else {
      syntax(form.items[0], "unknown definition '" + head + "'", {"define-ring", "define-bimodule", "define-pairing"});
    }
  }
  return file;
}

std::size_t max_order_from_env() {
  const char* v = std::getenv("CLEANRING_MAX_ORDER");
  if (!v || !*v) return kDefaultMaxOrder;
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(v, v + std::strlen(v), n);
  if (ec != std::errc() || *ptr != '\0' || n == 0) return kDefaultMaxOrder;
  return n;
}

}  // namespace cleanring
