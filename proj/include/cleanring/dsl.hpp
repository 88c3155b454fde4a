#pragma once

// Ring-specification DSL: parenthesized prefix forms such as
//   (zn 6)  (product (zn 2) (zn 4))  (matrix 2 (zn 2))  (localized 3 5)
//   (quotient (zn 8) (ideal 4))  (quotient (zn 8) radical)  (series (zn 2) 3)
//   (tri2 R S M)  (tri3 A1 A2 A3 A21 A31 A32 [pairing])  (morita R S M N)
//   (idealize R M)  (corner R e)
// Module arguments are `regular`, `zero`, `(znmod m)` or a name from a spec
// file; pairings are `zero`, `mul` or a name. A bare symbol in ring position
// refers to a ring defined in a spec file.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cleanring/constructions.hpp"
#include "cleanring/error.hpp"
#include "cleanring/localized.hpp"
#include "cleanring/ring.hpp"

namespace cleanring {

enum class ParseErrorKind { lexical, syntactic, arity, size_cap };

std::string to_string(ParseErrorKind k);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {});

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  /// "syntactic error at 1:10: unexpected end of input (expected ')', '(', atom)"
  std::string diagnostic() const;

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

struct ModuleSpec {
  enum class Kind { regular, zero, znmod, named };
  Kind kind = Kind::regular;
  std::size_t modulus = 0;  // znmod
  std::string name;         // named
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct IdealSpec {
  enum class Kind { generators, radical };
  Kind kind = Kind::generators;
  std::vector<std::string> generators;  // element texts: indices, or a/b for localized rings
  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

struct RingSpec {
  enum class Kind { zn, product, matrix, tri2, tri3, morita, idealize, quotient, series, localized, corner, named };
  Kind kind = Kind::zn;
  std::vector<std::size_t> numbers;  // zn n | matrix k | series k | corner e | localized primes
  std::vector<RingSpec> rings;
  std::vector<ModuleSpec> modules;
  std::optional<std::string> pairing;  // tri3: "zero", "mul" or a name
  std::optional<IdealSpec> ideal;      // quotient
  std::string name;                    // named
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Generic s-expression, the first parsing stage.
struct SExpr {
  enum class Kind { list, symbol, number };
  Kind kind = Kind::list;
  std::string text;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Every top-level form of `input`; throws ParseError (lexical / syntactic).
std::vector<SExpr> read_sexprs(std::string_view input);

/// Exactly one ring expression; throws ParseError of any kind except size_cap.
RingSpec parse_ring_spec(std::string_view input);
RingSpec ring_spec_from_sexpr(const SExpr& e);

/// Canonical text; parse_ring_spec(print(s)) == s.
std::string print(const RingSpec& s);
std::string print(const ModuleSpec& m);

/// Definitions made by a spec file.
struct SpecEnv {
  std::map<std::string, FiniteRing> rings;
  std::map<std::string, Bimodule> modules;
  std::map<std::string, PairingMap> pairings;
};

/// Order of the ring the spec builds, saturating at SIZE_MAX; nullopt for
/// localized rings. Named modules need `env`.
std::optional<std::size_t> estimate_order(const RingSpec& s, const SpecEnv& env = {});

/// A finite ring or a localization of the integers.
struct BuiltRing {
  std::optional<FiniteRing> finite;
  std::optional<PrimeSet> localized;
  std::string label() const;
};

/// Throws ParseError(size_cap) when the estimate exceeds max_order, before
/// anything is constructed; DomainError / AxiomError for invalid arguments.
BuiltRing build_ring(const RingSpec& s, const SpecEnv& env = {}, std::size_t max_order = kDefaultMaxOrder);

/// parse_ring_spec + build_ring, with the size-cap error located at the input start.
BuiltRing build_ring(std::string_view input, const SpecEnv& env = {}, std::size_t max_order = kDefaultMaxOrder);

/// Resolves a DSL ideal inside a finite ring: generator indices or `radical`.
std::vector<Elem> resolve_ideal_generators(const FiniteRing& R, const IdealSpec& ideal);

/// Spec file: the DSL plus table blocks
///   (define-ring NAME (order n) (one k) (add ROW...) (mul ROW...))
///   (define-bimodule NAME LEFT RIGHT (order n) (add ROW...) (left ROW...) (right ROW...))
///   (define-pairing NAME ROW...)
/// where ROW is a list of indices. The last non-definition form, if any, is the ring.
struct SpecFile {
  SpecEnv env;
  std::optional<RingSpec> ring;
};

SpecFile parse_spec_file(std::string_view input, std::size_t max_order = kDefaultMaxOrder);

/// CLEANRING_MAX_ORDER when set to a positive integer, else kDefaultMaxOrder.
std::size_t max_order_from_env();

}  // namespace cleanring
