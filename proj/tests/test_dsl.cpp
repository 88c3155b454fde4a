#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "cleanring/constructions.hpp"
#include "cleanring/dsl.hpp"
#include "cleanring/ideals.hpp"
#include "cleanring/serialize.hpp"

using namespace cleanring;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_ring_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return ParseError(ParseErrorKind::lexical, 0, 0, "none");
}

ModuleSpec random_module(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0:
      return {ModuleSpec::Kind::regular, 0, ""};
    case 1:
      return {ModuleSpec::Kind::zero, 0, ""};
    case 2:
      return {ModuleSpec::Kind::znmod, 1 + rng() % 9, ""};
    default:
      return {ModuleSpec::Kind::named, 0, "m" + std::to_string(rng() % 5)};
  }
}

RingSpec random_spec(std::mt19937_64& rng, int depth) {
  RingSpec s;
  const int pick = depth <= 0 ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 12);
  auto sub = [&] { return random_spec(rng, depth - 1); };
  switch (pick) {
    case 0:
      s.kind = RingSpec::Kind::zn;
      s.numbers = {1 + rng() % 20};
      break;
    case 1:
      s.kind = RingSpec::Kind::localized;
      for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) s.numbers.push_back(rng() % 30);
      break;
    case 2:
      s.kind = RingSpec::Kind::named;
      s.name = "ring_" + std::to_string(rng() % 9);
      break;
    case 3:
      s.kind = RingSpec::Kind::product;
      for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) s.rings.push_back(sub());
      break;
    case 4:
      s.kind = RingSpec::Kind::matrix;
      s.numbers = {1 + rng() % 3};
      s.rings = {sub()};
      break;
    case 5:
      s.kind = RingSpec::Kind::tri2;
      s.rings = {sub(), sub()};
      s.modules = {random_module(rng)};
      break;
    case 6:
      s.kind = RingSpec::Kind::tri3;
      s.rings = {sub(), sub(), sub()};
      s.modules = {random_module(rng), random_module(rng), random_module(rng)};
      if (rng() % 2) s.pairing = rng() % 2 ? "mul" : "phi";
      break;
    case 7:
      s.kind = RingSpec::Kind::morita;
      s.rings = {sub(), sub()};
      s.modules = {random_module(rng), random_module(rng)};
      break;
    case 8:
      s.kind = RingSpec::Kind::idealize;
      s.rings = {sub()};
      s.modules = {random_module(rng)};
      break;
    case 9: {
      s.kind = RingSpec::Kind::quotient;
      s.rings = {sub()};
      IdealSpec i;
      if (rng() % 3 == 0) {
        i.kind = IdealSpec::Kind::radical;
      } else {
        for (std::size_t k = 0, n = rng() % 3; k < n; ++k) i.generators.push_back(std::to_string(rng() % 50));
      }
      s.ideal = i;
      break;
    }
    case 10:
      s.kind = RingSpec::Kind::series;
      s.rings = {sub()};
      s.numbers = {1 + rng() % 4};
      break;
    default:
      s.kind = RingSpec::Kind::corner;
      s.rings = {sub()};
      s.numbers = {rng() % 10};
      break;
  }
  return s;
}

}  // namespace

TEST(Dsl, PrintParseRoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const RingSpec s = random_spec(rng, 3);
    const std::string text = print(s);
    ASSERT_EQ(parse_ring_spec(text), s) << text;
    EXPECT_EQ(print(parse_ring_spec(text)), text);
  }
}

TEST(Dsl, WhitespaceAndCommentsAreInsignificant) {
  const RingSpec a = parse_ring_spec("(product (zn 2) (matrix 2 (zn 3)))");
  const RingSpec b = parse_ring_spec("  ; two factors\n(product\n  (zn 2)   ; first\n  (matrix 2 (zn 3)))\n");
  EXPECT_EQ(a, b);
}

TEST(Dsl, ZeroPairingIsCanonicalizedAway) {
  const RingSpec s = parse_ring_spec("(tri3 (zn 2) (zn 2) (zn 2) regular regular regular zero)");
  EXPECT_FALSE(s.pairing);
  EXPECT_EQ(print(s), "(tri3 (zn 2) (zn 2) (zn 2) regular regular regular)");
}

TEST(Dsl, LexicalErrors) {
  for (const char* bad : {"(zn 6]", "(zn #)", "(zn 2x)", "(zn -)", "(localized 3/)"}) {
    EXPECT_EQ(parse_failure(bad).kind(), ParseErrorKind::lexical) << bad;
  }
  const ParseError e = parse_failure("(product (zn 2)\n   (zn $))");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 8u);
}

TEST(Dsl, UnclosedFormExpectsCloseParen) {
  const ParseError e = parse_failure("(matrix 2");
  EXPECT_EQ(e.kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 10u);
  ASSERT_FALSE(e.expected().empty());
  EXPECT_EQ(e.expected().front(), "')'");
  EXPECT_EQ(e.diagnostic(), "syntactic error at 1:10: unexpected end of input (expected ')', '(', atom)");
}

TEST(Dsl, SyntacticErrors) {
  EXPECT_EQ(parse_failure("(zn 6))").kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(parse_failure("(zn 6) (zn 2)").expected(), std::vector<std::string>{"end of input"});
  EXPECT_EQ(parse_failure("").kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(parse_failure("()").kind(), ParseErrorKind::syntactic);

  const ParseError unknown = parse_failure("(product (ring 3))");
  EXPECT_EQ(unknown.kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(unknown.column(), 11u);
  EXPECT_NE(std::find(unknown.expected().begin(), unknown.expected().end(), "matrix"), unknown.expected().end());

  EXPECT_EQ(parse_failure("(zn x)").kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(parse_failure("(zn -3)").kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(parse_failure("(matrix (zn 2) 2)").kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(parse_failure("(tri2 (zn 2) (zn 2) 5)").kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(parse_failure("(quotient (zn 8) (gens 4))").kind(), ParseErrorKind::syntactic);
  EXPECT_EQ(parse_failure("(zn 99999999999999999999999)").kind(), ParseErrorKind::syntactic);
}

TEST(Dsl, ArityErrors) {
  for (const char* bad : {"(zn)", "(zn 2 3)", "(product)", "(matrix 2)", "(tri2 (zn 2) (zn 2))",
                          "(tri3 (zn 2) (zn 2) (zn 2) zero zero)", "(morita (zn 2) (zn 2) zero)",
                          "(idealize (zn 4))", "(series (zn 2))", "(localized)", "(corner (zn 6))",
                          "(idealize (zn 4) (znmod))"}) {
    EXPECT_EQ(parse_failure(bad).kind(), ParseErrorKind::arity) << bad;
  }
  const ParseError e = parse_failure("(product (zn 2)\n  (matrix 2 (zn 2) (zn 3)))");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);
  EXPECT_EQ(std::string(e.what()), "'matrix' takes 2 arguments, got 3");
}

TEST(Dsl, SizeCapIsCheckedBeforeConstruction) {
  // 2^64 entries would never finish if it were built.
  try {
    build_ring("(matrix 8 (zn 2))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::size_cap);
    EXPECT_NE(std::string(e.what()).find("> 2^64"), std::string::npos);
  }
  try {
    build_ring("(product (zn 16) (zn 17))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::size_cap);
    EXPECT_NE(std::string(e.what()).find("272"), std::string::npos);
  }
  EXPECT_EQ(build_ring("(product (zn 16) (zn 17))", {}, 300).finite->order(), 272u);
}

TEST(Dsl, EstimateMatchesBuiltOrder) {
  for (const char* text :
       {"(zn 12)", "(product (zn 2) (zn 3) (zn 2))", "(matrix 2 (zn 2))", "(tri2 (zn 2) (zn 3) zero)",
        "(tri2 (zn 2) (zn 2) regular)", "(tri3 (zn 2) (zn 2) (zn 2) regular regular regular mul)",
        "(morita (zn 2) (zn 2) regular regular)", "(morita (zn 4) (zn 6) (znmod 2) (znmod 2))",
        "(idealize (zn 4) (znmod 2))", "(series (zn 3) 3)", "(quotient (zn 12) (ideal 4))"}) {
    const RingSpec s = parse_ring_spec(text);
    const BuiltRing b = build_ring(s);
    ASSERT_TRUE(b.finite) << text;
    if (s.kind != RingSpec::Kind::quotient) EXPECT_EQ(*estimate_order(s), b.finite->order()) << text;
    EXPECT_LE(b.finite->order(), *estimate_order(s)) << text;
  }
}

TEST(Dsl, ConstructionStringIsTheDslText) {
  for (const char* text :
       {"(zn 6)", "(product (zn 2) (zn 4))", "(matrix 2 (zn 3))", "(tri2 (zn 2) (zn 2) regular)",
        "(tri3 (zn 2) (zn 2) (zn 2) regular regular regular)", "(tri3 (zn 2) (zn 2) (zn 2) regular regular regular mul)",
        "(morita (zn 2) (zn 2) regular regular)", "(idealize (zn 4) (znmod 2))", "(series (zn 2) 3)",
        "(quotient (zn 8) radical)", "(quotient (zn 12) (ideal 4))"}) {
    const BuiltRing b = build_ring(text);
    EXPECT_EQ(b.finite->construction(), text);
    EXPECT_EQ(build_ring(b.finite->construction()).finite.value(), *b.finite) << text;
  }
}

TEST(Dsl, BuildsMatchDirectConstructions) {
  EXPECT_EQ(*build_ring("(zn 6)").finite, zn(6));
  const FiniteRing z2 = zn(2), z4 = zn(4);
  const std::vector<FiniteRing> fs{z2, z4};
  EXPECT_EQ(*build_ring("(product (zn 2) (zn 4))").finite, direct_product(fs));
  EXPECT_EQ(*build_ring("(matrix 2 (zn 2))").finite, matrix_ring(z2, 2));
  EXPECT_EQ(*build_ring("(series (zn 2) 3)").finite, truncated_power_series(z2, 3));
  EXPECT_EQ(*build_ring("(quotient (zn 12) (ideal 4))").finite, zn(4));

  const BuiltRing rad = build_ring("(quotient (zn 8) radical)");
  EXPECT_EQ(rad.finite->order(), 2u);
  EXPECT_EQ(rad.finite->label(), "Z_8/J");

  const BuiltRing loc = build_ring("(localized 5 3)");
  ASSERT_TRUE(loc.localized);
  EXPECT_EQ(loc.label(), "Z_(3,5)");
  EXPECT_FALSE(estimate_order(parse_ring_spec("(localized 3)")));
}

TEST(Dsl, BuildRejectsBadArguments) {
  EXPECT_THROW(build_ring("(localized 4)"), DomainError);
  EXPECT_THROW(build_ring("(product (zn 2) (localized 3))"), DomainError);
  EXPECT_THROW(build_ring("(tri2 (zn 2) (zn 3) regular)"), DomainError);
  EXPECT_THROW(build_ring("(idealize (zn 4) (znmod 3))"), AxiomError);
  EXPECT_THROW(build_ring("(idealize (matrix 2 (zn 2)) regular)"), DomainError);
  EXPECT_THROW(build_ring("(quotient (zn 6) (ideal 6))"), DomainError);
  EXPECT_THROW(build_ring("(corner (zn 6) 2)"), Error);
  EXPECT_THROW(build_ring("(matrix 0 (zn 2))"), DomainError);
  EXPECT_THROW(build_ring("unknown_ring"), DomainError);
}

TEST(Dsl, SpecFileTableBlocks) {
  const char* text = R"(
    ; F_4 = Z_2[w]/(w^2 + w + 1), elements 0 1 w w+1
    (define-ring F4
      (order 4) (one 1)
      (add (0 1 2 3) (1 0 3 2) (2 3 0 1) (3 2 1 0))
      (mul (0 0 0 0) (0 1 2 3) (0 2 3 1) (0 3 1 2)))
    (define-bimodule half (zn 4) (zn 4)
      (order 2)
      (add (0 1) (1 0))
      (left (0 0) (0 1) (0 0) (0 1))
      (right (0 0 0 0) (0 1 0 1)))
    (tri2 F4 F4 regular)
  )";
  const SpecFile f = parse_spec_file(text);
  ASSERT_EQ(f.env.rings.count("F4"), 1u);
  const FiniteRing F4 = f.env.rings.at("F4");
  EXPECT_EQ(F4.units().size(), 3u);
  EXPECT_EQ(f.env.modules.at("half").order(), 2u);
  ASSERT_TRUE(f.ring);
  EXPECT_EQ(build_ring(*f.ring, f.env).finite->order(), 64u);
  EXPECT_EQ(build_ring("(idealize (zn 4) half)", f.env).finite->order(), 8u);
  EXPECT_EQ(*estimate_order(parse_ring_spec("(idealize (zn 4) half)"), f.env), 8u);
}

TEST(Dsl, SpecFileErrors) {
  try {
    parse_spec_file("(define-ring R (order 2) (one 1) (add (0 1) (1 0)) (mul (0 0) (0)))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::arity);
    EXPECT_EQ(e.column(), 63u);
  }
  EXPECT_THROW(parse_spec_file("(define-ring R (order 2) (one 1) (add (0 1) (1 0)))"), ParseError);
  EXPECT_THROW(parse_spec_file("(define-ring R (order 2) (one 1) (add (0 1) (1 0)) (mul (0 0) (0 0)))"), AxiomError);
  try {
    parse_spec_file("(define-ring R (order 300) (one 1) (add) (mul))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::size_cap);
  }
  EXPECT_THROW(parse_spec_file("(define-group G)"), ParseError);
}

TEST(Dsl, MaxOrderFromEnvironment) {
  ::unsetenv("CLEANRING_MAX_ORDER");
  EXPECT_EQ(max_order_from_env(), kDefaultMaxOrder);
  ::setenv("CLEANRING_MAX_ORDER", "4096", 1);
  EXPECT_EQ(max_order_from_env(), 4096u);
  ::setenv("CLEANRING_MAX_ORDER", "lots", 1);
  EXPECT_EQ(max_order_from_env(), kDefaultMaxOrder);
  ::unsetenv("CLEANRING_MAX_ORDER");
}

TEST(Dsl, RadicalIdealResolves) {
  const FiniteRing R = zn(12);
  IdealSpec rad{IdealSpec::Kind::radical, {}};
  EXPECT_EQ(ideal_closure(R, resolve_ideal_generators(R, rad)), jacobson_ideal(R));
  EXPECT_THROW(resolve_ideal_generators(R, IdealSpec{IdealSpec::Kind::generators, {"12"}}), DomainError);
  EXPECT_THROW(resolve_ideal_generators(R, IdealSpec{IdealSpec::Kind::generators, {"1/2"}}), DomainError);
}

TEST(Serialize, RingJsonRoundTrip) {
  for (const char* text : {"(zn 7)", "(matrix 2 (zn 2))", "(tri2 (zn 2) (zn 3) zero)", "(series (zn 4) 2)"}) {
    const FiniteRing R = *build_ring(text).finite;
    const Json j = ring_to_json(R);
    const FiniteRing back = ring_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, R) << text;
    EXPECT_EQ(back.label(), R.label());
    EXPECT_EQ(back.construction(), R.construction());
  }
  Json broken = ring_to_json(zn(3));
  broken["mul_table"][1][1] = 2;
  EXPECT_THROW(ring_from_json(broken), AxiomError);
  broken["mul_table"] = Json::array();
  EXPECT_THROW(ring_from_json(broken), StructuralError);
}
