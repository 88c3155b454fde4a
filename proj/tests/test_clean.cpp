#include <gtest/gtest.h>

#include <set>

#include "cleanring/clean.hpp"
#include "cleanring/constructions.hpp"
#include "cleanring/error.hpp"
#include "cleanring/ideals.hpp"

using namespace cleanring;

namespace {

// Decompositions found straight from the tables: x = u + sign * e.
struct Brute {
  bool plus = false, minus = false;
  std::set<Elem> idempotents;  // e working with either sign
};

Brute brute(const FiniteRing& R, Elem x) {
  Brute b;
  const std::size_t n = R.order();
  for (Elem e = 0; e < n; ++e) {
    if (R.mul(e, e) != e) continue;
    for (Elem u = 0; u < n; ++u) {
      bool unit = false;
      for (Elem v = 0; v < n && !unit; ++v) unit = R.mul(u, v) == R.one() && R.mul(v, u) == R.one();
      if (!unit) continue;
      if (R.add(u, e) == x) b.plus = true, b.idempotents.insert(e);
      if (R.sub(u, e) == x) b.minus = true, b.idempotents.insert(e);
    }
  }
  return b;
}

std::vector<FiniteRing> small_rings() {
  std::vector<FiniteRing> rs;
  for (std::size_t n : {1, 2, 3, 4, 5, 6, 8, 9, 12}) rs.push_back(zn(n));
  rs.push_back(matrix_ring(zn(2), 2));
  rs.push_back(tri2(zn(2), zn(2), Bimodule::regular(zn(2))));
  rs.push_back(truncated_power_series(zn(4), 2));
  std::vector<FiniteRing> fs{zn(3), zn(3)};
  rs.push_back(direct_product(fs));
  return rs;
}

}  // namespace

TEST(Element, ClassesMatchBruteForce) {
  for (const FiniteRing& R : small_rings()) {
    for (Elem x = 0; x < R.order(); ++x) {
      const Brute b = brute(R, x);
      const CleanClass c = is_weakly_clean_element(R, x);
      ASSERT_EQ(c.clean_plus, b.plus) << R.label() << " " << x;
      ASSERT_EQ(c.clean_minus, b.minus) << R.label() << " " << x;
      ASSERT_EQ(is_clean_element(R, x), b.plus);
      auto ids = weakly_clean_idempotents(R, x);
      ASSERT_EQ(std::set<Elem>(ids.begin(), ids.end()), b.idempotents);
    }
  }
}

TEST(Element, DecompositionsReconstruct) {
  for (const FiniteRing& R : small_rings()) {
    for (Elem x = 0; x < R.order(); ++x) {
      for (const Decomposition& d : decompositions(R, x)) {
        EXPECT_TRUE(R.is_unit(d.unit));
        EXPECT_TRUE(R.is_idempotent(d.idempotent));
        EXPECT_EQ(d.sign > 0 ? R.add(d.unit, d.idempotent) : R.sub(d.unit, d.idempotent), x);
      }
    }
  }
}

TEST(Element, NegationSwapsSigns) {
  for (const FiniteRing& R : small_rings()) {
    for (Elem x = 0; x < R.order(); ++x) {
      const CleanClass a = is_weakly_clean_element(R, x), b = is_weakly_clean_element(R, R.neg(x));
      EXPECT_EQ(a.clean_plus, b.clean_minus);
      EXPECT_EQ(a.clean_minus, b.clean_plus);
    }
  }
}

TEST(Ideal, FiniteRingsAreClean) {
  for (const FiniteRing& R : small_rings()) {
    EXPECT_TRUE(ring_is_clean(R)) << R.label();
    EXPECT_TRUE(ring_is_weakly_clean(R));
    for (const IdealSet& I : all_ideals(R)) {
      EXPECT_TRUE(is_clean_ideal(R, I).holds) << R.label() << " " << I.label();
      EXPECT_TRUE(is_weakly_clean_ideal(R, I).holds);
    }
  }
}

TEST(Ideal, UniquenessIsAboutTheIdempotent) {
  EXPECT_TRUE(is_uniquely_weakly_clean_ideal(zn(2), whole_ideal(zn(2))).holds);
  // In Z3, 1 = 1 + 0 = -1 + 1 uses two idempotents.
  IdealVerdict v = is_uniquely_weakly_clean_ideal(zn(3), whole_ideal(zn(3)));
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.failing_element, 1u);
  EXPECT_EQ(v.working_idempotents, (std::vector<Elem>{0, 1}));
  EXPECT_TRUE(replay_failure(zn(3), whole_ideal(zn(3)), v));
}

TEST(Ideal, FailingVerdictCarriesAttempts) {
  FiniteRing R = zn(3);
  IdealVerdict v = is_uniquely_weakly_clean_ideal(R, zero_ideal(R));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.scanned, 1u);
}

TEST(Exchange, StrictAndRelaxedOnSmallRings) {
  for (const FiniteRing& R : small_rings()) {
    for (const IdealSet& I : all_ideals(R)) {
      IdealVerdict strict = is_weakly_exchange_ideal(R, I, ExchangeMode::strict);
      IdealVerdict relaxed = is_weakly_exchange_ideal(R, I, ExchangeMode::relaxed);
      // Every candidate of the strict search is one of the relaxed search.
      if (strict.holds) EXPECT_TRUE(relaxed.holds);
      if (!strict.holds) EXPECT_TRUE(replay_failure(R, I, strict));
    }
  }
}

TEST(Exchange, BruteForceDefinition) {
  // e - x in R(x - x^2) or e + x in R(x + x^2), with e ranging over Idem(R) in I.
  for (const FiniteRing& R : small_rings()) {
    for (const IdealSet& I : all_ideals(R)) {
      bool holds = true;
      for (Elem x : I.members()) {
        bool found = false;
        for (Elem e : I.members()) {
          if (R.mul(e, e) != e) continue;
          for (Elem r = 0; r < R.order() && !found; ++r) {
            const Elem x2 = R.mul(x, x);
            found = R.mul(r, R.sub(x, x2)) == R.sub(e, x) || R.mul(r, R.add(x, x2)) == R.add(e, x);
          }
        }
        holds = holds && found;
      }
      EXPECT_EQ(is_weakly_exchange_ideal(R, I).holds, holds) << R.label() << " " << I.label();
    }
  }
}

TEST(Ideal, PredicateDispatchAndNames) {
  FiniteRing R = zn(4);
  EXPECT_TRUE(check_ideal(R, whole_ideal(R), IdealPredicate::clean).holds);
  EXPECT_EQ(to_string(IdealPredicate::weakly_exchange), "weakly-exchange");
  EXPECT_THROW(is_clean_ideal(zn(5), whole_ideal(R)), DomainError);
}

TEST(Lifting, MatchesExhaustiveSearch) {
  for (const FiniteRing& R : small_rings()) {
    IdealSet J = jacobson_ideal(R);
    QuotientRing q = quotient(J);
    for (Elem c = 0; c < q.ring.order(); ++c) {
      auto lift = lift_idempotent(R, q, J.members(), c);
      bool exists = false;
      for (Elem e = 0; e < R.order(); ++e) exists |= R.mul(e, e) == e && q.projection[e] == c;
      EXPECT_EQ(lift.has_value(), exists) << R.label() << " " << c;
      EXPECT_EQ(q.ring.is_idempotent(c), exists);
      if (lift) {
        EXPECT_TRUE(R.is_idempotent(*lift));
        EXPECT_EQ(q.projection[*lift], c);
      }
    }
  }
}

TEST(Lifting, SeriesAndTriangular) {
  FiniteRing R = truncated_power_series(zn(4), 3);
  IdealSet J = jacobson_ideal(R);
  QuotientRing q = quotient(J);
  for (Elem c = 0; c < q.ring.order(); ++c) {
    if (q.ring.is_idempotent(c)) EXPECT_TRUE(lift_idempotent(R, J, c).has_value());
  }
}

TEST(Peirce, ZnSplitsIntoCorners) {
  FiniteRing R = zn(6);
  std::vector<Elem> es{3, 4};
  PeirceReport rep = peirce_analysis(R, es, whole_ideal(R));
  ASSERT_EQ(rep.corners.size(), 2u);
  EXPECT_TRUE(rep.condition_holds);
  EXPECT_EQ(rep.corners[0].corner.ring, zn(2));
  // 4 Z6 4 = {0, 2, 4} with unity 4: a field of order 3.
  EXPECT_EQ(rep.corners[1].corner.ring.order(), 3u);
  EXPECT_EQ(rep.corners[1].corner.ring.units().size(), 2u);
  std::vector<Elem> bad{3};
  EXPECT_THROW(peirce_analysis(R, bad, whole_ideal(R)), DomainError);
}
