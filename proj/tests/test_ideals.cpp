#include <gtest/gtest.h>

#include <algorithm>

#include "cleanring/constructions.hpp"
#include "cleanring/error.hpp"
#include "cleanring/ideals.hpp"

using namespace cleanring;

namespace {

// Every subset closed under +, - and two-sided multiplication, by bitmask.
std::vector<std::vector<Elem>> ideals_by_subsets(const FiniteRing& R) {
  const std::size_t n = R.order();
  std::vector<std::vector<Elem>> out;
  for (unsigned long mask = 1; mask < (1ul << n); mask += 2) {  // bit 0 (zero) always set
    auto in = [&](Elem x) { return (mask >> x) & 1ul; };
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (Elem y = 0; y < n && ok; ++y) {
        if (in(y) && !in(R.sub(x, y))) ok = false;
        if (!in(R.mul(x, y)) || !in(R.mul(y, x))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Elem> members;
    for (Elem x = 0; x < n; ++x) {
      if (in(x)) members.push_back(x);
    }
    out.push_back(members);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::vector<Elem>> member_lists(const std::vector<IdealSet>& ideals) {
  std::vector<std::vector<Elem>> out;
  for (const auto& I : ideals) out.emplace_back(I.members().begin(), I.members().end());
  return out;
}

}  // namespace

TEST(AllIdeals, MatchSubsetEnumeration) {
  std::vector<FiniteRing> rings;
  for (std::size_t n = 1; n <= 16; ++n) rings.push_back(zn(n));
  std::vector<FiniteRing> z2z2{zn(2), zn(2)};
  rings.push_back(direct_product(z2z2));
  rings.push_back(truncated_power_series(zn(2), 3));
  rings.push_back(tri2(zn(2), zn(2), Bimodule::regular(zn(2))));
  rings.push_back(matrix_ring(zn(2), 2));
  rings.push_back(idealization(zn(4), Bimodule::cyclic(zn(4), zn(4), 2)));
  for (const FiniteRing& R : rings) {
    EXPECT_EQ(member_lists(all_ideals(R)), ideals_by_subsets(R)) << R.label();
  }
}

TEST(AllIdeals, CountsAndCap) {
  EXPECT_EQ(all_ideals(zn(12)).size(), 6u);  // divisors of 12
  EXPECT_EQ(all_ideals(matrix_ring(zn(3), 2), 128).size(), 2u);
  EXPECT_THROW(all_ideals(matrix_ring(zn(3), 2)), SizeError);
  EXPECT_FALSE(ideals_for_scan(matrix_ring(zn(3), 2)).empty());
}

TEST(IdealSet, ClosureAndLabels) {
  FiniteRing R = zn(12);
  std::vector<Elem> g{8};
  IdealSet I = ideal_closure(R, g);
  EXPECT_EQ(std::vector<Elem>(I.members().begin(), I.members().end()), (std::vector<Elem>{0, 4, 8}));
  EXPECT_EQ(I.label(), "<8>");
  EXPECT_EQ(zero_ideal(R).label(), "0");
  EXPECT_EQ(whole_ideal(R).label(), "R");
  EXPECT_TRUE(I.contains(4));
  EXPECT_FALSE(I.contains(2));
}

TEST(IdealSet, SumIntersectionSubset) {
  FiniteRing R = zn(12);
  std::vector<Elem> g4{4}, g6{6}, g2{2};
  IdealSet a = ideal_closure(R, g4), b = ideal_closure(R, g6);
  EXPECT_EQ(ideal_sum(a, b), ideal_closure(R, g2));
  EXPECT_EQ(ideal_intersection(a, b), zero_ideal(R));
  EXPECT_TRUE(is_subset(a, ideal_closure(R, g2)));
  EXPECT_FALSE(is_subset(a, b));
}

TEST(IdealSet, TwoSidedClosureInMatrixRing) {
  FiniteRing M = matrix_ring(zn(2), 2);
  std::vector<Elem> e11{8};  // (1,0,0,0)
  EXPECT_TRUE(ideal_closure(M, e11).is_whole());
  EXPECT_EQ(all_ideals(M).size(), 2u);
}

TEST(Jacobson, IdealAndQuotient) {
  FiniteRing R = zn(8);
  IdealSet J = jacobson_ideal(R);
  EXPECT_EQ(J.size(), 4u);
  EXPECT_EQ(quotient(J).ring, zn(2));
}

TEST(InducedIdeals, MatrixProductSeries) {
  FiniteRing R = zn(4);
  IdealSet I = ideal_closure(R, std::vector<Elem>{2});
  FiniteRing M = matrix_ring(R, 2);
  EXPECT_EQ(matrix_ideal(M, I, 2).size(), 16u);
  std::vector<FiniteRing> fs{R, zn(3)};
  FiniteRing P = direct_product(fs);
  std::vector<IdealSet> parts{I, whole_ideal(zn(3))};
  EXPECT_EQ(product_ideal(P, parts).size(), 6u);
  FiniteRing S = truncated_power_series(R, 2);
  EXPECT_EQ(series_ideal(S, I, 2).size(), 4u);
}

TEST(InducedIdeals, TriangularAndMorita) {
  FiniteRing z2 = zn(2), z4 = zn(4);
  Bimodule M = Bimodule::cyclic(z4, z2, 2);
  FiniteRing T = tri2(z2, z4, M);
  IdealSet I = whole_ideal(z2), J = ideal_closure(z4, std::vector<Elem>{2});
  EXPECT_EQ(tri2_ideal(T, M, I, J).size(), 2u * 2u * 2u);
  // [[0,0],[M,J]] needs MI inside M, fine for any I here.
  EXPECT_NO_THROW(tri2_ideal(T, M, zero_ideal(z2), J));

  Bimodule reg = Bimodule::regular(z2);
  FiniteRing T3 = tri3(z2, z2, z2, reg, reg, reg);
  auto Z = zero_ideal(z2), W = whole_ideal(z2);
  EXPECT_EQ(tri3_ideal(T3, reg, reg, reg, W, Z, W).size(), 32u);

  Bimodule zr = Bimodule::zero(z2, z4), zl = Bimodule::zero(z4, z2);
  FiniteRing Mo = morita_zero(z2, z4, zr, zl);
  EXPECT_EQ(morita_ideal(Mo, zr, zl, W, J).size(), 4u);
}

TEST(InducedIdeals, IdealizationNeedsSubmodule) {
  FiniteRing R = zn(4);
  Bimodule M = Bimodule::regular(R);
  FiniteRing RM = idealization(R, M);
  IdealSet I = ideal_closure(R, std::vector<Elem>{2});
  std::vector<Elem> N{0, 2};
  // I(N) is an ideal iff N is a submodule containing IM.
  EXPECT_EQ(idealization_ideal(RM, M, I, N).size(), 4u);
  std::vector<Elem> bad{0, 1};
  EXPECT_THROW(idealization_ideal(RM, M, I, bad), DomainError);
  std::vector<Elem> too_small{0};  // misses I M = {0, 2}
  EXPECT_THROW(idealization_ideal(RM, M, I, too_small), DomainError);
}

TEST(InducedIdeals, Corner) {
  FiniteRing R = zn(6);
  CornerRing c = corner_ring(R, 3);
  IdealSet I = ideal_closure(R, std::vector<Elem>{2});
  EXPECT_TRUE(corner_ideal(c, I).is_zero());
  EXPECT_TRUE(corner_ideal(c, whole_ideal(R)).is_whole());
}

TEST(Submodules, CyclicModule) {
  Bimodule M = Bimodule::regular(zn(12));
  EXPECT_EQ(all_submodules(M).size(), 6u);
  std::vector<Elem> g{8};
  EXPECT_EQ(submodule_closure(M, g), (std::vector<Elem>{0, 4, 8}));
  std::vector<Elem> not_sub{0, 5};
  EXPECT_FALSE(is_submodule(M, not_sub));
}

TEST(IdealLattice, ClosedUnderSumAndIntersection) {
  const FiniteRing z2 = zn(2);
  const std::vector<FiniteRing> z22{z2, z2};
  for (const FiniteRing& R : {zn(12), zn(16), direct_product(z22), matrix_ring(z2, 2),
                              tri2(z2, z2, Bimodule::regular(z2)), truncated_power_series(zn(4), 2)}) {
    const std::vector<IdealSet> ideals = all_ideals(R);
    const auto listed = [&](const IdealSet& I) { return std::find(ideals.begin(), ideals.end(), I) != ideals.end(); };
    EXPECT_TRUE(listed(zero_ideal(R))) << R.label();
    EXPECT_TRUE(listed(whole_ideal(R))) << R.label();
    EXPECT_TRUE(listed(jacobson_ideal(R))) << R.label();
    for (const IdealSet& I : ideals) {
      EXPECT_EQ(ideal_closure(R, I.members()), I) << R.label() << ' ' << I.label();
      for (const IdealSet& J : ideals) {
        const IdealSet S = ideal_sum(I, J), M = ideal_intersection(I, J);
        EXPECT_TRUE(listed(S) && listed(M)) << R.label() << ' ' << I.label() << ' ' << J.label();
        EXPECT_TRUE(is_subset(I, S) && is_subset(J, S) && is_subset(M, I) && is_subset(M, J));
      }
    }
  }
}
