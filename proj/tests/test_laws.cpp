#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cleanring/constructions.hpp"
#include "cleanring/dsl.hpp"
#include "cleanring/ideals.hpp"
#include "cleanring/laws.hpp"
#include "oracles.hpp"

using namespace cleanring;

namespace {

IdealSet gen(const FiniteRing& R, std::vector<Elem> g) { return ideal_closure(R, g); }

FiniteRing ring(const char* spec) { return *build_ring(spec).finite; }

bool has_note(const LawReport& r, const std::string& text) {
  for (const std::string& n : r.notes) {
    if (n.find(text) != std::string::npos) return true;
  }
  return false;
}

const std::vector<LawReport>& catalog() {
  static const std::vector<LawReport> reports = run_catalog();
  return reports;
}

}  // namespace

TEST(LawCatalog, FifteenOrMoreDistinctLaws) {
  std::set<std::string> ids;
  for (const LawInfo& l : law_catalog()) {
    EXPECT_FALSE(l.statement.empty());
    ids.insert(l.id);
  }
  EXPECT_EQ(ids.size(), law_catalog().size());
  EXPECT_GE(ids.size(), 15u);
  EXPECT_THROW(law_info("no_such_law"), DomainError);
}

TEST(LawCatalog, CatalogRunsEveryLawWithoutFailure) {
  const auto& reports = catalog();
  EXPECT_TRUE(all_passed(reports)) << summary_table(reports, false);
  for (const LawSummary& s : summarize(reports)) {
    EXPECT_GT(s.pass, 0u) << s.law;
    EXPECT_EQ(s.fail, 0u) << s.law;
  }
}

TEST(LawCatalog, ReportsAreWellFormed) {
  for (const LawReport& r : catalog()) {
    ASSERT_FALSE(r.inputs.empty()) << r.law;
    if (r.verdict == LawVerdict::skipped) EXPECT_FALSE(r.reason.empty()) << r.law;
    if (r.verdict == LawVerdict::fail) EXPECT_TRUE(r.witness.has_value()) << r.law;
    const Json j = r.to_json();
    EXPECT_EQ(j.begin().key(), "law");
    EXPECT_FALSE(j.contains("seconds"));
  }
}

TEST(LawCatalog, SortedByLawOrder) {
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < law_catalog().size(); ++i) rank[law_catalog()[i].id] = i;
  const auto& reports = catalog();
  for (std::size_t i = 1; i < reports.size(); ++i) {
    EXPECT_LE(rank[reports[i - 1].law], rank[reports[i].law]);
  }
}

TEST(LawCatalog, JsonIsDeterministic) {
  const std::string a = reports_to_json_lines(catalog());
  const std::string b = reports_to_json_lines(run_catalog());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
  const std::string last = a.substr(a.rfind('\n', a.size() - 2) + 1);
  const Json summary = Json::parse(last).at("summary");
  EXPECT_EQ(summary.at("fail"), 0);
  EXPECT_EQ(summary.at("reports").get<std::size_t>(), catalog().size());
}

TEST(LawCatalog, CoversEveryIdealOfSmallRings) {
  // Every ideal of every catalog ring with order <= 64 gets the finite scan.
  std::map<std::string, std::size_t> scanned;
  for (const LawReport& r : catalog()) {
    if (r.law == "finite_ideals_clean") ++scanned[r.inputs.front().second];
  }
  const std::vector<std::string> specs = catalog_specs();
  EXPECT_GE(specs.size(), 25u);
  for (const std::string& s : specs) {
    const FiniteRing R = ring(s.c_str());
    if (R.order() <= kDefaultIdealEnumerationCap) EXPECT_EQ(scanned[s], all_ideals(R).size()) << s;
    EXPECT_GT(scanned[s], 0u) << s;
  }
}

TEST(LawCatalog, DiscriminatingInstancesExist) {
  std::size_t discriminating_products = 0, failing_tuples = 0;
  for (const LawReport& r : catalog()) {
    if (r.law == "product_ideal" && r.strength == InstanceStrength::discriminating) {
      ++discriminating_products;
      if (has_note(r, "failing tuple")) ++failing_tuples;
    }
  }
  EXPECT_GE(discriminating_products, 5u);
  EXPECT_GE(failing_tuples, 3u);
}

TEST(Laws, ProperIdeals) {
  EXPECT_EQ(law_proper_ideals(zn(6)).verdict, LawVerdict::pass);
  EXPECT_EQ(law_proper_ideals(ring("(matrix 2 (zn 2))")).verdict, LawVerdict::pass);
  const LawReport trivial = law_proper_ideals(zn(1));
  EXPECT_EQ(trivial.verdict, LawVerdict::pass);
  EXPECT_TRUE(has_note(trivial, "no proper ideals"));
  EXPECT_TRUE(has_note(law_proper_ideals(ring("(matrix 2 (zn 3))")), "principal"));
}

TEST(Laws, WeaklyExchange) {
  const FiniteRing z6 = zn(6);
  const LawReport r = law_weakly_exchange(z6, gen(z6, {3}));
  EXPECT_EQ(r.verdict, LawVerdict::pass);
  EXPECT_EQ(r.strength, InstanceStrength::discriminating);
  EXPECT_EQ(law_weakly_exchange(z6, zero_ideal(z6)).verdict, LawVerdict::pass);
}

TEST(Laws, CentralEquivalenceSkipsNonCentralIdempotents) {
  const FiniteRing T = ring("(tri2 (zn 2) (zn 2) regular)");
  const LawReport r = law_central_equivalence(T, whole_ideal(T));
  EXPECT_EQ(r.verdict, LawVerdict::skipped);
  EXPECT_NE(r.reason.find("not central"), std::string::npos);
  const FiniteRing z6 = zn(6);
  for (const IdealSet& I : all_ideals(z6)) EXPECT_EQ(law_central_equivalence(z6, I).verdict, LawVerdict::pass);
}

TEST(Laws, ReducedNeedsNoNilpotents) {
  const FiniteRing z4 = zn(4);
  const LawReport r = law_reduced(z4, whole_ideal(z4));
  EXPECT_EQ(r.verdict, LawVerdict::skipped);
  EXPECT_NE(r.reason.find("element 2"), std::string::npos);
  EXPECT_EQ(law_reduced(zn(6), whole_ideal(zn(6))).verdict, LawVerdict::pass);
  const FiniteRing k = ring("(product (zn 2) (zn 2))");
  EXPECT_EQ(law_reduced(k, whole_ideal(k)).verdict, LawVerdict::pass);
}

TEST(Laws, UniqueImpliesCentral) {
  const FiniteRing z2 = zn(2);
  // In Z_2 every element has exactly one working idempotent, so the antecedent holds.
  const LawReport r = law_unique_central(z2, whole_ideal(z2));
  EXPECT_EQ(r.verdict, LawVerdict::pass);
  EXPECT_FALSE(has_note(r, "antecedent false"));
  EXPECT_TRUE(has_note(law_unique_central(zn(3), whole_ideal(zn(3))), "antecedent false"));
}

TEST(Laws, DetCofactorExhaustiveAndSampled) {
  const LawReport ex = law_det_cofactor(zn(6), 2, std::nullopt);
  EXPECT_EQ(ex.verdict, LawVerdict::pass);
  EXPECT_EQ(ex.scanned, 6u * 6 * 6 * 6 * 6 * 4);
  for (std::size_t n : {5, 6}) {
    const LawReport s = law_det_cofactor(zn(n), 3, 200);
    EXPECT_EQ(s.verdict, LawVerdict::pass);
    EXPECT_EQ(s.scanned, 200u);
  }
  EXPECT_EQ(law_det_cofactor(ring("(matrix 2 (zn 2))"), 2, 10).verdict, LawVerdict::skipped);
}

TEST(Laws, DetCofactorIdentityAgainstLeibniz) {
  // The identity itself, with an independent determinant.
  const FiniteRing R = zn(6);
  std::mt19937_64 rng(11);
  for (int s = 0; s < 300; ++s) {
    std::vector<Elem> a(9);
    for (Elem& v : a) v = static_cast<Elem>(rng() % 6);
    const Elem x = static_cast<Elem>(rng() % 6);
    const std::size_t i = rng() % 3, j = rng() % 3;
    std::vector<Elem> b = a;
    b[i * 3 + j] = R.add(b[i * 3 + j], x);
    // The cofactor is the coefficient of x: det(A + E_ij) - det(A).
    std::vector<Elem> e = a;
    e[i * 3 + j] = R.add(e[i * 3 + j], 1);
    const Elem cof = R.sub(oracle::leibniz_det(R, 3, e), oracle::leibniz_det(R, 3, a));
    EXPECT_EQ(oracle::leibniz_det(R, 3, b), R.add(oracle::leibniz_det(R, 3, a), R.mul(x, cof)));
    EXPECT_EQ(cofactor(R, 3, a, i, j), cof);
  }
}

TEST(Laws, MatrixIdeal) {
  const FiniteRing z4 = zn(4), z6 = zn(6);
  EXPECT_EQ(law_matrix_ideal(z4, gen(z4, {2}), 2).verdict, LawVerdict::pass);
  EXPECT_EQ(law_matrix_ideal(z6, gen(z6, {3}), 2).verdict, LawVerdict::pass);
  EXPECT_EQ(law_matrix_ideal(z6, zero_ideal(z6), 2).verdict, LawVerdict::pass);
  const FiniteRing M = ring("(matrix 2 (zn 2))");
  EXPECT_EQ(law_matrix_ideal(M, whole_ideal(M), 2).verdict, LawVerdict::skipped);
}

TEST(Laws, ProductFinite) {
  const FiniteRing z4 = zn(4), z6 = zn(6), z2 = zn(2);
  const std::vector<IdealSet> pair{gen(z4, {2}), gen(z6, {3})};
  EXPECT_EQ(law_product(pair).verdict, LawVerdict::pass);
  const std::vector<IdealSet> single{gen(z4, {2})};
  EXPECT_TRUE(has_note(law_product(single), "single factor"));
  const std::vector<IdealSet> split{whole_ideal(z2), zero_ideal(z2)};
  EXPECT_EQ(law_product(split).verdict, LawVerdict::pass);
}

TEST(Laws, ProductMixedFindsOppositeSignTuple) {
  const PrimeSet P({3, 5});
  const LocIdeal whole = principal_loc_ideal(P, {0, 0});
  const std::vector<ProductIdealComponent> comps{LocIdealComponent{P, whole}, LocIdealComponent{P, whole}};
  const LawReport r = law_product_mixed(comps);
  EXPECT_EQ(r.verdict, LawVerdict::pass);
  EXPECT_EQ(r.strength, InstanceStrength::discriminating);
  EXPECT_TRUE(has_note(r, "failing tuple"));

  const std::vector<ProductIdealComponent> one_bad{LocIdealComponent{P, whole},
                                                   LocIdealComponent{P, principal_loc_ideal(P, {1, 1})}};
  const LawReport ok = law_product_mixed(one_bad);
  EXPECT_EQ(ok.verdict, LawVerdict::pass);
  EXPECT_FALSE(has_note(ok, "failing tuple"));
}

TEST(Laws, Morita) {
  const FiniteRing z2 = zn(2), z4 = zn(4), z6 = zn(6);
  const MoritaInstance full{z2, z2, Bimodule::regular(z2), Bimodule::regular(z2)};
  EXPECT_EQ(law_morita(full, whole_ideal(z2), whole_ideal(z2)).verdict, LawVerdict::pass);
  const MoritaInstance zero{z2, z2, Bimodule::zero(z2, z2), Bimodule::zero(z2, z2)};
  const LawReport r = law_morita(zero, whole_ideal(z2), zero_ideal(z2));
  EXPECT_EQ(r.verdict, LawVerdict::pass);
  EXPECT_TRUE(has_note(r, "R x S"));
  const MoritaInstance mixed{z4, z6, Bimodule::cyclic(z4, z6, 2), Bimodule::cyclic(z6, z4, 2)};
  EXPECT_EQ(law_morita(mixed, gen(z4, {2}), gen(z6, {3})).verdict, LawVerdict::pass);
}

TEST(Laws, Tri3BothDirections) {
  const FiniteRing z2 = zn(2);
  const Bimodule r2 = Bimodule::regular(z2), o2 = Bimodule::zero(z2, z2);
  const Tri3Instance t{z2, z2, z2, r2, r2, r2, std::nullopt};
  const IdealSet R = whole_ideal(z2), O = zero_ideal(z2);
  EXPECT_EQ(law_tri3_forward(t, R, R, O).verdict, LawVerdict::pass);
  EXPECT_EQ(law_tri3_converse(t, R, O, R).verdict, LawVerdict::pass);
  const Tri3Instance flat{z2, z2, z2, o2, o2, o2, std::nullopt};
  EXPECT_TRUE(has_note(law_tri3_forward(flat, R, R, R), "A1 x A2 x A3"));
}

TEST(Laws, Peirce) {
  const FiniteRing z6 = zn(6);
  const std::vector<std::vector<Elem>> sets{{1}, {3, 4}};
  for (const IdealSet& I : all_ideals(z6)) EXPECT_EQ(law_peirce(z6, sets, I).verdict, LawVerdict::pass);
  // E11 and E22 in M_2(Z_2): digits (1,0,0,0) and (0,0,0,1).
  const FiniteRing M = ring("(matrix 2 (zn 2))");
  const std::vector<std::vector<Elem>> es{{8, 1}};
  EXPECT_EQ(law_peirce(M, es, whole_ideal(M)).verdict, LawVerdict::pass);
  const std::vector<std::vector<Elem>> bad{{3}};
  EXPECT_THROW(law_peirce(z6, bad, whole_ideal(z6)), DomainError);
}

TEST(Laws, PowerSeries) {
  const FiniteRing z2 = zn(2), z4 = zn(4);
  EXPECT_EQ(law_series(z2, whole_ideal(z2), 3).verdict, LawVerdict::pass);
  EXPECT_EQ(law_series(z4, gen(z4, {2}), 2).verdict, LawVerdict::pass);
  EXPECT_TRUE(has_note(law_series(z4, gen(z4, {2}), 1), "k = 1"));
}

TEST(Laws, Idealization) {
  const FiniteRing z4 = zn(4), z6 = zn(6);
  const std::vector<Elem> n02{0, 2};
  EXPECT_EQ(law_idealization(z4, Bimodule::regular(z4), gen(z4, {2}), n02).verdict, LawVerdict::pass);
  const std::vector<Elem> n03{0, 3};
  EXPECT_EQ(law_idealization(z6, Bimodule::regular(z6), gen(z6, {3}), n03).verdict, LawVerdict::pass);
  const std::vector<Elem> n0{0};
  EXPECT_TRUE(has_note(law_idealization(z4, Bimodule::zero(z4, z4), whole_ideal(z4), n0), "M = 0"));
}

TEST(Laws, RadicalQuotient) {
  const FiniteRing z4 = zn(4), z8 = zn(8), z6 = zn(6);
  EXPECT_EQ(law_radical_quotient(z4, whole_ideal(z4)).verdict, LawVerdict::pass);
  EXPECT_EQ(law_radical_quotient(z8, gen(z8, {2})).verdict, LawVerdict::pass);
  EXPECT_TRUE(has_note(law_radical_quotient(z6, gen(z6, {2})), "J(R) = 0"));
  EXPECT_EQ(law_radical_quotient(z4, zero_ideal(z4)).verdict, LawVerdict::skipped);
}

TEST(Laws, SumWithRadical) {
  const FiniteRing z8 = zn(8), z4 = zn(4);
  const std::vector<IdealSet> j8{gen(z8, {4})};
  EXPECT_EQ(law_sum_with_radical(z8, gen(z8, {4}), j8).verdict, LawVerdict::pass);
  const std::vector<IdealSet> j4{gen(z4, {2}), zero_ideal(z4)};
  EXPECT_EQ(law_sum_with_radical(z4, gen(z4, {2}), j4).verdict, LawVerdict::pass);
  const std::vector<IdealSet> outside{whole_ideal(z4)};
  EXPECT_THROW(law_sum_with_radical(z4, zero_ideal(z4), outside), DomainError);
}

TEST(Laws, RadicalAndLifting) {
  for (const char* s : {"(zn 12)", "(matrix 2 (zn 2))", "(tri2 (zn 2) (zn 2) regular)", "(series (zn 4) 3)"}) {
    const FiniteRing R = ring(s);
    EXPECT_EQ(law_radical(R).verdict, LawVerdict::pass) << s;
    EXPECT_EQ(law_lifting(R).verdict, LawVerdict::pass) << s;
  }
}

TEST(Laws, LocalizedLaws) {
  const PrimeSet p35({3, 5}), p23({2, 3});
  const LocIdeal w35 = principal_loc_ideal(p35, {0, 0});
  const LocIdeal w23 = principal_loc_ideal(p23, {0, 0});
  EXPECT_EQ(law_weakly_exchange_loc(p35, w35).verdict, LawVerdict::pass);
  EXPECT_FALSE(has_note(law_weakly_exchange_loc(p35, w35), "antecedent false"));
  // Z_(2,3) is not weakly clean, and not weakly exchange either.
  EXPECT_TRUE(has_note(law_weakly_exchange_loc(p23, w23), "antecedent false"));
  EXPECT_TRUE(has_note(law_reduced_loc(p23, w23), "antecedent false"));
  EXPECT_EQ(law_central_equivalence_loc(p23, w23).verdict, LawVerdict::pass);
  EXPECT_EQ(law_proper_ideals_loc(p35).verdict, LawVerdict::pass);
  EXPECT_EQ(loc_ideal_family(p35).size(), 10u);
  EXPECT_EQ(loc_ideal_family(PrimeSet({2, 3, 5})).size(), 28u);
}
