// Release gate: one PASS/FAIL line per acceptance criterion; exit status 1
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cleanring/clean.hpp"
#include "cleanring/dsl.hpp"
#include "cleanring/ideals.hpp"
#include "cleanring/laws.hpp"
#include "cleanring/localized.hpp"
#include "cleanring/serialize.hpp"
#include "loc_oracle.hpp"

using namespace cleanring;

namespace {

struct Captured {
  int status = -1;
  std::string out;
  double seconds = 0;
};

Captured capture(const std::string& cmd) {
  Captured c;
  const auto t0 = std::chrono::steady_clock::now();
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return c;
  char buf[1 << 16];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) c.out.append(buf, n);
  c.status = pclose(p);
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

std::vector<FiniteRing> catalog_rings() {
  std::vector<FiniteRing> rings;
  for (const std::string& s : catalog_specs()) rings.push_back(*build_ring(s).finite);
  return rings;
}

int failures = 0;

void line(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << n << ". " << what << '\n';
  if (!ok) ++failures;
}

// x, x - 1 non-units and x + 1 a unit: clean_minus only.
bool minus_only(const LocCleanClass& c) { return !c.clean_plus && c.clean_minus; }
bool plus_only(const LocCleanClass& c) { return c.clean_plus && !c.clean_minus; }

bool small(const LocElem& x, std::size_t bound) { return abs(x.num()) <= bound && x.den() <= bound; }

}  // namespace

int main() {
  const std::string cli = CLEANRING_CLI;
  const std::vector<FiniteRing> rings = catalog_rings();

  // 1 and 8 share the two CLI runs.
  const Captured first = capture(cli + " laws --catalog --json");
  const Captured second = capture(cli + " laws --catalog --json");
  {
    std::set<std::string> laws;
    std::size_t fails = 0, reports = 0;
    std::istringstream in(first.out);
    for (std::string l; std::getline(in, l);) {
      const Json j = Json::parse(l);
      if (j.contains("summary")) continue;
      ++reports;
      if (j.at("verdict") == "pass") laws.insert(j.at("law").get<std::string>());
      fails += j.at("verdict") == "fail";
    }
    std::ostringstream s;
    s << "law catalog: " << laws.size() << " laws exercised, " << reports << " reports, " << fails
      << " failures, " << first.seconds << " s";
    line(1, first.status == 0 && laws.size() >= 15 && fails == 0 && reports > 0 && first.seconds < 60, s.str());
  }

  const ExamplesReport rep = reproduce_examples();
  {
    const auto& a = rep.ideal_example;
    const PrimeSet& P = a.primes;
    bool ok = P == PrimeSet({3, 5}) && a.generator == LocElem(P, 2, 11) && a.generator_is_unit && a.ideal.is_whole();
    ok = ok && a.verdict.weakly_clean && !a.verdict.clean;
    const auto oracle = oracle::search_localized({3, 5}, 1, kDefaultSearchBound);
    ok = ok && a.oracle_non_clean && small(*a.oracle_non_clean, kDefaultSearchBound) &&
         !clean_class(P, *a.oracle_non_clean).clean() && oracle.not_clean && !oracle.not_weakly_clean &&
         !a.oracle_non_weakly_clean;
    const LocElem x(P, 3, 8);
    ok = ok && a.reference_witness == x && !is_unit(P, x) && !is_unit(P, x - LocElem(P, 1)) &&
         is_unit(P, x + LocElem(P, 1)) && minus_only(a.reference_class);
    line(2, ok,
         "Z_(3,5): <2/11> = R, weakly clean, not clean; oracle witness " +
             (a.oracle_non_clean ? a.oracle_non_clean->to_string() : std::string("none")) + ", reported witness " +
             a.reference_witness.to_string());
  }

  {
    const auto& b = rep.product_example;
    const PrimeSet& P = b.primes;
    bool ok = b.generators_are_units && b.first_weakly_clean && b.second_weakly_clean && !b.product.weakly_clean &&
              b.product.witness.size() == 2;
    std::string shown;
    if (ok) {
      const LocElem& u = std::get<LocComponent>(b.product.witness[0]).element;
      const LocElem& v = std::get<LocComponent>(b.product.witness[1]).element;
      const LocCleanClass cu = clean_class(P, u), cv = clean_class(P, v);
      ok = (minus_only(cu) && plus_only(cv)) || (plus_only(cu) && minus_only(cv));
      ok = ok && !product_clean_class(b.product.witness).weakly_clean();
      shown = "(" + u.to_string() + ", " + v.to_string() + ")";
    }
    const LocElem x(P, 3, 8);
    ok = ok && minus_only(clean_class(P, x)) && plus_only(clean_class(P, -x)) && !b.reference_tuple.weakly_clean();
    line(3, ok, "I1 + I2 in Z_(3,5) x Z_(3,5) not weakly clean; witness " + shown + " and (3/8, -3/8)");
  }

  {
    std::size_t cases = 0, disagreements = 0;
    for (const auto& c : oracle::localized_envelope(11, kValidatedPrimeCount, 2)) {
      const PrimeSet P(c.primes);
      const LocIdeal I = principal_loc_ideal(P, c.exponents);
      const auto found = oracle::search_localized(c.primes, c.generator, kDefaultSearchBound);
      ++cases;
      disagreements += is_clean_ideal_loc(P, I) == found.not_clean.has_value();
      disagreements += is_weakly_clean_ideal_loc(P, I) == found.not_weakly_clean.has_value();
    }
    line(4, cases > 0 && disagreements == 0,
         "analytic criterion vs oracle: " + std::to_string(cases) + " (P, I) cases, " +
             std::to_string(disagreements) + " disagreements");
  }

  {
    std::size_t bad = 0;
    for (const FiniteRing& R : rings) {
      const std::vector<Elem> J = jacobson_radical(R);
      const QuotientRing Q = quotient(R, J, "J");
      bad += !check_radical(R, J).all() || jacobson_radical(Q.ring).size() != 1;
    }
    line(5, bad == 0,
         "radical checks on " + std::to_string(rings.size()) + " catalog rings, R/J radical zero: " +
             std::to_string(bad) + " failures");
  }

  {
    std::size_t cosets = 0, bad = 0;
    for (const FiniteRing& R : rings) {
      const std::vector<Elem> Jm = jacobson_radical(R);
      const IdealSet J(R, Jm);
      const QuotientRing Q = quotient(R, Jm, "J");
      for (Elem c : idempotents(Q.ring)) {
        ++cosets;
        const std::optional<Elem> e = lift_idempotent(R, Q, Jm, c);
        bad += !e || R.mul(*e, *e) != *e || Q.projection[*e] != c || !J.contains(R.sub(*e, Q.representatives[c]));
      }
    }
    line(6, cosets > 0 && bad == 0,
         "idempotent lifting: " + std::to_string(cosets) + " idempotent cosets, " + std::to_string(bad) +
             " failures");
  }

  {
    const LawReport ex = law_det_cofactor(*build_ring("(zn 6)").finite, 2, std::nullopt);
    const LawReport s5 = law_det_cofactor(*build_ring("(zn 5)").finite, 3, 200);
    const LawReport s6 = law_det_cofactor(*build_ring("(zn 6)").finite, 3, 200);
    const bool ok = ex.verdict == LawVerdict::pass && ex.scanned == 6u * 6 * 6 * 6 * 6 * 4 &&
                    s5.verdict == LawVerdict::pass && s5.scanned == 200 && s6.verdict == LawVerdict::pass &&
                    s6.scanned == 200;
    line(7, ok,
         "determinant/cofactor identity: Z_6 k=2 exhaustive (" + std::to_string(ex.scanned) +
             " cases), Z_5 and Z_6 k=3 with 200 samples each");
  }

  line(8, first.status == 0 && second.status == 0 && !first.out.empty() && first.out == second.out,
       "two runs of laws --catalog --json are byte-identical (" + std::to_string(first.out.size()) + " bytes)");

  {
    std::size_t ideals = 0, bad = 0;
    for (const FiniteRing& R : rings) {
      for (const IdealSet& I : all_ideals(R, R.order())) {
        ++ideals;
        bad += !is_clean_ideal(R, I).holds;
      }
    }
    line(9, ideals > 0 && bad == 0,
         "exhaustive clean scan: " + std::to_string(ideals) + " ideals of " + std::to_string(rings.size()) +
             " catalog rings, " + std::to_string(bad) + " not clean");
  }

  return failures == 0 ? 0 : 1;
}
