#include "cleanring/laws.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cleanring/dsl.hpp"
#include "cleanring/error.hpp"

namespace cleanring {

std::string to_string(LawVerdict v) {
  switch (v) {
    case LawVerdict::pass:
      return "pass";
    case LawVerdict::fail:
      return "fail";
    case LawVerdict::skipped:
      return "skipped";
  }
  return "unknown";
}

std::string to_string(LawDirection d) {
  switch (d) {
    case LawDirection::iff:
      return "iff";
    case LawDirection::implies:
      return "implies";
    case LawDirection::unconditional:
      return "unconditional";
  }
  return "unknown";
}

std::string to_string(InstanceStrength s) {
  return s == InstanceStrength::degenerate ? "degenerate" : "discriminating";
}

const std::vector<LawInfo>& law_catalog() {
  static const std::vector<LawInfo> laws{
      {"proper_ideals", "R is weakly clean (clean) iff every proper ideal of R is weakly clean (clean)",
       LawDirection::iff},
      {"weakly_clean_implies_weakly_exchange", "a weakly clean ideal is a weakly exchange ideal",
       LawDirection::implies},
      {"central_idempotents_equivalence",
       "when the idempotents in I are central, I is weakly clean iff it is weakly exchange", LawDirection::iff},
      {"reduced_exchange_implies_weakly_clean",
       "in a ring without nonzero nilpotents a weakly exchange ideal is weakly clean", LawDirection::implies},
      {"det_cofactor", "det(A + x E_ij) = det(A) + x cof_ij(A) over a commutative ring",
       LawDirection::unconditional},
      {"matrix_ideal", "I is clean in R iff M_k(I) is weakly clean in M_k(R), R commutative", LawDirection::iff},
      {"product_ideal",
       "a product of ideals is weakly clean iff every factor is weakly clean and at most one is not clean",
       LawDirection::iff},
      {"unique_implies_central", "every idempotent in a uniquely weakly clean ideal is central",
       LawDirection::implies},
      {"morita_ideal",
       "I, J weakly clean with one of them clean gives a weakly clean ideal [[I, M], [N, J]] of the Morita context "
       "ring with zero pairings",
       LawDirection::implies},
      {"tri3_forward",
       "I, J, K weakly clean with at least two clean gives a weakly clean ideal of the 3x3 triangular ring",
       LawDirection::implies},
      {"tri3_converse", "a weakly clean ideal of the 3x3 triangular ring has weakly clean diagonal ideals I, J, K",
       LawDirection::implies},
      {"peirce_corners",
       "for a complete orthogonal set e_1..e_n, weakly clean corner ideals e_i I e_i with at most one not clean "
       "make I weakly clean",
       LawDirection::implies},
      {"power_series",
       "I is weakly clean iff I[x]/(x^k) is weakly clean in R[x]/(x^k); f is weakly clean iff its constant term is",
       LawDirection::iff},
      {"idealization",
       "units of R(M) are (unit, m), idempotents are (idempotent, 0), and I(N) is weakly clean (clean) iff I is",
       LawDirection::iff},
      {"radical_quotient", "when J(R) lies in I, I is weakly clean iff I/J(R) is weakly clean in R/J(R)",
       LawDirection::iff},
      {"sum_with_radical", "I weakly clean and J inside J(R) give I + J weakly clean", LawDirection::implies},
      {"finite_ideals_clean", "every ideal of a finite ring is clean, by exhaustive decomposition search",
       LawDirection::unconditional},
      {"radical_checks",
       "J(R) is quasi-regular on both sides, an ideal, 1 + J(R) consists of units, J(R) has no nonzero "
       "idempotent, and J(R/J(R)) = 0",
       LawDirection::unconditional},
      {"idempotent_lifting", "every idempotent coset of R/J(R) lifts to an idempotent of R",
       LawDirection::unconditional},
  };
  return laws;
}

const LawInfo& law_info(const std::string& id) {
  for (const LawInfo& l : law_catalog()) {
    if (l.id == id) return l;
  }
  throw DomainError("unknown law '" + id + "'");
}

Json LawReport::to_json() const {
  Json j;
  j["law"] = law;
  j["direction"] = to_string(law_info(law).direction);
  j["strength"] = to_string(strength);
  Json in = Json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  j["inputs"] = std::move(in);
  j["verdict"] = to_string(verdict);
  if (!reason.empty()) j["reason"] = reason;
  if (witness) j["witness"] = *witness;
  if (!notes.empty()) j["notes"] = notes;
  j["scanned"] = scanned;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string ring_name(const FiniteRing& R) { return R.construction().empty() ? R.label() : R.construction(); }

std::string ideal_name(const IdealSet& I) {
  std::string s = I.label();
  if (s != "0" && s != "R") s += " (size " + std::to_string(I.size()) + ")";
  return s;
}

class Report {
 public:
  Report(std::string law, InstanceStrength strength) : start_(Clock::now()) {
    r_.law = std::move(law);
    r_.strength = strength;
  }

  Report& input(std::string key, std::string value) {
    r_.inputs.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  void note(std::string n) { r_.notes.push_back(std::move(n)); }
  void scanned(std::size_t n) { r_.scanned += n; }
  bool failed() const { return r_.verdict == LawVerdict::fail; }

  /// Keeps the first failure.
  void fail(std::string reason, Json witness) {
    if (failed()) return;
    r_.verdict = LawVerdict::fail;
    r_.reason = std::move(reason);
    r_.witness = std::move(witness);
  }
  void skip(std::string reason) {
    r_.verdict = LawVerdict::skipped;
    r_.reason = std::move(reason);
  }

  void implies(bool antecedent, bool consequent, const std::string& what, const std::function<Json()>& witness) {
    if (!antecedent) {
      vacuous_ = true;
      return;
    }
    if (!consequent) fail(what, witness());
  }

  void iff(bool lhs, bool rhs, const std::string& what, const std::function<Json()>& witness) {
    if (lhs != rhs) {
      fail(what + ": left side " + (lhs ? "true" : "false") + ", right side " + (rhs ? "true" : "false"), witness());
    }
  }

  LawReport done() {
    if (vacuous_ && !failed() && r_.verdict != LawVerdict::skipped) note("antecedent false");
    r_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(r_);
  }

 private:
  LawReport r_;
  Clock::time_point start_;
  bool vacuous_ = false;
};

Json verdict_json(const FiniteRing& R, const IdealSet& I, const IdealVerdict& v) { return verdict_to_json(R, I, v); }

std::optional<Elem> noncentral_idempotent_in(const FiniteRing& R, const IdealSet& I) {
  for (Elem e : R.idempotents()) {
    if (I.contains(e) && !is_central(R, e)) return e;
  }
  return std::nullopt;
}

std::optional<Elem> nonzero_nilpotent(const FiniteRing& R) {
  for (Elem x = 1; x < R.order(); ++x) {
    if (is_nilpotent(R, x)) return x;
  }
  return std::nullopt;
}

Json central_failure(const FiniteRing& R, Elem e) {
  for (Elem r = 0; r < R.order(); ++r) {
    if (R.mul(e, r) != R.mul(r, e)) {
      return Json{{"idempotent", e}, {"element", r}, {"er", R.mul(e, r)}, {"re", R.mul(r, e)}};
    }
  }
  return Json{{"idempotent", e}};
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

/// Index of a tuple under the first-digit-most-significant encoding with a
/// common radix.
Elem encode(std::span<const Elem> digits, std::size_t radix) {
  std::size_t idx = 0;
  for (Elem d : digits) idx = idx * radix + d;
  return static_cast<Elem>(idx);
}

std::vector<Elem> members_of(const IdealSet& I) { return {I.members().begin(), I.members().end()}; }

}  // namespace

LawReport law_proper_ideals(const FiniteRing& R) {
  Report rep("proper_ideals", InstanceStrength::degenerate);
  rep.input("ring", ring_name(R));
  const std::vector<IdealSet> ideals = ideals_for_scan(R);
  if (R.order() > kDefaultIdealEnumerationCap) {
    rep.note("proper principal ideals only; a nonunit lies in a proper ideal iff its principal ideal is proper");
  }
  const IdealSet whole = whole_ideal(R);
  const IdealVerdict ring_wc = is_weakly_clean_ideal(R, whole);
  const IdealVerdict ring_c = is_clean_ideal(R, whole);
  rep.scanned(R.order());
  bool all_wc = true, all_c = true;
  std::optional<Json> bad_wc, bad_c;
  std::size_t proper = 0;
  for (const IdealSet& I : ideals) {
    if (I.is_whole()) continue;
    ++proper;
    const IdealVerdict wc = is_weakly_clean_ideal(R, I);
    const IdealVerdict c = is_clean_ideal(R, I);
    rep.scanned(I.size());
    if (!wc.holds && all_wc) bad_wc = verdict_json(R, I, wc);
    if (!c.holds && all_c) bad_c = verdict_json(R, I, c);
    all_wc = all_wc && wc.holds;
    all_c = all_c && c.holds;
  }
  if (proper == 0) rep.note("no proper ideals");
  rep.iff(ring_wc.holds, all_wc, "weakly clean", [&] { return bad_wc ? *bad_wc : verdict_json(R, whole, ring_wc); });
  rep.iff(ring_c.holds, all_c, "clean", [&] { return bad_c ? *bad_c : verdict_json(R, whole, ring_c); });
  return rep.done();
}

LawReport law_weakly_exchange(const FiniteRing& R, const IdealSet& I) {
  Report rep("weakly_clean_implies_weakly_exchange", InstanceStrength::discriminating);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I));
  const IdealVerdict wc = is_weakly_clean_ideal(R, I);
  const IdealVerdict strict = is_weakly_exchange_ideal(R, I, ExchangeMode::strict);
  const IdealVerdict relaxed = is_weakly_exchange_ideal(R, I, ExchangeMode::relaxed);
  rep.scanned(wc.scanned + strict.scanned + relaxed.scanned);
  if (strict.holds != relaxed.holds) {
    rep.note(std::string("exchange modes differ: idempotents in I ") + (strict.holds ? "suffice" : "do not suffice") +
             ", all idempotents " + (relaxed.holds ? "suffice" : "do not suffice"));
  }
  if (strict.holds && !relaxed.holds) {
    rep.fail("strict exchange holds but relaxed does not", verdict_json(R, I, relaxed));
  }
  rep.implies(wc.holds, strict.holds, "weakly clean ideal is not weakly exchange (idempotents taken in I)",
              [&] { return verdict_json(R, I, strict); });
  return rep.done();
}

LawReport law_central_equivalence(const FiniteRing& R, const IdealSet& I) {
  Report rep("central_idempotents_equivalence", InstanceStrength::discriminating);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I));
  if (auto e = noncentral_idempotent_in(R, I)) {
    rep.skip("idempotent " + std::to_string(*e) + " in I is not central");
    return rep.done();
  }
  const IdealVerdict wc = is_weakly_clean_ideal(R, I);
  const IdealVerdict we = is_weakly_exchange_ideal(R, I, ExchangeMode::strict);
  rep.scanned(wc.scanned + we.scanned);
  rep.iff(wc.holds, we.holds, "weakly clean vs weakly exchange",
          [&] { return verdict_json(R, I, wc.holds ? we : wc); });
  return rep.done();
}

LawReport law_reduced(const FiniteRing& R, const IdealSet& I) {
  Report rep("reduced_exchange_implies_weakly_clean", InstanceStrength::degenerate);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I));
  if (auto x = nonzero_nilpotent(R)) {
    rep.skip("element " + std::to_string(*x) + " is a nonzero nilpotent");
    return rep.done();
  }
  const IdealVerdict we = is_weakly_exchange_ideal(R, I, ExchangeMode::strict);
  const IdealVerdict wc = is_weakly_clean_ideal(R, I);
  rep.scanned(wc.scanned + we.scanned);
  rep.implies(we.holds, wc.holds, "weakly exchange ideal is not weakly clean", [&] { return verdict_json(R, I, wc); });
  return rep.done();
}

LawReport law_unique_central(const FiniteRing& R, const IdealSet& I) {
  Report rep("unique_implies_central", InstanceStrength::discriminating);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I));
  const IdealVerdict u = is_uniquely_weakly_clean_ideal(R, I);
  rep.scanned(u.scanned);
  const auto e = noncentral_idempotent_in(R, I);
  rep.implies(u.holds, !e, "uniquely weakly clean ideal contains a non-central idempotent",
              [&] { return central_failure(R, *e); });
  return rep.done();
}

LawReport law_finite_cleanness(const FiniteRing& R, const IdealSet& I) {
  Report rep("finite_ideals_clean", InstanceStrength::degenerate);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I));
  const IdealVerdict c = is_clean_ideal(R, I);
  const IdealVerdict wc = is_weakly_clean_ideal(R, I);
  rep.scanned(c.scanned + wc.scanned);
  if (!c.holds) rep.fail("ideal is not clean", verdict_json(R, I, c));
  if (!wc.holds) rep.fail("ideal is not weakly clean", verdict_json(R, I, wc));
  return rep.done();
}

LawReport law_radical(const FiniteRing& R) {
  Report rep("radical_checks", InstanceStrength::discriminating);
  rep.input("ring", ring_name(R));
  const std::vector<Elem> J = jacobson_radical(R);
  const RadicalChecks checks = check_radical(R, J);
  const QuotientRing q = quotient(R, J, "J");
  const std::vector<Elem> JQ = jacobson_radical(q.ring);
  rep.scanned(R.order() + q.ring.order());
  rep.note("|J| = " + std::to_string(J.size()) + ", |R/J| = " + std::to_string(q.ring.order()));
  Json w{{"radical", J},
         {"quasi_regular", checks.quasi_regular},
         {"two_sided", checks.two_sided},
         {"is_ideal", checks.is_ideal},
         {"one_plus_in_units", checks.one_plus_in_units},
         {"no_nonzero_idempotent", checks.no_nonzero_idempotent},
         {"quotient_radical", JQ}};
  if (!checks.all()) rep.fail("a radical check fails", w);
  if (JQ.size() != 1) rep.fail("R/J(R) has a nonzero radical", w);
  return rep.done();
}

LawReport law_lifting(const FiniteRing& R) {
  Report rep("idempotent_lifting", InstanceStrength::discriminating);
  rep.input("ring", ring_name(R));
  const std::vector<Elem> J = jacobson_radical(R);
  std::vector<char> in_j(R.order(), 0);
  for (Elem j : J) in_j[j] = 1;
  const QuotientRing q = quotient(R, J, "J");
  std::size_t lifted = 0;
  for (Elem c = 0; c < q.ring.order(); ++c) {
    rep.scanned(1);
    const std::optional<Elem> e = lift_idempotent(R, q, J, c);
    const bool idempotent_coset = q.ring.is_idempotent(c);
    if (idempotent_coset != e.has_value()) {
      rep.fail("lift result does not match the coset being idempotent", Json{{"coset", c}});
      break;
    }
    if (!e) continue;
    ++lifted;
    if (!R.is_idempotent(*e) || !in_j[R.sub(*e, q.representatives[c])]) {
      rep.fail("lift is not an idempotent of the coset",
               Json{{"coset", c}, {"representative", q.representatives[c]}, {"lift", *e}});
      break;
    }
  }
  rep.note(std::to_string(lifted) + " idempotent cosets lifted");
  return rep.done();
}

LawReport law_radical_quotient(const FiniteRing& R, const IdealSet& I) {
  Report rep("radical_quotient", InstanceStrength::degenerate);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I));
  const IdealSet J = jacobson_ideal(R);
  if (!is_subset(J, I)) {
    rep.skip("J(R) is not contained in I");
    return rep.done();
  }
  if (J.is_zero()) rep.note("J(R) = 0, the quotient is R itself");
  const QuotientRing q = quotient(R, J.members(), "J");
  std::vector<Elem> image;
  for (Elem x : I.members()) image.push_back(q.projection[x]);
  const IdealSet IQ(q.ring, image);
  if (!is_ideal(q.ring, IQ.members())) {
    rep.fail("I/J(R) is not an ideal of R/J(R)", Json{{"image", members_of(IQ)}});
    return rep.done();
  }
  const IdealVerdict wc = is_weakly_clean_ideal(R, I), wcq = is_weakly_clean_ideal(q.ring, IQ);
  const IdealVerdict c = is_clean_ideal(R, I), cq = is_clean_ideal(q.ring, IQ);
  rep.scanned(wc.scanned + wcq.scanned + c.scanned + cq.scanned);
  rep.iff(wc.holds, wcq.holds, "weakly clean in R vs in R/J(R)",
          [&] { return wc.holds ? verdict_json(q.ring, IQ, wcq) : verdict_json(R, I, wc); });
  rep.iff(c.holds, cq.holds, "clean in R vs in R/J(R)",
          [&] { return c.holds ? verdict_json(q.ring, IQ, cq) : verdict_json(R, I, c); });
  for (Elem coset : IQ.members()) {
    if (!q.ring.is_idempotent(coset)) continue;
    const std::optional<Elem> e = lift_idempotent(R, q, J.members(), coset);
    if (!e || !I.contains(*e)) {
      rep.fail("idempotent of I/J(R) does not lift into I", Json{{"coset", coset}});
      break;
    }
  }
  return rep.done();
}

LawReport law_sum_with_radical(const FiniteRing& R, const IdealSet& I, std::span<const IdealSet> radical_ideals) {
  Report rep("sum_with_radical", InstanceStrength::degenerate);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I));
  const IdealSet rad = jacobson_ideal(R);
  const IdealVerdict wc = is_weakly_clean_ideal(R, I);
  rep.scanned(wc.scanned);
  std::size_t nonzero = 0;
  for (const IdealSet& J : radical_ideals) {
    if (!is_subset(J, rad)) throw DomainError("sum_with_radical: " + J.label() + " is not inside J(R)");
    if (!J.is_zero()) ++nonzero;
    const IdealSet S = ideal_sum(I, J);
    const IdealVerdict ws = is_weakly_clean_ideal(R, S);
    rep.scanned(ws.scanned);
    rep.implies(wc.holds, ws.holds, "I + J is not weakly clean for J = " + J.label(), [&] {
      return Json{{"J", members_of(J)}, {"sum", verdict_json(R, S, ws)}};
    });
  }
  rep.note(std::to_string(radical_ideals.size()) + " ideals J inside J(R), " + std::to_string(nonzero) + " nonzero");
  return rep.done();
}

LawReport law_peirce(const FiniteRing& R, std::span<const std::vector<Elem>> sets, const IdealSet& I) {
  Report rep("peirce_corners", InstanceStrength::degenerate);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I));
  const IdealVerdict wc = is_weakly_clean_ideal(R, I);
  rep.scanned(wc.scanned);
  for (const std::vector<Elem>& es : sets) {
    const PeirceReport p = peirce_analysis(R, es, I);
    auto witness = [&] {
      Json corners = Json::array();
      for (const CornerReport& c : p.corners) {
        corners.push_back(Json{{"idempotent", c.idempotent},
                               {"corner_order", c.corner.ring.order()},
                               {"corner_ideal_size", c.ideal.size()},
                               {"clean", c.clean},
                               {"weakly_clean", c.weakly_clean}});
      }
      return Json{{"set", es}, {"corners", corners}, {"ideal", verdict_json(R, I, wc)}};
    };
    for (const CornerReport& c : p.corners) rep.scanned(c.ideal.size());
    rep.implies(p.condition_holds, wc.holds, "corner condition holds but I is not weakly clean", witness);
    if (es.size() == 1) rep.iff(wc.holds, p.condition_holds, "single corner e = 1", witness);
  }
  rep.note(std::to_string(sets.size()) + " complete orthogonal sets");
  return rep.done();
}

LawReport law_det_cofactor(const FiniteRing& R, std::size_t k, std::optional<std::size_t> samples,
                           std::uint64_t seed) {
  Report rep("det_cofactor", InstanceStrength::discriminating);
  rep.input("ring", ring_name(R)).input("k", std::to_string(k));
  if (!R.is_commutative()) {
    rep.skip("R is not commutative");
    return rep.done();
  }
  const std::size_t n = R.order(), cells = k * k;
  auto check = [&](const std::vector<Elem>& a, Elem x, std::size_t i, std::size_t j) {
    std::vector<Elem> b = a;
    b[i * k + j] = R.add(b[i * k + j], x);
    const Elem lhs = det(R, k, b);
    const Elem rhs = R.add(det(R, k, a), R.mul(x, cofactor(R, k, a, i, j)));
    rep.scanned(1);
    if (lhs != rhs) {
      rep.fail("identity fails",
               Json{{"A", a}, {"x", x}, {"i", i}, {"j", j}, {"det_A_plus_xEij", lhs}, {"det_A_plus_x_cof", rhs}});
      return false;
    }
    return true;
  };
  if (!samples) {
    rep.note("exhaustive");
    std::vector<Elem> a(cells, 0);
    while (true) {
      for (Elem x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            if (!check(a, x, i, j)) return rep.done();
          }
        }
      }
      std::size_t pos = cells;
      while (pos > 0 && ++a[pos - 1] == n) a[--pos] = 0;
      if (pos == 0) break;
    }
  } else {
    rep.note(std::to_string(*samples) + " random samples, seed " + std::to_string(seed));
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < *samples; ++s) {
      std::vector<Elem> a(cells);
      for (Elem& v : a) v = static_cast<Elem>(rng() % n);
      const Elem x = static_cast<Elem>(rng() % n);
      const std::size_t i = rng() % k, j = rng() % k;
      if (!check(a, x, i, j)) break;
    }
  }
  return rep.done();
}

LawReport law_matrix_ideal(const FiniteRing& R, const IdealSet& I, std::size_t k, std::size_t max_order) {
  Report rep("matrix_ideal", InstanceStrength::degenerate);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I)).input("k", std::to_string(k));
  if (!R.is_commutative()) {
    rep.skip("R is not commutative");
    return rep.done();
  }
  if (k < 2) throw DomainError("matrix_ideal law needs k >= 2");
  const FiniteRing Mk = matrix_ring(R, k, max_order);
  const IdealSet MI = matrix_ideal(Mk, I, k);
  const IdealVerdict c = is_clean_ideal(R, I);
  const IdealVerdict wm = is_weakly_clean_ideal(Mk, MI);
  rep.scanned(c.scanned + wm.scanned);
  rep.iff(c.holds, wm.holds, "I clean vs M_k(I) weakly clean",
          [&] { return c.holds ? verdict_json(Mk, MI, wm) : verdict_json(R, I, c); });
  // The matrix diag(x, -x, 0, ...) the converse argument is built on.
  for (Elem x : I.members()) {
    if (!is_clean_element(R, x)) continue;
    std::vector<Elem> digits(k * k, 0);
    digits[0] = x;
    digits[k + 1] = R.neg(x);
    const Elem A = encode(digits, R.order());
    rep.scanned(1);
    if (!is_weakly_clean_element(Mk, A).weakly_clean()) {
      rep.fail("x E11 - x E22 is not weakly clean for a clean x", Json{{"x", x}, {"matrix", digits}, {"index", A}});
      break;
    }
  }
  return rep.done();
}

LawReport law_product(std::span<const IdealSet> ideals) {
  Report rep("product_ideal", InstanceStrength::degenerate);
  if (ideals.empty()) throw DomainError("product law needs at least one factor");
  std::vector<FiniteRing> rings;
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    rings.push_back(ideals[a].ring());
    rep.input("factor" + std::to_string(a + 1), ring_name(ideals[a].ring()) + " " + ideal_name(ideals[a]));
  }
  if (ideals.size() == 1) rep.note("single factor");
  const FiniteRing P = direct_product(rings);
  const IdealSet PI = product_ideal(P, ideals);
  bool all_wc = true;
  std::size_t not_clean = 0;
  for (const IdealSet& I : ideals) {
    const IdealVerdict wc = is_weakly_clean_ideal(I.ring(), I);
    const IdealVerdict c = is_clean_ideal(I.ring(), I);
    rep.scanned(wc.scanned + c.scanned);
    all_wc = all_wc && wc.holds;
    if (!c.holds) ++not_clean;
  }
  const IdealVerdict wp = is_weakly_clean_ideal(P, PI);
  rep.scanned(wp.scanned);
  rep.iff(wp.holds, all_wc && not_clean <= 1, "product weakly clean vs factor condition",
          [&] { return verdict_json(P, PI, wp); });
  return rep.done();
}

namespace {

std::vector<LocElem> loc_elements(const PrimeSet& P, const LocIdeal& I, std::size_t bound) {
  if (I.zero) return {LocElem(P, 0)};
  const BigInt d = I.generator(P);
  std::vector<LocElem> out{LocElem(P, 0)};
  for (std::size_t b = 1; b <= bound; ++b) {
    if (boost::multiprecision::gcd(BigInt(b), P.modulus()) != 1) continue;
    for (long long a = 1; a <= static_cast<long long>(bound); ++a) {
      if (boost::multiprecision::gcd(BigInt(a), BigInt(b)) != 1) continue;
      out.emplace_back(P, d * a, BigInt(b));
      out.emplace_back(P, -d * a, BigInt(b));
    }
  }
  return out;
}

struct FactorElement {
  ProductComponent element;
  bool plus;
  bool minus;
};

ProductComponent zero_of(const ProductIdealComponent& c) {
  if (const auto* loc = std::get_if<LocIdealComponent>(&c)) return LocComponent{loc->primes, LocElem(loc->primes, 0)};
  const IdealSet& I = std::get<FiniteIdealComponent>(c).ideal;
  return FiniteComponent{I.ring(), I.ring().zero()};
}

std::string factor_name(const ProductIdealComponent& c) {
  if (const auto* loc = std::get_if<LocIdealComponent>(&c)) return loc->primes.label() + " " + loc->ideal.label(loc->primes);
  const IdealSet& I = std::get<FiniteIdealComponent>(c).ideal;
  return ring_name(I.ring()) + " " + ideal_name(I);
}

Json tuple_json(std::span<const ProductComponent> t) {
  Json j = Json::array();
  for (const ProductComponent& c : t) j.push_back(to_string(c));
  return j;
}

}  // namespace

LawReport law_product_mixed(std::span<const ProductIdealComponent> components, std::size_t bound) {
  const bool has_loc = std::any_of(components.begin(), components.end(), [](const ProductIdealComponent& c) {
    return std::holds_alternative<LocIdealComponent>(c);
  });
  Report rep("product_ideal", has_loc ? InstanceStrength::discriminating : InstanceStrength::degenerate);
  for (std::size_t a = 0; a < components.size(); ++a) {
    rep.input("factor" + std::to_string(a + 1), factor_name(components[a]));
  }
  rep.note("tuple search bound " + std::to_string(bound));

  // Right side: per-factor verdicts.
  bool all_wc = true;
  std::size_t not_clean = 0;
  // Left side: a tuple fails exactly when one coordinate is not clean_plus and
  // one (possibly the same) is not clean_minus.
  std::vector<std::optional<FactorElement>> no_plus(components.size()), no_minus(components.size());
  std::optional<std::size_t> neither;
  for (std::size_t a = 0; a < components.size(); ++a) {
    auto record = [&](ProductComponent el, bool plus, bool minus) {
      rep.scanned(1);
      if (!plus && !minus && !neither) {
        neither = a;
        no_plus[a] = FactorElement{el, plus, minus};
      }
      if (!plus && !no_plus[a]) no_plus[a] = FactorElement{el, plus, minus};
      if (!minus && !no_minus[a]) no_minus[a] = FactorElement{std::move(el), plus, minus};
    };
    if (const auto* loc = std::get_if<LocIdealComponent>(&components[a])) {
      const LocIdealVerdict v = ideal_verdict_loc(loc->primes, loc->ideal);
      all_wc = all_wc && v.weakly_clean;
      if (!v.clean) ++not_clean;
      for (const LocElem& x : loc_elements(loc->primes, loc->ideal, bound)) {
        const LocCleanClass cc = clean_class(loc->primes, x);
        record(LocComponent{loc->primes, x}, cc.clean_plus, cc.clean_minus);
      }
    } else {
      const IdealSet& I = std::get<FiniteIdealComponent>(components[a]).ideal;
      all_wc = all_wc && is_weakly_clean_ideal(I.ring(), I).holds;
      if (!is_clean_ideal(I.ring(), I).holds) ++not_clean;
      for (Elem x : I.members()) {
        const CleanClass cc = is_weakly_clean_element(I.ring(), x);
        record(FiniteComponent{I.ring(), x}, cc.clean_plus, cc.clean_minus);
      }
    }
  }
  std::optional<std::vector<ProductComponent>> failing;
  auto base = [&] {
    std::vector<ProductComponent> t;
    for (const auto& c : components) t.push_back(zero_of(c));
    return t;
  };
  if (neither) {
    failing = base();
    (*failing)[*neither] = no_plus[*neither]->element;
  } else {
    for (std::size_t a = 0; a < components.size() && !failing; ++a) {
      for (std::size_t b = 0; b < components.size() && !failing; ++b) {
        if (a != b && no_plus[a] && no_minus[b]) {
          failing = base();
          (*failing)[a] = no_plus[a]->element;
          (*failing)[b] = no_minus[b]->element;
        }
      }
    }
  }
  if (failing && product_clean_class(*failing).weakly_clean()) {
    rep.fail("tuple search produced a weakly clean tuple", Json{{"tuple", tuple_json(*failing)}});
  }
  const bool rhs = all_wc && not_clean <= 1;
  rep.iff(!failing, rhs, "bounded tuple search vs factor condition", [&] {
    return failing ? Json{{"tuple", tuple_json(*failing)}} : Json{{"factors_weakly_clean", all_wc}, {"not_clean", not_clean}};
  });
  if (failing) rep.note("failing tuple " + tuple_json(*failing).dump());

  // The library's verdict must agree and its witness must replay.
  try {
    const ProductIdealVerdict lib = is_weakly_clean_ideal_prod(components);
    if (lib.weakly_clean != rhs) {
      rep.fail("library product verdict disagrees", Json{{"library", lib.weakly_clean}, {"reason", lib.reason}});
    } else if (!lib.weakly_clean && product_clean_class(lib.witness).weakly_clean()) {
      rep.fail("library witness does not replay", Json{{"tuple", tuple_json(lib.witness)}});
    }
  } catch (const DomainError& e) {
    rep.fail(std::string("library product verdict failed: ") + e.what(), Json::object());
  }
  return rep.done();
}

namespace {

bool is_zero_module(const Bimodule& M) { return M.order() == 1; }

}  // namespace

LawReport law_morita(const MoritaInstance& m, const IdealSet& I, const IdealSet& J) {
  Report rep("morita_ideal", InstanceStrength::degenerate);
  const FiniteRing T = morita_zero(m.R, m.S, m.M, m.N);
  rep.input("ring", ring_name(T)).input("I", ideal_name(I)).input("J", ideal_name(J));
  if (is_zero_module(m.M) && is_zero_module(m.N)) {
    const std::vector<FiniteRing> rs{m.R, m.S};
    if (!(direct_product(rs) == T)) rep.fail("zero-module Morita ring differs from R x S", Json::object());
    rep.note("zero modules: the ring is R x S");
  }
  const IdealSet TI = morita_ideal(T, m.M, m.N, I, J);
  const IdealVerdict wi = is_weakly_clean_ideal(m.R, I), wj = is_weakly_clean_ideal(m.S, J);
  const IdealVerdict ci = is_clean_ideal(m.R, I), cj = is_clean_ideal(m.S, J);
  const IdealVerdict wt = is_weakly_clean_ideal(T, TI);
  rep.scanned(wi.scanned + wj.scanned + ci.scanned + cj.scanned + wt.scanned);
  rep.implies(wi.holds && wj.holds && (ci.holds || cj.holds), wt.holds, "[[I, M], [N, J]] is not weakly clean",
              [&] { return verdict_json(T, TI, wt); });
  return rep.done();
}

namespace {

FiniteRing build_tri3(const Tri3Instance& t) { return tri3(t.A1, t.A2, t.A3, t.A21, t.A31, t.A32, t.comp); }

void tri3_inputs(Report& rep, const FiniteRing& T, const IdealSet& I, const IdealSet& J, const IdealSet& K) {
  rep.input("ring", ring_name(T)).input("I", ideal_name(I)).input("J", ideal_name(J)).input("K", ideal_name(K));
}

void tri3_zero_module_note(Report& rep, const Tri3Instance& t, const FiniteRing& T) {
  if (is_zero_module(t.A21) && is_zero_module(t.A31) && is_zero_module(t.A32)) {
    const std::vector<FiniteRing> rs{t.A1, t.A2, t.A3};
    if (!(direct_product(rs) == T)) rep.fail("zero-module triangular ring differs from A1 x A2 x A3", Json::object());
    rep.note("zero modules: the ring is A1 x A2 x A3");
  }
}

}  // namespace

LawReport law_tri3_forward(const Tri3Instance& t, const IdealSet& I, const IdealSet& J, const IdealSet& K) {
  Report rep("tri3_forward", InstanceStrength::degenerate);
  const FiniteRing T = build_tri3(t);
  tri3_inputs(rep, T, I, J, K);
  tri3_zero_module_note(rep, t, T);
  const IdealSet TI = tri3_ideal(T, t.A21, t.A31, t.A32, I, J, K);
  bool all_wc = true;
  std::size_t clean = 0;
  for (const IdealSet* X : {&I, &J, &K}) {
    all_wc = all_wc && is_weakly_clean_ideal(X->ring(), *X).holds;
    if (is_clean_ideal(X->ring(), *X).holds) ++clean;
    rep.scanned(2 * X->size());
  }
  const IdealVerdict wt = is_weakly_clean_ideal(T, TI);
  rep.scanned(wt.scanned);
  rep.implies(all_wc && clean >= 2, wt.holds, "triangular ideal is not weakly clean",
              [&] { return verdict_json(T, TI, wt); });
  return rep.done();
}

LawReport law_tri3_converse(const Tri3Instance& t, const IdealSet& I, const IdealSet& J, const IdealSet& K) {
  Report rep("tri3_converse", InstanceStrength::degenerate);
  const FiniteRing T = build_tri3(t);
  tri3_inputs(rep, T, I, J, K);
  tri3_zero_module_note(rep, t, T);
  const IdealSet TI = tri3_ideal(T, t.A21, t.A31, t.A32, I, J, K);
  const IdealVerdict wt = is_weakly_clean_ideal(T, TI);
  rep.scanned(wt.scanned);
  const char* names[] = {"I", "J", "K"};
  const IdealSet* diag[] = {&I, &J, &K};
  for (int d = 0; d < 3; ++d) {
    const IdealVerdict v = is_weakly_clean_ideal(diag[d]->ring(), *diag[d]);
    rep.scanned(v.scanned);
    rep.implies(wt.holds, v.holds, std::string("diagonal ideal ") + names[d] + " is not weakly clean",
                [&] { return verdict_json(diag[d]->ring(), *diag[d], v); });
  }
  return rep.done();
}

LawReport law_series(const FiniteRing& R, const IdealSet& I, std::size_t k) {
  Report rep("power_series", InstanceStrength::degenerate);
  rep.input("ring", ring_name(R)).input("ideal", ideal_name(I)).input("k", std::to_string(k));
  if (k == 1) rep.note("k = 1: R[x]/(x) is R");
  const FiniteRing Rk = truncated_power_series(R, k);
  const IdealSet Ik = series_ideal(Rk, I, k);
  const IdealVerdict wc = is_weakly_clean_ideal(R, I), wk = is_weakly_clean_ideal(Rk, Ik);
  const IdealVerdict c = is_clean_ideal(R, I), ck = is_clean_ideal(Rk, Ik);
  rep.scanned(wc.scanned + wk.scanned + c.scanned + ck.scanned);
  rep.iff(wc.holds, wk.holds, "weakly clean in R vs in R[x]/(x^k)",
          [&] { return wc.holds ? verdict_json(Rk, Ik, wk) : verdict_json(R, I, wc); });
  rep.iff(c.holds, ck.holds, "clean in R vs in R[x]/(x^k)",
          [&] { return c.holds ? verdict_json(Rk, Ik, ck) : verdict_json(R, I, c); });
  if (!R.is_commutative()) {
    rep.note("constant-term criterion not checked: R is not commutative");
    return rep.done();
  }
  const std::size_t place = ipow(R.order(), k - 1);
  for (Elem f = 0; f < Rk.order(); ++f) {
    const Elem a0 = static_cast<Elem>(f / place);
    const CleanClass cf = is_weakly_clean_element(Rk, f), ca = is_weakly_clean_element(R, a0);
    rep.scanned(1);
    if (cf.weakly_clean() != ca.weakly_clean() || cf.clean() != ca.clean()) {
      rep.fail("f and its constant term differ", Json{{"f", f},
                                                      {"constant_term", a0},
                                                      {"f_weakly_clean", cf.weakly_clean()},
                                                      {"constant_weakly_clean", ca.weakly_clean()}});
      break;
    }
  }
  return rep.done();
}

LawReport law_idealization(const FiniteRing& R, const Bimodule& M, const IdealSet& I, std::span<const Elem> N) {
  Report rep("idealization", InstanceStrength::discriminating);
  const FiniteRing RM = idealization(R, M);
  std::vector<Elem> Nv(N.begin(), N.end());
  std::string n_label = "{";
  for (std::size_t i = 0; i < Nv.size(); ++i) n_label += (i ? "," : "") + std::to_string(Nv[i]);
  rep.input("ring", ring_name(RM)).input("ideal", ideal_name(I)).input("N", n_label + "}");
  if (is_zero_module(M)) rep.note("M = 0: R(M) is R");
  const std::size_t m = M.order();
  for (Elem r = 0; r < R.order(); ++r) {
    for (Elem x = 0; x < m; ++x) {
      const Elem e = static_cast<Elem>(r * m + x);
      rep.scanned(1);
      if (RM.is_unit(e) != R.is_unit(r)) {
        rep.fail("unit characterization fails", Json{{"r", r}, {"m", x}, {"unit", RM.is_unit(e)}});
      }
      if (RM.is_idempotent(e) != (R.is_idempotent(r) && x == 0)) {
        rep.fail("idempotent characterization fails", Json{{"r", r}, {"m", x}, {"idempotent", RM.is_idempotent(e)}});
      }
    }
  }
  const IdealSet IN = idealization_ideal(RM, M, I, N);
  const IdealVerdict wc = is_weakly_clean_ideal(R, I), wn = is_weakly_clean_ideal(RM, IN);
  const IdealVerdict c = is_clean_ideal(R, I), cn = is_clean_ideal(RM, IN);
  rep.scanned(wc.scanned + wn.scanned + c.scanned + cn.scanned);
  rep.iff(wc.holds, wn.holds, "I weakly clean vs I(N) weakly clean",
          [&] { return wc.holds ? verdict_json(RM, IN, wn) : verdict_json(R, I, wc); });
  rep.iff(c.holds, cn.holds, "I clean vs I(N) clean",
          [&] { return c.holds ? verdict_json(RM, IN, cn) : verdict_json(R, I, c); });
  return rep.done();
}

// Localized laws.

std::vector<LocIdeal> loc_ideal_family(const PrimeSet& P, unsigned max_exponent) {
  std::vector<LocIdeal> out{LocIdeal{true, {}}};
  const std::size_t r = P.primes().size();
  std::vector<unsigned> e(r, 0);
  while (true) {
    out.push_back(principal_loc_ideal(P, e));
    std::size_t pos = r;
    while (pos > 0 && ++e[pos - 1] > max_exponent) e[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

namespace {

struct LocScan {
  std::optional<LocElem> not_weakly_clean;
  std::optional<LocElem> not_exchange;
  std::optional<LocElem> not_exchange_relaxed;
  std::size_t scanned = 0;
};

LocScan scan_loc(const PrimeSet& P, const LocIdeal& I, std::size_t bound) {
  LocScan s;
  s.not_weakly_clean = witness_search(P, I, kDefaultSearchBound, LocTarget::weakly_clean);
  std::vector<LocElem> xs = loc_elements(P, I, bound);
  if (s.not_weakly_clean) xs.push_back(*s.not_weakly_clean);
  for (const LocElem& x : xs) {
    ++s.scanned;
    if (!s.not_exchange && !is_weakly_exchange_element_loc(P, I, x, true)) s.not_exchange = x;
    if (!s.not_exchange_relaxed && !is_weakly_exchange_element_loc(P, I, x, false)) s.not_exchange_relaxed = x;
  }
  return s;
}

Json loc_witness(const PrimeSet& P, const LocIdeal& I, const std::optional<LocElem>& x) {
  Json j{{"ring", P.label()}, {"ideal", I.label(P)}};
  if (x) {
    j["element"] = x->to_string();
    j["class"] = loc_clean_class_to_json(clean_class(P, *x));
  }
  return j;
}

Report loc_report(const std::string& law, const PrimeSet& P, const LocIdeal& I, std::size_t bound) {
  Report rep(law, I.zero ? InstanceStrength::degenerate : InstanceStrength::discriminating);
  rep.input("ring", P.label()).input("ideal", I.label(P));
  rep.note("weakly clean search bound " + std::to_string(kDefaultSearchBound) + ", exchange search bound " +
           std::to_string(bound));
  return rep;
}

}  // namespace

LawReport law_proper_ideals_loc(const PrimeSet& P, std::size_t bound) {
  Report rep("proper_ideals", InstanceStrength::discriminating);
  rep.input("ring", P.label());
  rep.note("search bound " + std::to_string(bound) + "; proper ideals with exponents up to 2");
  const LocIdeal whole = principal_loc_ideal(P, std::vector<unsigned>(P.primes().size(), 0));
  const auto ring_wc = witness_search(P, whole, bound, LocTarget::weakly_clean);
  const auto ring_c = witness_search(P, whole, bound, LocTarget::clean);
  std::optional<std::pair<LocIdeal, LocElem>> bad_wc, bad_c;
  for (const LocIdeal& I : loc_ideal_family(P)) {
    if (I.is_whole()) continue;
    rep.scanned(1);
    if (!bad_wc) {
      if (auto x = witness_search(P, I, bound, LocTarget::weakly_clean)) bad_wc.emplace(I, *x);
    }
    if (!bad_c) {
      if (auto x = witness_search(P, I, bound, LocTarget::clean)) bad_c.emplace(I, *x);
    }
  }
  auto witness = [&](const std::optional<LocElem>& ring_x, const std::optional<std::pair<LocIdeal, LocElem>>& bad) {
    Json j{{"ring_witness", ring_x ? Json(ring_x->to_string()) : Json(nullptr)}};
    if (bad) j["ideal_witness"] = loc_witness(P, bad->first, bad->second);
    return j;
  };
  rep.iff(!ring_wc, !bad_wc, "weakly clean", [&] { return witness(ring_wc, bad_wc); });
  rep.iff(!ring_c, !bad_c, "clean", [&] { return witness(ring_c, bad_c); });
  rep.note(std::string("ring ") + (ring_wc ? "not weakly clean" : ring_c ? "weakly clean, not clean" : "clean"));
  return rep.done();
}

LawReport law_weakly_exchange_loc(const PrimeSet& P, const LocIdeal& I, std::size_t bound) {
  Report rep = loc_report("weakly_clean_implies_weakly_exchange", P, I, bound);
  const LocScan s = scan_loc(P, I, bound);
  rep.scanned(s.scanned);
  if (!s.not_exchange != !s.not_exchange_relaxed) rep.note("exchange modes differ");
  rep.implies(!s.not_weakly_clean, !s.not_exchange, "weakly clean ideal is not weakly exchange",
              [&] { return loc_witness(P, I, s.not_exchange); });
  return rep.done();
}

LawReport law_central_equivalence_loc(const PrimeSet& P, const LocIdeal& I, std::size_t bound) {
  Report rep = loc_report("central_idempotents_equivalence", P, I, bound);
  rep.note("Z_P has only the idempotents 0 and 1");
  const LocScan s = scan_loc(P, I, bound);
  rep.scanned(s.scanned);
  rep.iff(!s.not_weakly_clean, !s.not_exchange, "weakly clean vs weakly exchange",
          [&] { return loc_witness(P, I, s.not_weakly_clean ? s.not_weakly_clean : s.not_exchange); });
  if (s.not_weakly_clean) rep.note("neither weakly clean nor weakly exchange at " + s.not_weakly_clean->to_string());
  return rep.done();
}

LawReport law_reduced_loc(const PrimeSet& P, const LocIdeal& I, std::size_t bound) {
  Report rep = loc_report("reduced_exchange_implies_weakly_clean", P, I, bound);
  rep.note("Z_P is a domain");
  const LocScan s = scan_loc(P, I, bound);
  rep.scanned(s.scanned);
  rep.implies(!s.not_exchange, !s.not_weakly_clean, "weakly exchange ideal is not weakly clean",
              [&] { return loc_witness(P, I, s.not_weakly_clean); });
  return rep.done();
}

// Suites.

namespace {

const std::vector<std::string> kBaseCatalog{
    "(zn 1)",
    "(zn 2)",
    "(zn 3)",
    "(zn 4)",
    "(zn 5)",
    "(zn 6)",
    "(zn 7)",
    "(zn 8)",
    "(zn 9)",
    "(zn 10)",
    "(zn 11)",
    "(zn 12)",
    "(zn 16)",
    "(product (zn 2) (zn 2))",
    "(product (zn 2) (zn 4))",
    "(matrix 2 (zn 2))",
    "(matrix 2 (zn 3))",
    "(tri2 (zn 2) (zn 2) regular)",
    "(tri3 (zn 2) (zn 2) (zn 2) regular regular regular)",
    "(morita (zn 2) (zn 2) regular regular)",
    "(idealize (zn 4) regular)",
    "(idealize (zn 4) (znmod 2))",
    "(series (zn 2) 2)",
    "(series (zn 2) 3)",
    "(series (zn 4) 2)",
    "(series (zn 4) 3)",
};

FiniteRing catalog_ring(const std::string& spec) { return *build_ring(spec).finite; }

std::vector<std::vector<Elem>> peirce_sets(const FiniteRing& R) {
  std::vector<std::vector<Elem>> sets{{R.one()}};
  if (R.is_trivial()) return sets;
  for (Elem e : R.idempotents()) {
    const Elem f = R.sub(R.one(), e);
    if (e == 0 || e == R.one() || f < e) continue;
    sets.push_back({e, f});
  }
  return sets;
}

template <class F>
void for_each_tuple(std::span<const std::vector<IdealSet>> lists, F&& f) {
  std::vector<std::size_t> idx(lists.size(), 0);
  for (const auto& l : lists) {
    if (l.empty()) return;
  }
  while (true) {
    std::vector<IdealSet> pick;
    for (std::size_t a = 0; a < lists.size(); ++a) pick.push_back(lists[a][idx[a]]);
    f(pick);
    std::size_t pos = lists.size();
    while (pos > 0 && ++idx[pos - 1] == lists[pos - 1].size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
}

std::vector<LawReport> construction_laws() {
  std::vector<LawReport> out;
  const FiniteRing z2 = zn(2), z3 = zn(3), z4 = zn(4), z5 = zn(5), z6 = zn(6);

  out.push_back(law_det_cofactor(z6, 2, std::nullopt));
  out.push_back(law_det_cofactor(z5, 3, 200));
  out.push_back(law_det_cofactor(z6, 3, 200));

  std::vector<FiniteRing> matrix_bases{z2, z3, z4, z5, z6};
  const std::vector<FiniteRing> z2z2{z2, z2};
  matrix_bases.push_back(direct_product(z2z2));
  for (const FiniteRing& R : matrix_bases) {
    for (const IdealSet& I : all_ideals(R)) out.push_back(law_matrix_ideal(R, I, 2));
  }
  for (const IdealSet& I : all_ideals(z2)) out.push_back(law_matrix_ideal(z2, I, 3));

  for (const std::vector<FiniteRing>& factors : std::vector<std::vector<FiniteRing>>{
           {z4}, {z2, z2}, {z4, z6}, {z2, z3, z4}}) {
    std::vector<std::vector<IdealSet>> lists;
    for (const FiniteRing& R : factors) lists.push_back(all_ideals(R));
    for_each_tuple(std::span<const std::vector<IdealSet>>(lists), [&](const std::vector<IdealSet>& pick) {
      out.push_back(law_product(pick));
    });
  }

  const PrimeSet p3({3}), p35({3, 5}), p37({3, 7}), p23({2, 3}), p57({5, 7});
  auto loc = [](const PrimeSet& P, std::vector<unsigned> e) -> ProductIdealComponent {
    return LocIdealComponent{P, principal_loc_ideal(P, std::move(e))};
  };
  auto fin = [](const IdealSet& I) -> ProductIdealComponent { return FiniteIdealComponent{I}; };
  const IdealSet z4_2 = ideal_closure(z4, std::vector<Elem>{2});
  const std::vector<std::vector<ProductIdealComponent>> mixed{
      {loc(p35, {0, 0}), loc(p35, {0, 0})},
      {loc(p35, {0, 0}), loc(p35, {1, 1})},
      {loc(p35, {1, 0}), loc(p37, {0, 1})},
      {loc(p35, {0, 1}), loc(p35, {1, 0})},
      {loc(p23, {0, 1}), fin(whole_ideal(z2))},
      {loc(p35, {0, 0}), fin(z4_2)},
      {loc(p3, {0}), loc(p35, {0, 0})},
      {loc(p35, {1, 0}), fin(whole_ideal(z6)), loc(p57, {1, 1})},
      {loc(p35, {1, 0}), loc(p3, {0}), loc(p57, {0, 1})},
      {fin(z4_2), fin(ideal_closure(z6, std::vector<Elem>{3}))},
  };
  for (const auto& comps : mixed) out.push_back(law_product_mixed(comps));

  std::vector<MoritaInstance> moritas{
      {z2, z2, Bimodule::regular(z2), Bimodule::regular(z2)},
      {z2, z2, Bimodule::zero(z2, z2), Bimodule::zero(z2, z2)},
      {z3, z3, Bimodule::regular(z3), Bimodule::regular(z3)},
      {z4, z6, Bimodule::cyclic(z4, z6, 2), Bimodule::cyclic(z6, z4, 2)},
  };
  for (const MoritaInstance& m : moritas) {
    for (const IdealSet& I : all_ideals(m.R)) {
      for (const IdealSet& J : all_ideals(m.S)) out.push_back(law_morita(m, I, J));
    }
  }

  const Bimodule r2 = Bimodule::regular(z2), o2 = Bimodule::zero(z2, z2);
  std::vector<Tri3Instance> tris{
      {z2, z2, z2, r2, r2, r2, std::nullopt},
      {z2, z2, z2, r2, r2, r2, PairingMap::cyclic_product(r2, r2, r2)},
      {z2, z2, z2, o2, o2, o2, std::nullopt},
      {z4, z2, z2, Bimodule::cyclic(z2, z4, 2), Bimodule::cyclic(z2, z4, 2), r2, std::nullopt},
  };
  for (const Tri3Instance& t : tris) {
    const std::vector<std::vector<IdealSet>> lists{all_ideals(t.A1), all_ideals(t.A2), all_ideals(t.A3)};
    for_each_tuple(std::span<const std::vector<IdealSet>>(lists), [&](const std::vector<IdealSet>& p) {
      out.push_back(law_tri3_forward(t, p[0], p[1], p[2]));
      out.push_back(law_tri3_converse(t, p[0], p[1], p[2]));
    });
  }

  for (const FiniteRing& R : {z2, z3, z4, z6}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (const IdealSet& I : all_ideals(R)) out.push_back(law_series(R, I, k));
    }
  }

  const FiniteRing z8 = zn(8);
  const std::vector<std::pair<FiniteRing, Bimodule>> idealizations{
      {z2, Bimodule::regular(z2)},         {z4, Bimodule::regular(z4)}, {z4, Bimodule::cyclic(z4, z4, 2)},
      {z4, Bimodule::zero(z4, z4)},        {z6, Bimodule::regular(z6)}, {z8, Bimodule::cyclic(z8, z8, 4)},
  };
  for (const auto& [R, M] : idealizations) {
    const auto subs = all_submodules(M);
    for (const IdealSet& I : all_ideals(R)) {
      for (const std::vector<Elem>& N : subs) {
        bool contains_im = true;
        for (Elem r : I.members()) {
          for (Elem x = 0; x < M.order() && contains_im; ++x) {
            contains_im = std::binary_search(N.begin(), N.end(), M.act_left(r, x));
          }
        }
        if (contains_im) out.push_back(law_idealization(R, M, I, N));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> catalog_specs() {
  std::vector<std::string> out = kBaseCatalog;
  for (const std::string& s : kBaseCatalog) {
    if (jacobson_radical(catalog_ring(s)).size() > 1) out.push_back("(quotient " + s + " radical)");
  }
  return out;
}

std::vector<PrimeSet> catalog_prime_sets() {
  return {PrimeSet({2}),    PrimeSet({3}),       PrimeSet({2, 3}),   PrimeSet({3, 5}),
          PrimeSet({2, 5}), PrimeSet({3, 5, 7}), PrimeSet({2, 3, 5})};
}

std::vector<LawReport> laws_for_ring(const FiniteRing& R) {
  std::vector<LawReport> out;
  out.push_back(law_proper_ideals(R));
  out.push_back(law_radical(R));
  out.push_back(law_lifting(R));
  const std::vector<IdealSet> ideals = ideals_for_scan(R);
  const IdealSet rad = jacobson_ideal(R);
  std::vector<IdealSet> radical_ideals;
  for (const IdealSet& J : ideals) {
    if (is_subset(J, rad)) radical_ideals.push_back(J);
  }
  const std::vector<std::vector<Elem>> sets = peirce_sets(R);
  for (const IdealSet& I : ideals) {
    out.push_back(law_weakly_exchange(R, I));
    out.push_back(law_central_equivalence(R, I));
    out.push_back(law_reduced(R, I));
    out.push_back(law_unique_central(R, I));
    out.push_back(law_finite_cleanness(R, I));
    out.push_back(law_radical_quotient(R, I));
    out.push_back(law_sum_with_radical(R, I, radical_ideals));
    out.push_back(law_peirce(R, sets, I));
  }
  return out;
}

std::vector<LawReport> laws_for_localized(const PrimeSet& P) {
  std::vector<LawReport> out;
  out.push_back(law_proper_ideals_loc(P));
  for (const LocIdeal& I : loc_ideal_family(P)) {
    out.push_back(law_weakly_exchange_loc(P, I));
    out.push_back(law_central_equivalence_loc(P, I));
    out.push_back(law_reduced_loc(P, I));
  }
  return out;
}

std::vector<LawReport> run_catalog() {
  // Independent jobs run concurrently; results are concatenated in job order,
  // so the output does not depend on scheduling.
  std::vector<std::future<std::vector<LawReport>>> jobs;
  for (const std::string& s : catalog_specs()) {
    jobs.push_back(std::async(std::launch::async, [s] { return laws_for_ring(catalog_ring(s)); }));
  }
  jobs.push_back(std::async(std::launch::async, construction_laws));
  for (const PrimeSet& P : catalog_prime_sets()) {
    jobs.push_back(std::async(std::launch::async, [P] { return laws_for_localized(P); }));
  }
  std::vector<LawReport> out;
  for (auto& j : jobs) {
    std::vector<LawReport> part = j.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < law_catalog().size(); ++i) rank[law_catalog()[i].id] = i;
  std::stable_sort(out.begin(), out.end(),
                   [&](const LawReport& a, const LawReport& b) { return rank.at(a.law) < rank.at(b.law); });
  return out;
}

std::vector<LawSummary> summarize(std::span<const LawReport> reports) {
  std::vector<LawSummary> rows;
  std::map<std::string, std::size_t> at;
  for (const LawInfo& l : law_catalog()) {
    at[l.id] = rows.size();
    rows.push_back({l.id});
  }
  for (const LawReport& r : reports) {
    LawSummary& s = rows[at.at(r.law)];
    switch (r.verdict) {
      case LawVerdict::pass:
        ++s.pass;
        break;
      case LawVerdict::fail:
        ++s.fail;
        break;
      case LawVerdict::skipped:
        ++s.skipped;
        break;
    }
    if (r.strength == InstanceStrength::discriminating && r.verdict != LawVerdict::skipped) ++s.discriminating;
    s.seconds += r.seconds;
  }
  return rows;
}

bool all_passed(std::span<const LawReport> reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const LawReport& r) { return r.verdict == LawVerdict::fail; });
}

std::string reports_to_json_lines(std::span<const LawReport> reports) {
  std::string out;
  for (const LawReport& r : reports) out += r.to_json().dump() + "\n";
  Json laws = Json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const LawSummary& s : summarize(reports)) {
    laws.push_back(Json{{"law", s.law},
                        {"pass", s.pass},
                        {"fail", s.fail},
                        {"skipped", s.skipped},
                        {"discriminating", s.discriminating}});
    pass += s.pass;
    fail += s.fail;
    skipped += s.skipped;
  }
  Json summary{{"reports", reports.size()}, {"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"laws", laws}};
  out += Json{{"summary", summary}}.dump() + "\n";
  return out;
}

std::string summary_table(std::span<const LawReport> reports, bool with_times) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-40s %6s %5s %7s %8s", "law", "pass", "fail", "skipped", "discrim");
  os << line << (with_times ? "   seconds" : "") << "\n";
  std::size_t pass = 0, fail = 0, skipped = 0;
  double seconds = 0;
  for (const LawSummary& s : summarize(reports)) {
    std::snprintf(line, sizeof line, "%-40s %6zu %5zu %7zu %8zu", s.law.c_str(), s.pass, s.fail, s.skipped,
                  s.discriminating);
    os << line;
    if (with_times) {
      std::snprintf(line, sizeof line, " %9.3f", s.seconds);
      os << line;
    }
    os << "\n";
    pass += s.pass;
    fail += s.fail;
    skipped += s.skipped;
    seconds += s.seconds;
  }
  std::snprintf(line, sizeof line, "%-40s %6zu %5zu %7zu", "total", pass, fail, skipped);
  os << line << "\n";
  for (const LawReport& r : reports) {
    if (r.verdict != LawVerdict::fail) continue;
    os << "FAIL " << r.law;
    for (const auto& [k, v] : r.inputs) os << " " << k << "=" << v;
    os << ": " << r.reason << "\n";
  }
  return os.str();
}

}  // namespace cleanring
