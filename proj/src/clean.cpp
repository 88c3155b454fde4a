#include "cleanring/clean.hpp"

#include <algorithm>
#include <stdexcept>

#include "cleanring/error.hpp"

namespace cleanring {

namespace {

Elem shift(const FiniteRing& R, Elem x, int sign, Elem e) { return sign > 0 ? R.sub(x, e) : R.add(x, e); }

void require_member_ring(const FiniteRing& R, const IdealSet& I) {
  if (!(I.ring() == R)) throw DomainError("ideal does not belong to " + R.label());
}

}  // namespace

std::vector<Decomposition> decompositions(const FiniteRing& R, Elem x) {
  std::vector<Decomposition> out;
  for (int sign : {1, -1}) {
    for (Elem e : R.idempotents()) {
      const Elem u = shift(R, x, sign, e);
      if (R.is_unit(u)) out.push_back({sign, e, u});
    }
  }
  return out;
}

bool is_clean_element(const FiniteRing& R, Elem x) {
  const auto idem = R.idempotents();
  return std::any_of(idem.begin(), idem.end(), [&](Elem e) { return R.is_unit(R.sub(x, e)); });
}

CleanClass is_weakly_clean_element(const FiniteRing& R, Elem x) {
  CleanClass c;
  for (const Decomposition& d : decompositions(R, x)) {
    (d.sign > 0 ? c.plus_witnesses : c.minus_witnesses).push_back(d);
  }
  c.clean_plus = !c.plus_witnesses.empty();
  c.clean_minus = !c.minus_witnesses.empty();
  return c;
}

std::vector<Elem> weakly_clean_idempotents(const FiniteRing& R, Elem x) {
  std::vector<Elem> out;
  for (Elem e : R.idempotents()) {
    if (R.is_unit(R.sub(x, e)) || R.is_unit(R.add(x, e))) out.push_back(e);
  }
  return out;
}

bool is_uniquely_weakly_clean_element(const FiniteRing& R, Elem x) {
  return weakly_clean_idempotents(R, x).size() == 1;
}

std::string to_string(IdealPredicate p) {
  switch (p) {
    case IdealPredicate::clean:
      return "clean";
    case IdealPredicate::weakly_clean:
      return "weakly-clean";
    case IdealPredicate::uniquely_weakly_clean:
      return "uniquely-weakly-clean";
    case IdealPredicate::weakly_exchange:
      return "weakly-exchange";
    case IdealPredicate::weakly_exchange_relaxed:
      return "weakly-exchange-relaxed";
  }
  return "unknown";
}

namespace {

IdealVerdict scan_decompositions(const FiniteRing& R, const IdealSet& I, IdealPredicate p,
                                 std::initializer_list<int> signs) {
  require_member_ring(R, I);
  IdealVerdict v;
  v.predicate = p;
  for (Elem x : I.members()) {
    ++v.scanned;
    bool found = false;
    for (int sign : signs) {
      for (Elem e : R.idempotents()) {
        if (R.is_unit(shift(R, x, sign, e))) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      v.failing_element = x;
      for (int sign : signs) {
        for (Elem e : R.idempotents()) v.attempts.push_back({sign, e, shift(R, x, sign, e)});
      }
      return v;
    }
  }
  v.holds = true;
  return v;
}

}  // namespace

IdealVerdict is_clean_ideal(const FiniteRing& R, const IdealSet& I) {
  return scan_decompositions(R, I, IdealPredicate::clean, {1});
}

IdealVerdict is_weakly_clean_ideal(const FiniteRing& R, const IdealSet& I) {
  return scan_decompositions(R, I, IdealPredicate::weakly_clean, {1, -1});
}

IdealVerdict is_uniquely_weakly_clean_ideal(const FiniteRing& R, const IdealSet& I) {
  require_member_ring(R, I);
  IdealVerdict v;
  v.predicate = IdealPredicate::uniquely_weakly_clean;
  for (Elem x : I.members()) {
    ++v.scanned;
    auto working = weakly_clean_idempotents(R, x);
    if (working.size() != 1) {
      v.failing_element = x;
      v.working_idempotents = std::move(working);
      return v;
    }
  }
  v.holds = true;
  return v;
}

namespace {

std::vector<Elem> exchange_candidates(const FiniteRing& R, const IdealSet& I, ExchangeMode mode) {
  std::vector<Elem> candidates;
  for (Elem e : R.idempotents()) {
    if (mode == ExchangeMode::relaxed || I.contains(e)) candidates.push_back(e);
  }
  return candidates;
}

/// Scratch buffers are caller-owned so an ideal scan allocates once.
bool exchange_element(const FiniteRing& R, Elem x, std::span<const Elem> candidates, std::vector<char>& minus_set,
                      std::vector<char>& plus_set) {
  const std::size_t n = R.order();
  const Elem x2 = R.mul(x, x);
  const Elem a = R.sub(x, x2);  // x - x^2
  const Elem b = R.add(x, x2);  // x + x^2
  minus_set.assign(n, 0);
  plus_set.assign(n, 0);
  for (Elem r = 0; r < n; ++r) {
    minus_set[R.mul(r, a)] = 1;
    plus_set[R.mul(r, b)] = 1;
  }
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](Elem e) { return minus_set[R.sub(e, x)] || plus_set[R.add(e, x)]; });
}

}  // namespace

IdealVerdict is_weakly_exchange_ideal(const FiniteRing& R, const IdealSet& I, ExchangeMode mode) {
  require_member_ring(R, I);
  IdealVerdict v;
  v.predicate = mode == ExchangeMode::strict ? IdealPredicate::weakly_exchange
                                             : IdealPredicate::weakly_exchange_relaxed;
  const std::vector<Elem> candidates = exchange_candidates(R, I, mode);
  std::vector<char> minus_set, plus_set;
  for (Elem x : I.members()) {
    ++v.scanned;
    if (!exchange_element(R, x, candidates, minus_set, plus_set)) {
      v.failing_element = x;
      for (Elem e : candidates) {
        v.attempts.push_back({1, e, R.sub(e, x)});
        v.attempts.push_back({-1, e, R.add(e, x)});
      }
      return v;
    }
  }
  v.holds = true;
  return v;
}

IdealVerdict check_ideal(const FiniteRing& R, const IdealSet& I, IdealPredicate p) {
  switch (p) {
    case IdealPredicate::clean:
      return is_clean_ideal(R, I);
    case IdealPredicate::weakly_clean:
      return is_weakly_clean_ideal(R, I);
    case IdealPredicate::uniquely_weakly_clean:
      return is_uniquely_weakly_clean_ideal(R, I);
    case IdealPredicate::weakly_exchange:
      return is_weakly_exchange_ideal(R, I, ExchangeMode::strict);
    case IdealPredicate::weakly_exchange_relaxed:
      return is_weakly_exchange_ideal(R, I, ExchangeMode::relaxed);
  }
  throw DomainError("unknown predicate");
}

bool replay_failure(const FiniteRing& R, const IdealSet& I, const IdealVerdict& v) {
  if (v.holds || !v.failing_element) return false;
  const Elem x = *v.failing_element;
  if (!I.contains(x)) return false;
  switch (v.predicate) {
    case IdealPredicate::clean:
      return !is_clean_element(R, x);
    case IdealPredicate::weakly_clean:
      return !is_weakly_clean_element(R, x).weakly_clean();
    case IdealPredicate::uniquely_weakly_clean:
      return !is_uniquely_weakly_clean_element(R, x);
    case IdealPredicate::weakly_exchange:
    case IdealPredicate::weakly_exchange_relaxed: {
      auto mode = v.predicate == IdealPredicate::weakly_exchange ? ExchangeMode::strict : ExchangeMode::relaxed;
      std::vector<char> minus_set, plus_set;
      return !exchange_element(R, x, exchange_candidates(R, I, mode), minus_set, plus_set);
    }
  }
  return false;
}

bool ring_is_clean(const FiniteRing& R) {
  for (Elem x = 0; x < R.order(); ++x) {
    if (!is_clean_element(R, x)) return false;
  }
  return true;
}

bool ring_is_weakly_clean(const FiniteRing& R) {
  for (Elem x = 0; x < R.order(); ++x) {
    if (!is_weakly_clean_element(R, x).weakly_clean()) return false;
  }
  return true;
}

std::optional<Elem> lift_idempotent(const FiniteRing& R, const QuotientRing& RJ, std::span<const Elem> J,
                                    Elem coset) {
  if (coset >= RJ.ring.order()) throw DomainError("lift_idempotent: coset index out of range");
  if (!RJ.ring.is_idempotent(coset)) return std::nullopt;
  std::vector<char> in_j(R.order(), 0);
  for (Elem j : J) in_j[j] = 1;
  const Elem c = RJ.representatives[coset];
  const Elem two = integer_image(R, 2);
  const Elem three = integer_image(R, 3);
  Elem e = c;
  for (std::size_t step = 0; step <= R.order(); ++step) {
    if (R.is_idempotent(e)) {
      if (!in_j[R.sub(e, c)]) break;
      return e;
    }
    const Elem e2 = R.mul(e, e);
    const Elem e3 = R.mul(e2, e);
    e = R.sub(R.mul(three, e2), R.mul(two, e3));
  }
  throw std::logic_error("lift_idempotent: no lift found in " + R.label() + " for coset " + std::to_string(coset));
}

std::optional<Elem> lift_idempotent(const FiniteRing& R, const IdealSet& J, Elem coset) {
  require_member_ring(R, J);
  QuotientRing q = quotient(J);
  return lift_idempotent(R, q, J.members(), coset);
}

PeirceReport peirce_analysis(const FiniteRing& R, std::span<const Elem> es, const IdealSet& I) {
  require_member_ring(R, I);
  if (!is_complete_orthogonal(R, es)) throw DomainError("peirce_analysis: not a complete orthogonal set");
  PeirceReport rep;
  rep.complete_orthogonal = true;
  std::size_t not_clean = 0;
  bool all_weakly = true;
  for (Elem e : es) {
    CornerRing c = corner_ring(R, e);
    IdealSet ci = corner_ideal(c, I);
    const bool clean = is_clean_ideal(c.ring, ci).holds;
    const bool weakly = clean || is_weakly_clean_ideal(c.ring, ci).holds;
    if (!clean) ++not_clean;
    all_weakly = all_weakly && weakly;
    rep.corners.push_back(CornerReport{e, std::move(c), std::move(ci), clean, weakly});
  }
  rep.condition_holds = all_weakly && not_clean <= 1;
  return rep;
}

}  // namespace cleanring
