#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cleanring/constructions.hpp"
#include "cleanring/ideals.hpp"
#include "cleanring/ring.hpp"

namespace cleanring {

/// x = unit + sign * idempotent.
struct Decomposition {
  int sign = 1;
  Elem idempotent = 0;
  Elem unit = 0;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// clean_plus: some x - e is a unit (x = u + e).
/// clean_minus: some x + e is a unit (x = u - e).
struct CleanClass {
  bool clean_plus = false;
  bool clean_minus = false;
  std::vector<Decomposition> plus_witnesses;
  std::vector<Decomposition> minus_witnesses;

  bool clean() const noexcept { return clean_plus; }
  bool weakly_clean() const noexcept { return clean_plus || clean_minus; }
};

/// Every decomposition of x: sign +1 first, then idempotents ascending.
std::vector<Decomposition> decompositions(const FiniteRing& R, Elem x);

bool is_clean_element(const FiniteRing& R, Elem x);
CleanClass is_weakly_clean_element(const FiniteRing& R, Elem x);
/// Exactly one idempotent e with x - e or x + e a unit. The same e working
/// with both signs counts once.
bool is_uniquely_weakly_clean_element(const FiniteRing& R, Elem x);
/// The idempotents e for which x - e or x + e is a unit, ascending.
std::vector<Elem> weakly_clean_idempotents(const FiniteRing& R, Elem x);

enum class IdealPredicate { clean, weakly_clean, uniquely_weakly_clean, weakly_exchange, weakly_exchange_relaxed };

std::string to_string(IdealPredicate p);

/// One failed candidate during a decomposition search.
struct Attempt {
  int sign = 1;
  Elem idempotent = 0;
  Elem candidate = 0;  // x - sign * e, found not to be a unit
};

/// Outcome of an ideal-level predicate. Passing verdicts carry counts only; a
/// failing verdict names the first failing element and the attempted search.
struct IdealVerdict {
  IdealPredicate predicate = IdealPredicate::clean;
  bool holds = false;
  std::size_t scanned = 0;
  std::optional<Elem> failing_element;
  std::vector<Attempt> attempts;
  /// For uniquely weakly clean failures: the idempotents that work (0 or >= 2 of them).
  std::vector<Elem> working_idempotents;
};

IdealVerdict is_clean_ideal(const FiniteRing& R, const IdealSet& I);
IdealVerdict is_weakly_clean_ideal(const FiniteRing& R, const IdealSet& I);
IdealVerdict is_uniquely_weakly_clean_ideal(const FiniteRing& R, const IdealSet& I);

/// Which idempotents the weakly exchange search may use.
enum class ExchangeMode {
  strict,   // e in Idem(R) intersected with I
  relaxed,  // e in Idem(R)
};

/// For each x in I, an idempotent e with e - x in R(x - x^2) or e + x in R(x + x^2).
IdealVerdict is_weakly_exchange_ideal(const FiniteRing& R, const IdealSet& I,
                                      ExchangeMode mode = ExchangeMode::strict);

/// Predicate dispatch; `I` must live in `R`.
IdealVerdict check_ideal(const FiniteRing& R, const IdealSet& I, IdealPredicate p);

/// Re-runs the element-level predicate behind a failing verdict; true when
/// the element still fails.
bool replay_failure(const FiniteRing& R, const IdealSet& I, const IdealVerdict& v);

bool ring_is_clean(const FiniteRing& R);
bool ring_is_weakly_clean(const FiniteRing& R);

/// An idempotent of R in the given coset of R/J, or nullopt when the coset is
/// not idempotent. Uses the iteration c -> 3c^2 - 2c^3, which converges since
/// J is nil in a finite ring. Throws std::logic_error if no lift is reached.
std::optional<Elem> lift_idempotent(const FiniteRing& R, const QuotientRing& RJ, std::span<const Elem> J,
                                    Elem coset);
/// Convenience form computing R/J itself; `coset` indexes R/J as built by quotient().
std::optional<Elem> lift_idempotent(const FiniteRing& R, const IdealSet& J, Elem coset);

struct CornerReport {
  Elem idempotent = 0;
  CornerRing corner;
  IdealSet ideal;
  bool clean = false;
  bool weakly_clean = false;
};

struct PeirceReport {
  bool complete_orthogonal = false;
  std::vector<CornerReport> corners;
  /// Every corner ideal weakly clean and at most one not clean.
  bool condition_holds = false;
};

/// Throws DomainError when es is not a complete orthogonal set.
PeirceReport peirce_analysis(const FiniteRing& R, std::span<const Elem> es, const IdealSet& I);

}  // namespace cleanring
