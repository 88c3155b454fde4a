#pragma once

// Executable checks of the structural results about clean, weakly clean and
// weakly exchange ideals, plus the computed facts the rest of the library
// relies on (radical, lifting, finite cleanness). Each check returns a
// LawReport; a failing report carries a witness that can be replayed with the
// predicates of clean.hpp / localized.hpp.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cleanring/clean.hpp"
#include "cleanring/constructions.hpp"
#include "cleanring/ideals.hpp"
#include "cleanring/localized.hpp"
#include "cleanring/ring.hpp"
#include "cleanring/serialize.hpp"

namespace cleanring {

enum class LawVerdict { pass, fail, skipped };
enum class LawDirection { iff, implies, unconditional };
/// degenerate: the outcome is forced because every finite ring is clean.
enum class InstanceStrength { degenerate, discriminating };

std::string to_string(LawVerdict v);
std::string to_string(LawDirection d);
std::string to_string(InstanceStrength s);

struct LawInfo {
  std::string id;
  std::string statement;
  LawDirection direction;
};

/// Every law, in report order.
const std::vector<LawInfo>& law_catalog();
const LawInfo& law_info(const std::string& id);

struct LawReport {
  std::string law;
  InstanceStrength strength = InstanceStrength::degenerate;
  std::vector<std::pair<std::string, std::string>> inputs;
  LawVerdict verdict = LawVerdict::pass;
  /// The unmet hypothesis for skipped, the broken side for fail.
  std::string reason;
  std::optional<Json> witness;
  std::vector<std::string> notes;
  std::size_t scanned = 0;
  double seconds = 0;  // not serialized

  /// Stable field order; `seconds` is left out so output is reproducible.
  Json to_json() const;
};

// Laws over one finite ring and one of its ideals.

LawReport law_proper_ideals(const FiniteRing& R);
LawReport law_weakly_exchange(const FiniteRing& R, const IdealSet& I);
LawReport law_central_equivalence(const FiniteRing& R, const IdealSet& I);
LawReport law_reduced(const FiniteRing& R, const IdealSet& I);
LawReport law_unique_central(const FiniteRing& R, const IdealSet& I);
LawReport law_finite_cleanness(const FiniteRing& R, const IdealSet& I);
LawReport law_radical(const FiniteRing& R);
LawReport law_lifting(const FiniteRing& R);
LawReport law_radical_quotient(const FiniteRing& R, const IdealSet& I);
/// Checks I + J for every J in `radical_ideals` (each must lie in J(R)).
LawReport law_sum_with_radical(const FiniteRing& R, const IdealSet& I, std::span<const IdealSet> radical_ideals);
/// Each entry of `sets` must be a complete orthogonal set of idempotents.
LawReport law_peirce(const FiniteRing& R, std::span<const std::vector<Elem>> sets, const IdealSet& I);

// Laws over constructions.

/// Exhaustive over all (A, x, i, j) when samples is empty.
LawReport law_det_cofactor(const FiniteRing& R, std::size_t k, std::optional<std::size_t> samples,
                           std::uint64_t seed = 2024);
LawReport law_matrix_ideal(const FiniteRing& R, const IdealSet& I, std::size_t k, std::size_t max_order = 2000);
LawReport law_product(std::span<const IdealSet> ideals);
/// Mixed localized / finite factors. Both sides are computed independently:
/// a bounded tuple search and the per-factor verdicts.
LawReport law_product_mixed(std::span<const ProductIdealComponent> components, std::size_t bound = 12);

struct MoritaInstance {
  FiniteRing R;
  FiniteRing S;
  Bimodule M;  // (R,S)
  Bimodule N;  // (S,R)
};
LawReport law_morita(const MoritaInstance& m, const IdealSet& I, const IdealSet& J);

struct Tri3Instance {
  FiniteRing A1, A2, A3;
  Bimodule A21, A31, A32;
  std::optional<PairingMap> comp;
};
LawReport law_tri3_forward(const Tri3Instance& t, const IdealSet& I, const IdealSet& J, const IdealSet& K);
LawReport law_tri3_converse(const Tri3Instance& t, const IdealSet& I, const IdealSet& J, const IdealSet& K);

LawReport law_series(const FiniteRing& R, const IdealSet& I, std::size_t k);
/// N must be a submodule of M with I M inside N.
LawReport law_idealization(const FiniteRing& R, const Bimodule& M, const IdealSet& I, std::span<const Elem> N);

// Laws over Z_P, using bounded enumeration (elements d a / b, |a|, b <= bound).

LawReport law_proper_ideals_loc(const PrimeSet& P, std::size_t bound = kDefaultSearchBound);
LawReport law_weakly_exchange_loc(const PrimeSet& P, const LocIdeal& I, std::size_t bound = 16);
LawReport law_central_equivalence_loc(const PrimeSet& P, const LocIdeal& I, std::size_t bound = 16);
LawReport law_reduced_loc(const PrimeSet& P, const LocIdeal& I, std::size_t bound = 16);

/// Zero ideal plus every <prod p^e_p> with 0 <= e_p <= max_exponent.
std::vector<LocIdeal> loc_ideal_family(const PrimeSet& P, unsigned max_exponent = 2);

// Suites.

/// DSL text of every finite catalog ring, in run order. Quotients by the
/// radical follow for every entry with a nonzero radical.
std::vector<std::string> catalog_specs();
/// Prime sets used by the localized part of the catalog.
std::vector<PrimeSet> catalog_prime_sets();

/// Every per-ring and per-ideal law on R.
std::vector<LawReport> laws_for_ring(const FiniteRing& R);
/// Every localized law on Z_P.
std::vector<LawReport> laws_for_localized(const PrimeSet& P);
/// The full catalog run: per-ring laws, construction laws, localized laws.
/// Reports are sorted by law id in catalog order; within a law, by run order.
std::vector<LawReport> run_catalog();

struct LawSummary {
  std::string law;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t discriminating = 0;
  double seconds = 0;
};

/// One row per law of law_catalog(), including laws with no reports.
std::vector<LawSummary> summarize(std::span<const LawReport> reports);
bool all_passed(std::span<const LawReport> reports);
/// One JSON object per line, then a summary line {"summary": ...}.
std::string reports_to_json_lines(std::span<const LawReport> reports);
/// Aligned text table of the summary plus one line per failure.
std::string summary_table(std::span<const LawReport> reports, bool with_times = true);

}  // namespace cleanring
