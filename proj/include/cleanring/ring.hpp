#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cleanring {

/// Index of an element inside a FiniteRing (or a bimodule carrier).
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

/// Default hard cap on the order of rings that are built or validated.
inline constexpr std::size_t kDefaultMaxOrder = 256;

/// Raw operation tables of a candidate ring. Tables are row-major,
/// `add[a * order + b] == a + b`. `neg` may be left empty and is then derived.
struct RingTables {
  std::string label;
  std::size_t order = 0;
  Elem one = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  std::vector<Elem> neg;
  std::string construction;
};

struct AxiomViolation {
  std::string axiom;
  std::array<Elem, 3> witness{};
  std::size_t count = 0;
};

struct ValidationReport {
  bool ok = false;
  bool trivial = false;
  std::vector<AxiomViolation> violations;
};

/// Checks the ring axioms exhaustively (O(n^3)). Throws StructuralError for
/// malformed tables and SizeError when order exceeds max_order.
ValidationReport validate_ring(const RingTables& tables, std::size_t max_order = kDefaultMaxOrder);

/// A finite unital ring given by operation tables. Element 0 is the additive
/// identity. Values are immutable and cheap to copy; equality compares tables.
class FiniteRing {
 public:
  /// Structural checks only; axioms are the caller's responsibility (see
  /// validate_ring and checked()).
  static FiniteRing from_tables(RingTables tables);

  /// validate_ring followed by from_tables; throws AxiomError on failure.
  static FiniteRing checked(RingTables tables, std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const noexcept { return d_->t.order; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return d_->t.one; }
  const std::string& label() const noexcept { return d_->t.label; }
  const std::string& construction() const noexcept { return d_->t.construction; }
  const RingTables& tables() const noexcept { return d_->t; }

  Elem add(Elem a, Elem b) const noexcept { return d_->t.add[a * d_->t.order + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return d_->t.mul[a * d_->t.order + b]; }
  Elem neg(Elem a) const noexcept { return d_->t.neg[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  bool is_trivial() const noexcept { return d_->t.one == 0; }
  bool is_commutative() const noexcept { return d_->commutative; }

  bool is_unit(Elem a) const noexcept { return d_->inverse[a] != kNoElem; }
  std::optional<Elem> inverse(Elem a) const noexcept;
  bool is_idempotent(Elem a) const noexcept { return mul(a, a) == a; }

  /// Ascending element indices.
  std::span<const Elem> units() const noexcept { return d_->units; }
  std::span<const Elem> idempotents() const noexcept { return d_->idempotents; }

  /// Same tables under a new display label / provenance.
  FiniteRing relabeled(std::string label, std::string construction = {}) const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b);

 private:
  struct Data {
    RingTables t;
    std::vector<Elem> inverse;
    std::vector<Elem> units;
    std::vector<Elem> idempotents;
    bool commutative = false;
  };
  explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A reference to one element of a ring.
struct ElemRef {
  const FiniteRing& ring;
  Elem index;
};

bool is_unit(ElemRef r);
std::optional<Elem> inverse(ElemRef r);
bool is_central(ElemRef r);

std::vector<Elem> units(const FiniteRing& R);
std::vector<Elem> idempotents(const FiniteRing& R);
bool is_central(const FiniteRing& R, Elem x);
bool has_nonzero_nilpotents(const FiniteRing& R);
bool is_nilpotent(const FiniteRing& R, Elem x);

/// x^k with x^0 = 1.
Elem power(const FiniteRing& R, Elem x, std::size_t k);

/// The image of the integer k under Z -> R.
Elem integer_image(const FiniteRing& R, long long k);

/// { x : 1 - a x is a unit for every a }, ascending. Cross-validated against
/// the two-sided form 1 - a x b before returning.
std::vector<Elem> jacobson_radical(const FiniteRing& R);

/// Results of the independent checks a radical candidate must satisfy.
struct RadicalChecks {
  bool quasi_regular = false;  // 1 - a x is a unit for all a, x in J
  bool two_sided = false;      // 1 - a x b is a unit for all a, b, x in J
  bool is_ideal = false;
  bool one_plus_in_units = false;
  bool no_nonzero_idempotent = false;
  bool all() const {
    return quasi_regular && two_sided && is_ideal && one_plus_in_units && no_nonzero_idempotent;
  }
};
RadicalChecks check_radical(const FiniteRing& R, std::span<const Elem> J);

/// Each e_i idempotent, e_i e_j = 0 for i != j, and sum e_i = 1.
bool is_complete_orthogonal(const FiniteRing& R, std::span<const Elem> es);

}  // namespace cleanring
