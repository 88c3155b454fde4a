#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cleanring/constructions.hpp"
#include "cleanring/ring.hpp"

namespace cleanring {

/// Default cap on the ring order for which all_ideals enumerates.
inline constexpr std::size_t kDefaultIdealEnumerationCap = 64;

/// A two-sided ideal materialized as its sorted member list.
class IdealSet {
 public:
  /// Members are sorted and deduplicated; the ideal property is not checked here.
  IdealSet(FiniteRing ring, std::vector<Elem> members, std::vector<Elem> generators = {});

  const FiniteRing& ring() const noexcept { return ring_; }
  std::span<const Elem> members() const noexcept { return members_; }
  std::span<const Elem> generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem x) const noexcept { return x < mask_.size() && mask_[x] != 0; }
  bool is_zero() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == ring_.order(); }

  /// "0", "R", or "<g1,g2,...>".
  std::string label() const;

  friend bool operator==(const IdealSet& a, const IdealSet& b) {
    return a.members_ == b.members_ && a.ring_ == b.ring_;
  }

 private:
  FiniteRing ring_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<char> mask_;
};

/// Smallest two-sided ideal containing gens.
IdealSet ideal_closure(const FiniteRing& R, std::span<const Elem> gens);
bool is_ideal(const FiniteRing& R, std::span<const Elem> S);
IdealSet ideal_sum(const IdealSet& I, const IdealSet& J);
IdealSet ideal_intersection(const IdealSet& I, const IdealSet& J);
bool is_subset(const IdealSet& I, const IdealSet& J);

/// Distinct principal ideals <x>, each labelled by its smallest generator.
std::vector<IdealSet> principal_ideals(const FiniteRing& R);

/// Every two-sided ideal, ordered by (size, members). Every ideal is a finite
/// sum of principal ideals, so the sum-closure of principal_ideals is complete.
/// Throws SizeError above max_order.
std::vector<IdealSet> all_ideals(const FiniteRing& R, std::size_t max_order = kDefaultIdealEnumerationCap);

/// all_ideals when under the cap, otherwise principal_ideals plus R.
std::vector<IdealSet> ideals_for_scan(const FiniteRing& R, std::size_t max_order = kDefaultIdealEnumerationCap);

IdealSet jacobson_ideal(const FiniteRing& R);
IdealSet zero_ideal(const FiniteRing& R);
IdealSet whole_ideal(const FiniteRing& R);

QuotientRing quotient(const IdealSet& I);

// Induced ideals. Each takes the ambient ring built by the matching
// construction and the component ideals, and checks the result is an ideal.

/// M_k(I) inside M_k(R).
IdealSet matrix_ideal(const FiniteRing& Mk, const IdealSet& I, std::size_t k);
/// prod I_a inside prod R_a.
IdealSet product_ideal(const FiniteRing& P, std::span<const IdealSet> parts);
/// I(N) = { (r, n) : r in I, n in N } inside R(M). Throws DomainError if N is not a submodule.
IdealSet idealization_ideal(const FiniteRing& RM, const Bimodule& M, const IdealSet& I, std::span<const Elem> N);
/// [[I, M], [N, J]] inside morita_zero(R, S, M, N).
IdealSet morita_ideal(const FiniteRing& T, const Bimodule& M, const Bimodule& N, const IdealSet& I,
                      const IdealSet& J);
/// [[I, 0], [M, J]] inside tri2(R, S, M).
IdealSet tri2_ideal(const FiniteRing& T, const Bimodule& M, const IdealSet& I, const IdealSet& J);
/// [[I, 0, 0], [A21, J, 0], [A31, A32, K]] inside tri3.
IdealSet tri3_ideal(const FiniteRing& T, const Bimodule& A21, const Bimodule& A31, const Bimodule& A32,
                    const IdealSet& I, const IdealSet& J, const IdealSet& K);
/// I[x]/(x^k) inside R[x]/(x^k).
IdealSet series_ideal(const FiniteRing& Rk, const IdealSet& I, std::size_t k);
/// eIe inside eRe.
IdealSet corner_ideal(const CornerRing& C, const IdealSet& I);

/// Smallest left submodule of M containing gens (closed under + and r.m).
std::vector<Elem> submodule_closure(const Bimodule& M, std::span<const Elem> gens);
bool is_submodule(const Bimodule& M, std::span<const Elem> N);
/// Every left submodule, ordered by (size, members).
std::vector<std::vector<Elem>> all_submodules(const Bimodule& M);

}  // namespace cleanring
