#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cleanring/ring.hpp"

namespace cleanring {

// Element encodings (all via MixedRadix, first component most significant):
//   direct_product        (x_1, ..., x_k)
//   matrix_ring           entries row-major, (0,0) first
//   morita_zero           (r, m, n, s) for [[r, m], [n, s]]
//   tri2                  (r, m, s)    for [[r, 0], [m, s]]
//   tri3                  (a1, a21, a31, a2, a32, a3), the lower triangle column by column
//   idealization          (r, m)
//   truncated_power_series (a_0, ..., a_{k-1})
// Quotient cosets are numbered by ascending smallest representative; corner
// ring elements by ascending index in the ambient ring.

/// A finite abelian group with a left action of `left_ring` and a right action
/// of `right_ring`. Tables: add is order x order, left_action is
/// |left_ring| x order, right_action is order x |right_ring|.
class Bimodule {
 public:
  Bimodule(FiniteRing left, FiniteRing right, std::size_t order, std::vector<Elem> add,
           std::vector<Elem> left_action, std::vector<Elem> right_action, std::string label);

  /// R acting on itself by multiplication on both sides.
  static Bimodule regular(const FiniteRing& R);
  static Bimodule zero(const FiniteRing& left, const FiniteRing& right);
  /// Z_m with r.x = (r mod m) x, where r is read as the integer index of the
  /// element. Meaningful for left/right rings Z_n with m | n; validate() rejects
  /// anything else.
  static Bimodule cyclic(const FiniteRing& left, const FiniteRing& right, std::size_t m);

  std::size_t order() const noexcept { return order_; }
  const FiniteRing& left_ring() const noexcept { return left_; }
  const FiniteRing& right_ring() const noexcept { return right_; }
  const std::string& label() const noexcept { return label_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * order_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem act_left(Elem r, Elem m) const noexcept { return left_action_[r * order_ + m]; }
  Elem act_right(Elem m, Elem s) const noexcept { return right_action_[m * right_.order() + s]; }

  /// Violated axiom names; empty when the bimodule is valid.
  std::vector<std::string> validate() const;
  void require_valid() const;

  /// Same left and right ring, and r.m == m.r for all r, m.
  bool is_symmetric() const;

 private:
  FiniteRing left_;
  FiniteRing right_;
  std::size_t order_;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  std::vector<Elem> left_action_;
  std::vector<Elem> right_action_;
  std::string label_;
};

/// Composition A32 x A21 -> A31 used by tri3. map is |A32| x |A21|.
class PairingMap {
 public:
  PairingMap(std::size_t left_order, std::size_t right_order, std::vector<Elem> map, std::string label);

  static PairingMap zero(const Bimodule& a32, const Bimodule& a21);
  /// (i, j) -> i * j mod |A31| on cyclic carriers.
  static PairingMap cyclic_product(const Bimodule& a32, const Bimodule& a21, const Bimodule& a31);

  Elem operator()(Elem m32, Elem m21) const noexcept { return map_[m32 * right_order_ + m21]; }
  const std::string& label() const noexcept { return label_; }
  bool is_zero() const;

  /// Biadditivity, A2-balance and A3/A1 linearity against the given bimodules.
  std::vector<std::string> validate(const Bimodule& a21, const Bimodule& a31, const Bimodule& a32) const;

 private:
  std::size_t left_order_;
  std::size_t right_order_;
  std::vector<Elem> map_;
  std::string label_;
};

FiniteRing zn(std::size_t n);
FiniteRing direct_product(std::span<const FiniteRing> factors, std::size_t max_order = kDefaultMaxOrder);
FiniteRing matrix_ring(const FiniteRing& R, std::size_t k, std::size_t max_order = kDefaultMaxOrder);

/// Determinant of a k x k row-major matrix over a commutative ring, by cofactor
/// expansion along the first row. k <= 4.
Elem det(const FiniteRing& R, std::size_t k, std::span<const Elem> a);
/// Signed minor (-1)^(i+j) det(A without row i, column j); 0-based i, j.
Elem cofactor(const FiniteRing& R, std::size_t k, std::span<const Elem> a, std::size_t i, std::size_t j);

/// [[R, M], [N, S]] with both pairings zero. M is an (R,S)-bimodule, N an (S,R)-bimodule.
FiniteRing morita_zero(const FiniteRing& R, const FiniteRing& S, const Bimodule& M, const Bimodule& N,
                       std::size_t max_order = kDefaultMaxOrder);

/// [[R, 0], [M, S]] with M an (S,R)-bimodule.
FiniteRing tri2(const FiniteRing& R, const FiniteRing& S, const Bimodule& M,
                std::size_t max_order = kDefaultMaxOrder);

/// [[A1, 0, 0], [A21, A2, 0], [A31, A32, A3]] with A21 an (A2,A1)-, A31 an
/// (A3,A1)- and A32 an (A3,A2)-bimodule. A missing comp means the zero map.
FiniteRing tri3(const FiniteRing& A1, const FiniteRing& A2, const FiniteRing& A3, const Bimodule& A21,
                const Bimodule& A31, const Bimodule& A32, const std::optional<PairingMap>& comp = std::nullopt,
                std::size_t max_order = kDefaultMaxOrder);

/// The column [A21; A31] as a (B, A1)-bimodule, B = tri2(A2, A3, A32). With
/// it, tri2(A1, B, column) has the same tables as tri3.
Bimodule triangular_column(const FiniteRing& B, const FiniteRing& A1, const Bimodule& A21, const Bimodule& A31,
                           const Bimodule& A32, const std::optional<PairingMap>& comp = std::nullopt);

/// R(M) on R x M with (r, m)(r', m') = (rr', r m' + r' m). R commutative, M symmetric.
FiniteRing idealization(const FiniteRing& R, const Bimodule& M, std::size_t max_order = kDefaultMaxOrder);

struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> projection;       // element of R -> coset index
  std::vector<Elem> representatives;  // coset index -> smallest element
};

/// R / I for a two-sided ideal given by its members. Throws DomainError if
/// `ideal` is not an ideal.
QuotientRing quotient(const FiniteRing& R, std::span<const Elem> ideal, const std::string& ideal_label = "I");

FiniteRing truncated_power_series(const FiniteRing& R, std::size_t k, std::size_t max_order = kDefaultMaxOrder);

struct CornerRing {
  FiniteRing ring;
  Elem idempotent;
  std::vector<Elem> embedding;  // corner index -> element of R
  std::vector<Elem> locate;     // element of R -> corner index, kNoElem outside
};

/// eRe with unity e.
CornerRing corner_ring(const FiniteRing& R, Elem e);

}  // namespace cleanring
