#pragma once

// The semilocal ring Z_P = { a/b : gcd(b, prod P) = 1 } for a finite prime set
// P. It is a domain, so its idempotents are 0 and 1, and a/b is a unit exactly
// when no p in P divides a. Every nonzero ideal is <prod p^e_p>.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cleanring/ideals.hpp"
#include "cleanring/ring.hpp"

namespace cleanring {

using BigInt = boost::multiprecision::cpp_int;

class PrimeSet {
 public:
  /// Sorted, distinct primes; throws DomainError on an empty list, a repeat or a non-prime.
  explicit PrimeSet(std::vector<unsigned> primes);

  std::span<const unsigned> primes() const noexcept { return primes_; }
  const BigInt& modulus() const noexcept { return modulus_; }
  bool contains(unsigned p) const noexcept;
  /// "Z_(3,5)"
  std::string label() const;

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) { return a.primes_ == b.primes_; }

 private:
  std::vector<unsigned> primes_;
  BigInt modulus_;
};

/// A reduced fraction with positive denominator coprime to the modulus of the
/// PrimeSet it was created for. Sums, differences and products of valid
/// elements stay valid, so arithmetic does not need the PrimeSet.
class LocElem {
 public:
  /// Throws DomainError when den == 0 or gcd(den, modulus) != 1.
  LocElem(const PrimeSet& P, BigInt num, BigInt den = 1);

  /// "a/b" or "a" (optionally signed); throws DomainError on bad syntax or denominator.
  static LocElem parse(const PrimeSet& P, std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  std::string to_string() const;

  friend LocElem operator+(const LocElem& a, const LocElem& b);
  friend LocElem operator-(const LocElem& a, const LocElem& b);
  friend LocElem operator*(const LocElem& a, const LocElem& b);
  friend LocElem operator-(const LocElem& a);
  friend bool operator==(const LocElem& a, const LocElem& b) = default;

 private:
  LocElem(BigInt num, BigInt den, int);  // already valid; reduces
  BigInt num_;
  BigInt den_;
};

bool is_unit(const PrimeSet& P, const LocElem& x);
std::optional<LocElem> inverse(const PrimeSet& P, const LocElem& x);

/// {0, 1}.
std::vector<LocElem> idempotents_loc(const PrimeSet& P);

struct LocDecomposition {
  int sign = 1;
  int idempotent = 0;  // 0 or 1
  LocElem unit;
};

struct LocCleanClass {
  bool clean_plus = false;   // x or x - 1 is a unit
  bool clean_minus = false;  // x or x + 1 is a unit
  std::vector<LocDecomposition> witnesses;

  bool clean() const noexcept { return clean_plus; }
  bool weakly_clean() const noexcept { return clean_plus || clean_minus; }
};

LocCleanClass clean_class(const PrimeSet& P, const LocElem& x);

/// Zero, or <prod p^e_p> with exponents listed in the order of P.primes().
struct LocIdeal {
  bool zero = false;
  std::vector<unsigned> exponents;

  BigInt generator(const PrimeSet& P) const;
  bool contains(const PrimeSet& P, const LocElem& x) const;
  bool is_whole() const noexcept;
  /// "0" or "<d>"; the whole ring is "<1>".
  std::string label(const PrimeSet& P) const;
  friend bool operator==(const LocIdeal&, const LocIdeal&) = default;
};

/// p-adic valuation of a nonzero integer.
unsigned valuation(BigInt n, unsigned p);

LocIdeal normalize_ideal(const PrimeSet& P, const LocElem& g);
LocIdeal principal_loc_ideal(const PrimeSet& P, std::vector<unsigned> exponents);

/// Analytic decision. Let Z be the primes with e_p = 0.
///   zero ideal:               clean.
///   proper, nonzero (Z != P): clean iff Z is empty;
///                             weakly clean iff Z is empty, or Z = {p} with p odd.
///   whole ring (Z = P):       clean iff |P| = 1;
///                             weakly clean iff |P| = 1, or |P| = 2 with both primes odd.
bool is_clean_ideal_loc(const PrimeSet& P, const LocIdeal& I);
bool is_weakly_clean_ideal_loc(const PrimeSet& P, const LocIdeal& I);

inline constexpr std::size_t kDefaultSearchBound = 64;
/// Largest |P| for which the analytic criterion is cross-checked by the oracle.
inline constexpr std::size_t kValidatedPrimeCount = 3;

struct LocIdealVerdict {
  bool clean = false;
  bool weakly_clean = false;
  /// "analytic" inside the oracle-validated envelope, "analytic (unvalidated envelope)" above it.
  std::string basis;
};

LocIdealVerdict ideal_verdict_loc(const PrimeSet& P, const LocIdeal& I);

/// a lies in the principal ideal R b.
bool in_principal_loc(const PrimeSet& P, const LocElem& a, const LocElem& b);

/// Some idempotent e (in I when strict, else in {0, 1}) has e - x in R(x - x^2)
/// or e + x in R(x + x^2).
bool is_weakly_exchange_element_loc(const PrimeSet& P, const LocIdeal& I, const LocElem& x, bool strict = true);

enum class LocTarget { clean, weakly_clean, minus_only, plus_only };

/// Enumerates x = d a / b for b = 1..bound coprime to the modulus and
/// a = 0, 1, -1, 2, -2, ..., +-bound, with d the canonical generator, and
/// returns the first x that is not clean / not weakly clean (or that has
/// exactly the requested exclusive sign class).
std::optional<LocElem> witness_search(const PrimeSet& P, const LocIdeal& I, std::size_t bound, LocTarget target);

// Products mixing localized and finite components.

struct LocComponent {
  PrimeSet primes;
  LocElem element;
};
struct FiniteComponent {
  FiniteRing ring;
  Elem element;
};
using ProductComponent = std::variant<LocComponent, FiniteComponent>;

struct SignFlags {
  bool clean_plus = false;
  bool clean_minus = false;
  bool weakly_clean() const noexcept { return clean_plus || clean_minus; }
};

/// The sign in x = u +- e is shared by every coordinate, so a tuple is
/// clean_plus (clean_minus) iff every component is.
SignFlags product_clean_class(std::span<const ProductComponent> components);

struct LocIdealComponent {
  PrimeSet primes;
  LocIdeal ideal;
};
struct FiniteIdealComponent {
  IdealSet ideal;
};
using ProductIdealComponent = std::variant<LocIdealComponent, FiniteIdealComponent>;

struct ProductIdealVerdict {
  bool weakly_clean = false;
  /// Set when weakly_clean is false: one element per component.
  std::vector<ProductComponent> witness;
  std::string reason;
};

/// prod I_a is weakly clean iff each I_a is weakly clean and at most one I_a
/// contains elements with an exclusive sign class (i.e. is not clean).
/// Witness elements for localized components come from witness_search.
ProductIdealVerdict is_weakly_clean_ideal_prod(std::span<const ProductIdealComponent> components,
                                               std::size_t bound = kDefaultSearchBound);

std::string to_string(const ProductComponent& c);

// End-to-end reproductions of the two localized scenarios.

struct LocalizedIdealExample {
  PrimeSet primes;
  LocElem generator;
  bool generator_is_unit = false;
  LocIdeal ideal;
  LocIdealVerdict verdict;
  std::optional<LocElem> oracle_non_clean;         // first non-clean element found
  std::optional<LocElem> oracle_non_weakly_clean;  // expected empty
  LocElem reference_witness;                       // 3/8
  LocCleanClass reference_class;
};

struct ProductIdealExample {
  PrimeSet primes;
  LocElem first_generator;
  LocElem second_generator;
  bool generators_are_units = false;
  LocIdeal first_ideal;
  LocIdeal second_ideal;
  bool first_weakly_clean = false;
  bool first_clean = false;
  bool second_weakly_clean = false;
  bool second_clean = false;
  ProductIdealVerdict first_summand;   // I1 x 0
  ProductIdealVerdict second_summand;  // 0 x I2
  ProductIdealVerdict product;         // I1 x I2 = I1 x 0 + 0 x I2
  std::vector<ProductComponent> reference_witness;  // (3/8, -3/8)
  SignFlags reference_first;
  SignFlags reference_second;
  SignFlags reference_tuple;
};

struct ExamplesReport {
  LocalizedIdealExample ideal_example;
  ProductIdealExample product_example;
  bool ok = false;
};

ExamplesReport reproduce_examples();

}  // namespace cleanring
