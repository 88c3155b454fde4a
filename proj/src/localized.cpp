#include "cleanring/localized.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cleanring/clean.hpp"
#include "cleanring/error.hpp"

namespace cleanring {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned mod_small(const BigInt& n, unsigned p) {
  BigInt r = n % p;
  if (r < 0) r += p;
  return r.convert_to<unsigned>();
}

bool coprime_to(const PrimeSet& P, const BigInt& n) {
  return std::none_of(P.primes().begin(), P.primes().end(), [&](unsigned p) { return mod_small(n, p) == 0; });
}

}  // namespace

PrimeSet::PrimeSet(std::vector<unsigned> primes) : primes_(std::move(primes)), modulus_(1) {
  if (primes_.empty()) throw DomainError("prime set must be non-empty");
  std::sort(primes_.begin(), primes_.end());
  if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end()) {
    throw DomainError("prime set has a repeated prime");
  }
  for (unsigned p : primes_) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    modulus_ *= p;
  }
}

bool PrimeSet::contains(unsigned p) const noexcept {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string PrimeSet::label() const {
  std::string s = "Z_(";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(primes_[i]);
  }
  return s + ')';
}

LocElem::LocElem(const PrimeSet& P, BigInt num, BigInt den) : LocElem(std::move(num), std::move(den), 0) {
  if (den_ == 0) throw DomainError("zero denominator");
  if (!coprime_to(P, den_)) {
    throw DomainError("denominator " + den_.str() + " is not coprime to " + P.modulus().str());
  }
}

LocElem::LocElem(BigInt num, BigInt den, int) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) return;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

LocElem LocElem::parse(const PrimeSet& P, std::string_view text) {
  auto parse_int = [&](std::string_view s, bool allow_sign) -> BigInt {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw DomainError("malformed rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
      }
    }
    BigInt v(std::string(s.substr(i)));
    return !s.empty() && s[0] == '-' ? BigInt(-v) : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return LocElem(P, parse_int(text, true));
  return LocElem(P, parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
}

std::string LocElem::to_string() const { return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str(); }

LocElem operator+(const LocElem& a, const LocElem& b) {
  return LocElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, 0);
}
LocElem operator-(const LocElem& a, const LocElem& b) {
  return LocElem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, 0);
}
LocElem operator*(const LocElem& a, const LocElem& b) { return LocElem(a.num_ * b.num_, a.den_ * b.den_, 0); }
LocElem operator-(const LocElem& a) { return LocElem(-a.num_, a.den_, 0); }

bool is_unit(const PrimeSet& P, const LocElem& x) { return coprime_to(P, x.num()); }

std::optional<LocElem> inverse(const PrimeSet& P, const LocElem& x) {
  if (!is_unit(P, x)) return std::nullopt;
  return LocElem(P, x.den(), x.num());
}

std::vector<LocElem> idempotents_loc(const PrimeSet& P) { return {LocElem(P, 0), LocElem(P, 1)}; }

LocCleanClass clean_class(const PrimeSet& P, const LocElem& x) {
  LocCleanClass c;
  for (int sign : {1, -1}) {
    for (const LocElem& e : idempotents_loc(P)) {
      LocElem u = sign > 0 ? x - e : x + e;
      if (is_unit(P, u)) {
        c.witnesses.push_back({sign, e.is_zero() ? 0 : 1, std::move(u)});
        (sign > 0 ? c.clean_plus : c.clean_minus) = true;
      }
    }
  }
  return c;
}

unsigned valuation(BigInt n, unsigned p) {
  if (n == 0) throw DomainError("valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

BigInt LocIdeal::generator(const PrimeSet& P) const {
  if (zero) return 0;
  BigInt d = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) d *= boost::multiprecision::pow(BigInt(P.primes()[i]), exponents[i]);
  return d;
}

bool LocIdeal::contains(const PrimeSet& P, const LocElem& x) const {
  if (x.is_zero()) return true;
  if (zero) return false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (valuation(x.num(), P.primes()[i]) < exponents[i]) return false;
  }
  return true;
}

bool LocIdeal::is_whole() const noexcept {
  return !zero && std::all_of(exponents.begin(), exponents.end(), [](unsigned e) { return e == 0; });
}

std::string LocIdeal::label(const PrimeSet& P) const { return zero ? "0" : "<" + generator(P).str() + ">"; }

LocIdeal normalize_ideal(const PrimeSet& P, const LocElem& g) {
  LocIdeal I;
  if (g.is_zero()) {
    I.zero = true;
    return I;
  }
  for (unsigned p : P.primes()) I.exponents.push_back(valuation(g.num(), p));
  return I;
}

LocIdeal principal_loc_ideal(const PrimeSet& P, std::vector<unsigned> exponents) {
  if (exponents.size() != P.primes().size()) throw DomainError("one exponent per prime expected");
  return LocIdeal{false, std::move(exponents)};
}

namespace {

struct PrimeSplit {
  std::size_t support = 0;       // primes with e_p >= 1
  std::vector<unsigned> absent;  // primes with e_p = 0
};

PrimeSplit split(const PrimeSet& P, const LocIdeal& I) {
  if (I.exponents.size() != P.primes().size()) throw DomainError("ideal does not match the prime set");
  PrimeSplit s;
  for (std::size_t i = 0; i < I.exponents.size(); ++i) {
    if (I.exponents[i] == 0) {
      s.absent.push_back(P.primes()[i]);
    } else {
      ++s.support;
    }
  }
  return s;
}

}  // namespace

bool is_clean_ideal_loc(const PrimeSet& P, const LocIdeal& I) {
  if (I.zero) return true;
  const PrimeSplit s = split(P, I);
  if (s.support > 0) return s.absent.empty();
  return P.primes().size() == 1;
}

bool is_weakly_clean_ideal_loc(const PrimeSet& P, const LocIdeal& I) {
  if (I.zero) return true;
  const PrimeSplit s = split(P, I);
  if (s.support > 0) return s.absent.empty() || (s.absent.size() == 1 && s.absent[0] != 2);
  const auto ps = P.primes();
  return ps.size() == 1 || (ps.size() == 2 && !P.contains(2));
}

bool in_principal_loc(const PrimeSet& P, const LocElem& a, const LocElem& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  for (unsigned p : P.primes()) {
    if (valuation(a.num(), p) < valuation(b.num(), p)) return false;
  }
  return true;
}

bool is_weakly_exchange_element_loc(const PrimeSet& P, const LocIdeal& I, const LocElem& x, bool strict) {
  const LocElem x2 = x * x;
  for (const LocElem& e : idempotents_loc(P)) {
    if (strict && !I.contains(P, e)) continue;
    if (in_principal_loc(P, e - x, x - x2) || in_principal_loc(P, e + x, x + x2)) return true;
  }
  return false;
}

LocIdealVerdict ideal_verdict_loc(const PrimeSet& P, const LocIdeal& I) {
  return LocIdealVerdict{is_clean_ideal_loc(P, I), is_weakly_clean_ideal_loc(P, I),
                         P.primes().size() <= kValidatedPrimeCount ? "analytic" : "analytic (unvalidated envelope)"};
}

std::optional<LocElem> witness_search(const PrimeSet& P, const LocIdeal& I, std::size_t bound, LocTarget target) {
  // Unit status of n/b only depends on n modulo each p, so x, x - 1 and x + 1
  // are classified from small residues; only the hit is built exactly.
  const auto ps = P.primes();
  const BigInt d = I.generator(P);
  std::vector<unsigned> dmod(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) dmod[i] = mod_small(d, ps[i]);

  auto hit = [&](long long a, unsigned long long b) {
    bool unit = true, minus_one_unit = true, plus_one_unit = true;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const unsigned long long p = ps[i];
      const unsigned long long am = static_cast<unsigned long long>(((a % static_cast<long long>(p)) + p) % p);
      const unsigned long long n = dmod[i] * am % p;
      const unsigned long long bm = b % p;
      unit = unit && n != 0;
      minus_one_unit = minus_one_unit && (n + p - bm) % p != 0;
      plus_one_unit = plus_one_unit && (n + bm) % p != 0;
    }
    const bool plus = unit || minus_one_unit;
    const bool minus = unit || plus_one_unit;
    switch (target) {
      case LocTarget::clean:
        return !plus;
      case LocTarget::weakly_clean:
        return !plus && !minus;
      case LocTarget::minus_only:
        return minus && !plus;
      case LocTarget::plus_only:
        return plus && !minus;
    }
    return false;
  };

  if (I.zero) {
    if (hit(0, 1)) return LocElem(P, 0);
    return std::nullopt;
  }
  for (unsigned long long b = 1; b <= bound; ++b) {
    if (!coprime_to(P, BigInt(b))) continue;
    for (long long t = 0; t <= static_cast<long long>(bound); ++t) {
      for (long long a : {t, -t}) {
        if (t == 0 && a != t) continue;
        if (hit(a, b)) return LocElem(P, d * a, BigInt(b));
      }
    }
  }
  return std::nullopt;
}

SignFlags product_clean_class(std::span<const ProductComponent> components) {
  SignFlags f{true, true};
  for (const ProductComponent& c : components) {
    bool plus = false, minus = false;
    if (const auto* loc = std::get_if<LocComponent>(&c)) {
      const LocCleanClass cc = clean_class(loc->primes, loc->element);
      plus = cc.clean_plus;
      minus = cc.clean_minus;
    } else {
      const auto& fin = std::get<FiniteComponent>(c);
      const CleanClass cc = is_weakly_clean_element(fin.ring, fin.element);
      plus = cc.clean_plus;
      minus = cc.clean_minus;
    }
    f.clean_plus = f.clean_plus && plus;
    f.clean_minus = f.clean_minus && minus;
  }
  return f;
}

namespace {

struct ComponentProfile {
  bool weakly_clean = false;
  bool clean = false;
  std::optional<ProductComponent> bad;         // not weakly clean
  std::optional<ProductComponent> minus_only;  // clean_minus only
  std::optional<ProductComponent> plus_only;   // clean_plus only
  ProductComponent zero;
};

ComponentProfile profile(const ProductIdealComponent& c, std::size_t bound) {
  if (const auto* loc = std::get_if<LocIdealComponent>(&c)) {
    const PrimeSet& P = loc->primes;
    ComponentProfile prof{is_weakly_clean_ideal_loc(P, loc->ideal), is_clean_ideal_loc(P, loc->ideal), {}, {}, {},
                          LocComponent{P, LocElem(P, 0)}};
    auto search = [&](LocTarget t) -> ProductComponent {
      auto x = witness_search(P, loc->ideal, bound, t);
      if (!x) throw DomainError("no witness within bound " + std::to_string(bound) + " in " + loc->ideal.label(P));
      return LocComponent{P, *x};
    };
    if (!prof.weakly_clean) {
      prof.bad = search(LocTarget::weakly_clean);
    } else if (!prof.clean) {
      prof.minus_only = search(LocTarget::minus_only);
      prof.plus_only = search(LocTarget::plus_only);
    }
    return prof;
  }
  const IdealSet& I = std::get<FiniteIdealComponent>(c).ideal;
  const FiniteRing& R = I.ring();
  ComponentProfile prof{true, true, {}, {}, {}, FiniteComponent{R, R.zero()}};
  for (Elem x : I.members()) {
    const CleanClass cc = is_weakly_clean_element(R, x);
    if (!cc.weakly_clean()) {
      prof.weakly_clean = prof.clean = false;
      if (!prof.bad) prof.bad = FiniteComponent{R, x};
    } else if (!cc.clean_plus) {
      prof.clean = false;
      if (!prof.minus_only) prof.minus_only = FiniteComponent{R, x};
    } else if (!cc.clean_minus) {
      prof.clean = false;
      if (!prof.plus_only) prof.plus_only = FiniteComponent{R, x};
    }
  }
  return prof;
}

}  // namespace

ProductIdealVerdict is_weakly_clean_ideal_prod(std::span<const ProductIdealComponent> components, std::size_t bound) {
  std::vector<ComponentProfile> profs;
  profs.reserve(components.size());
  for (const auto& c : components) profs.push_back(profile(c, bound));

  ProductIdealVerdict v;
  auto zeros = [&] {
    std::vector<ProductComponent> w;
    for (const auto& p : profs) w.push_back(p.zero);
    return w;
  };
  for (std::size_t a = 0; a < profs.size(); ++a) {
    if (!profs[a].weakly_clean) {
      v.witness = zeros();
      v.witness[a] = *profs[a].bad;
      v.reason = "component " + std::to_string(a + 1) + " is not weakly clean";
      return v;
    }
  }
  std::vector<std::size_t> not_clean;
  for (std::size_t a = 0; a < profs.size(); ++a) {
    if (!profs[a].clean) not_clean.push_back(a);
  }
  if (not_clean.size() >= 2) {
    const std::size_t a = not_clean[0], b = not_clean[1];
    v.witness = zeros();
    v.witness[a] = *profs[a].minus_only;
    v.witness[b] = *profs[b].plus_only;
    v.reason = "components " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
               " both have elements of a single sign class";
    return v;
  }
  v.weakly_clean = true;
  return v;
}

std::string to_string(const ProductComponent& c) {
  if (const auto* loc = std::get_if<LocComponent>(&c)) return loc->element.to_string();
  return std::to_string(std::get<FiniteComponent>(c).element);
}

ExamplesReport reproduce_examples() {
  const PrimeSet P({3, 5});
  const LocElem reference(P, 3, 8);

  LocElem g(P, 2, 11);
  LocIdeal I = normalize_ideal(P, g);
  LocalizedIdealExample ex1{P,
                            g,
                            is_unit(P, g),
                            I,
                            ideal_verdict_loc(P, I),
                            witness_search(P, I, kDefaultSearchBound, LocTarget::clean),
                            witness_search(P, I, kDefaultSearchBound, LocTarget::weakly_clean),
                            reference,
                            clean_class(P, reference)};

  LocElem g1(P, 2, 11), g2(P, 4, 7);
  LocIdeal I1 = normalize_ideal(P, g1), I2 = normalize_ideal(P, g2);
  const LocIdeal Z{true, {}};
  std::vector<ProductIdealComponent> parts{LocIdealComponent{P, I1}, LocIdealComponent{P, I2}};
  std::vector<ProductIdealComponent> first_only{LocIdealComponent{P, I1}, LocIdealComponent{P, Z}};
  std::vector<ProductIdealComponent> second_only{LocIdealComponent{P, Z}, LocIdealComponent{P, I2}};
  std::vector<ProductComponent> ref_tuple{LocComponent{P, reference}, LocComponent{P, -reference}};
  const LocCleanClass c1 = clean_class(P, reference), c2 = clean_class(P, -reference);
  ProductIdealExample ex2{P,
                          g1,
                          g2,
                          is_unit(P, g1) && is_unit(P, g2),
                          I1,
                          I2,
                          is_weakly_clean_ideal_loc(P, I1),
                          is_clean_ideal_loc(P, I1),
                          is_weakly_clean_ideal_loc(P, I2),
                          is_clean_ideal_loc(P, I2),
                          is_weakly_clean_ideal_prod(first_only),
                          is_weakly_clean_ideal_prod(second_only),
                          is_weakly_clean_ideal_prod(parts),
                          ref_tuple,
                          {c1.clean_plus, c1.clean_minus},
                          {c2.clean_plus, c2.clean_minus},
                          product_clean_class(ref_tuple)};

  const bool ok1 = ex1.generator_is_unit && ex1.ideal.is_whole() && ex1.verdict.weakly_clean && !ex1.verdict.clean &&
                   ex1.oracle_non_clean && !ex1.oracle_non_weakly_clean && ex1.reference_class.clean_minus &&
                   !ex1.reference_class.clean_plus;
  const bool ok2 = ex2.generators_are_units && ex2.first_weakly_clean && !ex2.first_clean && ex2.second_weakly_clean &&
                   !ex2.second_clean && ex2.first_summand.weakly_clean && ex2.second_summand.weakly_clean &&
                   !ex2.product.weakly_clean && !ex2.product.witness.empty() &&
                   !product_clean_class(ex2.product.witness).weakly_clean() && !ex2.reference_tuple.weakly_clean() &&
                   ex2.reference_first.clean_minus && !ex2.reference_first.clean_plus &&
                   ex2.reference_second.clean_plus && !ex2.reference_second.clean_minus;
  return ExamplesReport{std::move(ex1), std::move(ex2), ok1 && ok2};
}

}  // namespace cleanring
