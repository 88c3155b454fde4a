#include "cleanring/ring.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cleanring/error.hpp"

namespace cleanring {

namespace {

void check_structure(const RingTables& t) {
  const std::size_t n = t.order;
  if (n == 0) throw StructuralError("ring order must be positive");
  if (n >= kNoElem) throw StructuralError("ring order too large for element indices");
  if (t.add.size() != n * n) throw StructuralError("add table is not order x order");
  if (t.mul.size() != n * n) throw StructuralError("mul table is not order x order");
  if (!t.neg.empty() && t.neg.size() != n) throw StructuralError("neg table length differs from order");
  if (t.one >= n) throw StructuralError("unity index out of range");
  auto in_range = [n](Elem e) { return e < n; };
  if (!std::all_of(t.add.begin(), t.add.end(), in_range)) throw StructuralError("add table entry out of range");
  if (!std::all_of(t.mul.begin(), t.mul.end(), in_range)) throw StructuralError("mul table entry out of range");
  if (!std::all_of(t.neg.begin(), t.neg.end(), in_range)) throw StructuralError("neg table entry out of range");
}

class ViolationLog {
 public:
  void record(const char* axiom, Elem a, Elem b, Elem c) {
    auto [it, inserted] = seen_.try_emplace(axiom, entries_.size());
    if (inserted) entries_.push_back({axiom, {a, b, c}, 0});
    ++entries_[it->second].count;
  }
  std::vector<AxiomViolation> take() { return std::move(entries_); }

 private:
  std::map<std::string, std::size_t> seen_;
  std::vector<AxiomViolation> entries_;
};

}  // namespace

ValidationReport validate_ring(const RingTables& t, std::size_t max_order) {
  check_structure(t);
  const std::size_t n = t.order;
  if (n > max_order) {
    throw SizeError("ring of order " + std::to_string(n) + " exceeds validation cap " +
                    std::to_string(max_order));
  }
  const Elem* add = t.add.data();
  const Elem* mul = t.mul.data();
  ViolationLog log;

  for (Elem x = 0; x < n; ++x) {
    if (add[x] != x || add[x * n] != x) log.record("additive identity", x, 0, 0);
    if (mul[t.one * n + x] != x || mul[x * n + t.one] != x) log.record("multiplicative identity", x, t.one, 0);
    if (!t.neg.empty()) {
      if (add[x * n + t.neg[x]] != 0) log.record("additive inverse", x, t.neg[x], 0);
    } else {
      bool found = false;
      for (Elem y = 0; y < n && !found; ++y) found = add[x * n + y] == 0;
      if (!found) log.record("additive inverse", x, 0, 0);
    }
    for (Elem y = 0; y < n; ++y) {
      if (add[x * n + y] != add[y * n + x]) log.record("additive commutativity", x, y, 0);
    }
  }

  for (Elem a = 0; a < n; ++a) {
    const Elem* add_a = add + a * n;
    const Elem* mul_a = mul + a * n;
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = add_a[b];
      const Elem ab_prod = mul_a[b];
      const Elem* add_b = add + b * n;
      const Elem* mul_b = mul + b * n;
      const Elem* add_absum = add + ab_sum * n;
      const Elem* mul_abprod = mul + ab_prod * n;
      for (Elem c = 0; c < n; ++c) {
        if (add_absum[c] != add_a[add_b[c]]) log.record("additive associativity", a, b, c);
        if (mul_abprod[c] != mul_a[mul_b[c]]) log.record("multiplicative associativity", a, b, c);
        if (mul_a[add_b[c]] != add[ab_prod * n + mul_a[c]]) log.record("left distributivity", a, b, c);
        if (mul[ab_sum * n + c] != add[mul_a[c] * n + mul_b[c]]) log.record("right distributivity", a, b, c);
      }
    }
  }

  ValidationReport report;
  report.violations = log.take();
  report.ok = report.violations.empty();
  report.trivial = n == 1;
  return report;
}

FiniteRing FiniteRing::from_tables(RingTables t) {
  check_structure(t);
  const std::size_t n = t.order;
  auto d = std::make_shared<Data>();

  if (t.neg.empty()) {
    t.neg.assign(n, kNoElem);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (t.add[x * n + y] == 0) {
          t.neg[x] = y;
          break;
        }
      }
      if (t.neg[x] == kNoElem) {
        throw AxiomError("element " + std::to_string(x) + " of " + t.label + " has no additive inverse");
      }
    }
  }

  d->inverse.assign(n, kNoElem);
  for (Elem x = 0; x < n; ++x) {
    const Elem* row = t.mul.data() + x * n;
    for (Elem y = 0; y < n; ++y) {
      if (row[y] == t.one && t.mul[y * n + x] == t.one) {
        d->inverse[x] = y;
        break;
      }
    }
    if (d->inverse[x] != kNoElem) d->units.push_back(x);
    if (row[x] == x) d->idempotents.push_back(x);
  }

  d->commutative = true;
  for (Elem x = 0; x < n && d->commutative; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (t.mul[x * n + y] != t.mul[y * n + x]) {
        d->commutative = false;
        break;
      }
    }
  }
  d->t = std::move(t);
  return FiniteRing(std::move(d));
}

FiniteRing FiniteRing::checked(RingTables tables, std::size_t max_order) {
  ValidationReport report = validate_ring(tables, max_order);
  if (!report.ok) {
    const auto& v = report.violations.front();
    throw AxiomError(tables.label + ": " + v.axiom + " fails at (" + std::to_string(v.witness[0]) + ", " +
                     std::to_string(v.witness[1]) + ", " + std::to_string(v.witness[2]) + ")");
  }
  return from_tables(std::move(tables));
}

std::optional<Elem> FiniteRing::inverse(Elem a) const noexcept {
  Elem v = d_->inverse[a];
  if (v == kNoElem) return std::nullopt;
  return v;
}

FiniteRing FiniteRing::relabeled(std::string label, std::string construction) const {
  auto d = std::make_shared<Data>(*d_);
  d->t.label = std::move(label);
  if (!construction.empty()) d->t.construction = std::move(construction);
  return FiniteRing(std::move(d));
}

bool operator==(const FiniteRing& a, const FiniteRing& b) {
  if (a.d_ == b.d_) return true;
  const RingTables& x = a.tables();
  const RingTables& y = b.tables();
  return x.order == y.order && x.one == y.one && x.add == y.add && x.mul == y.mul;
}

bool is_unit(ElemRef r) { return r.ring.is_unit(r.index); }
std::optional<Elem> inverse(ElemRef r) { return r.ring.inverse(r.index); }
bool is_central(ElemRef r) { return is_central(r.ring, r.index); }

std::vector<Elem> units(const FiniteRing& R) {
  auto u = R.units();
  return {u.begin(), u.end()};
}

std::vector<Elem> idempotents(const FiniteRing& R) {
  auto e = R.idempotents();
  return {e.begin(), e.end()};
}

bool is_central(const FiniteRing& R, Elem x) {
  if (R.is_commutative()) return true;
  for (Elem y = 0; y < R.order(); ++y) {
    if (R.mul(x, y) != R.mul(y, x)) return false;
  }
  return true;
}

bool is_nilpotent(const FiniteRing& R, Elem x) {
  Elem p = x;
  for (std::size_t k = 1; k <= R.order(); ++k) {
    if (p == 0) return true;
    p = R.mul(p, x);
  }
  return p == 0;
}

bool has_nonzero_nilpotents(const FiniteRing& R) {
  for (Elem x = 1; x < R.order(); ++x) {
    if (is_nilpotent(R, x)) return true;
  }
  return false;
}

Elem power(const FiniteRing& R, Elem x, std::size_t k) {
  Elem acc = R.one();
  Elem base = x;
  while (k > 0) {
    if (k & 1U) acc = R.mul(acc, base);
    base = R.mul(base, base);
    k >>= 1U;
  }
  return acc;
}

Elem integer_image(const FiniteRing& R, long long k) {
  Elem step = k >= 0 ? R.one() : R.neg(R.one());
  unsigned long long m = k >= 0 ? static_cast<unsigned long long>(k) : 0ULL - static_cast<unsigned long long>(k);
  Elem acc = 0;
  // Additive order divides |R|, so reduce first.
  m %= R.order();
  for (unsigned long long i = 0; i < m; ++i) acc = R.add(acc, step);
  return acc;
}

std::vector<Elem> jacobson_radical(const FiniteRing& R) {
  std::vector<Elem> J;
  for (Elem x = 0; x < R.order(); ++x) {
    bool quasi_regular = true;
    for (Elem a = 0; a < R.order() && quasi_regular; ++a) {
      quasi_regular = R.is_unit(R.sub(R.one(), R.mul(a, x)));
    }
    if (quasi_regular) J.push_back(x);
  }
  if (!check_radical(R, J).all()) {
    throw std::logic_error("jacobson_radical: cross-validation failed for " + R.label());
  }
  return J;
}

RadicalChecks check_radical(const FiniteRing& R, std::span<const Elem> J) {
  RadicalChecks c;
  const std::size_t n = R.order();
  std::vector<char> member(n, 0);
  for (Elem x : J) member[x] = 1;

  c.quasi_regular = true;
  c.two_sided = true;
  for (Elem x : J) {
    for (Elem a = 0; a < n && c.two_sided; ++a) {
      Elem ax = R.mul(a, x);
      if (!R.is_unit(R.sub(R.one(), ax))) c.quasi_regular = false;
      for (Elem b = 0; b < n; ++b) {
        if (!R.is_unit(R.sub(R.one(), R.mul(ax, b)))) {
          c.two_sided = false;
          break;
        }
      }
    }
  }

  c.is_ideal = !J.empty() && member[0];
  for (Elem x : J) {
    if (!c.is_ideal) break;
    for (Elem y : J) {
      if (!member[R.add(x, y)]) {
        c.is_ideal = false;
        break;
      }
    }
    for (Elem r = 0; r < n && c.is_ideal; ++r) {
      if (!member[R.mul(r, x)] || !member[R.mul(x, r)]) c.is_ideal = false;
    }
  }

  c.one_plus_in_units = std::all_of(J.begin(), J.end(), [&](Elem x) { return R.is_unit(R.add(R.one(), x)); });
  c.no_nonzero_idempotent =
      std::none_of(J.begin(), J.end(), [&](Elem x) { return x != 0 && R.is_idempotent(x); });
  return c;
}

bool is_complete_orthogonal(const FiniteRing& R, std::span<const Elem> es) {
  if (es.empty()) return false;
  Elem sum = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i] >= R.order() || !R.is_idempotent(es[i])) return false;
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i != j && R.mul(es[i], es[j]) != 0) return false;
    }
    sum = R.add(sum, es[i]);
  }
  return sum == R.one();
}

}  // namespace cleanring
