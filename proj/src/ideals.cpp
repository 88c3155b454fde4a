#include "cleanring/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "cleanring/error.hpp"
#include "cleanring/mixed_radix.hpp"

namespace cleanring {

IdealSet::IdealSet(FiniteRing ring, std::vector<Elem> members, std::vector<Elem> generators)
    : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(ring_.order(), 0);
  for (Elem x : members_) {
    if (x >= ring_.order()) throw StructuralError("ideal member out of range");
    mask_[x] = 1;
  }
}

std::string IdealSet::label() const {
  if (is_whole()) return "R";
  if (is_zero()) return "0";
  std::string s = "<";
  auto gens = generators_.empty() ? std::span<const Elem>(members_) : std::span<const Elem>(generators_);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gens[i]);
  }
  return s + ">";
}

namespace {

/// Worklist closure: `step(x, push)` emits the one-step images of x and
/// `sum(x, y, push)` the sum of two members.
template <class Step, class Sum>
std::vector<Elem> close_set(std::size_t order, std::span<const Elem> seeds, Step step, Sum sum) {
  std::vector<char> mask(order, 0);
  std::vector<Elem> members;
  auto push = [&](Elem x) {
    if (!mask[x]) {
      mask[x] = 1;
      members.push_back(x);
    }
  };
  push(0);
  for (Elem g : seeds) {
    if (g >= order) throw StructuralError("generator out of range");
    push(g);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem x = members[i];
    step(x, push);
    // Pairs (x, y) with y added later are covered when y is processed.
    const std::size_t known = members.size();
    for (std::size_t j = 0; j <= i && j < known; ++j) sum(x, members[j], push);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_ideal(const IdealSet& I, const char* what) {
  if (!is_ideal(I.ring(), I.members())) throw DomainError(std::string(what) + ": result is not an ideal");
}

void require_component(const IdealSet& I, const FiniteRing& R, const char* what) {
  if (!(I.ring() == R)) throw DomainError(std::string(what) + ": component ideal lives in the wrong ring");
}

}  // namespace

IdealSet ideal_closure(const FiniteRing& R, std::span<const Elem> gens) {
  auto step = [&R](Elem x, auto& push) {
    for (Elem r = 0; r < R.order(); ++r) {
      push(R.mul(r, x));
      push(R.mul(x, r));
    }
    push(R.neg(x));
  };
  auto sum = [&R](Elem x, Elem y, auto& push) { push(R.add(x, y)); };
  std::vector<Elem> members = close_set(R.order(), gens, step, sum);
  return IdealSet(R, std::move(members), sorted_unique({gens.begin(), gens.end()}));
}

bool is_ideal(const FiniteRing& R, std::span<const Elem> S) {
  std::vector<char> mask(R.order(), 0);
  for (Elem x : S) {
    if (x >= R.order()) return false;
    mask[x] = 1;
  }
  if (!mask[0]) return false;
  for (Elem x : S) {
    if (!mask[R.neg(x)]) return false;
    for (Elem y : S) {
      if (!mask[R.add(x, y)]) return false;
    }
    for (Elem r = 0; r < R.order(); ++r) {
      if (!mask[R.mul(r, x)] || !mask[R.mul(x, r)]) return false;
    }
  }
  return true;
}

IdealSet ideal_sum(const IdealSet& I, const IdealSet& J) {
  if (!(I.ring() == J.ring())) throw DomainError("ideal_sum: ideals of different rings");
  const FiniteRing& R = I.ring();
  std::vector<Elem> members;
  members.reserve(I.size() * J.size());
  for (Elem a : I.members()) {
    for (Elem b : J.members()) members.push_back(R.add(a, b));
  }
  std::vector<Elem> gens(I.generators().begin(), I.generators().end());
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  IdealSet sum(R, std::move(members), sorted_unique(std::move(gens)));
  require_ideal(sum, "ideal_sum");
  return sum;
}

IdealSet ideal_intersection(const IdealSet& I, const IdealSet& J) {
  if (!(I.ring() == J.ring())) throw DomainError("ideal_intersection: ideals of different rings");
  std::vector<Elem> members;
  std::set_intersection(I.members().begin(), I.members().end(), J.members().begin(), J.members().end(),
                        std::back_inserter(members));
  return IdealSet(I.ring(), std::move(members));
}

bool is_subset(const IdealSet& I, const IdealSet& J) {
  return std::includes(J.members().begin(), J.members().end(), I.members().begin(), I.members().end());
}

std::vector<IdealSet> principal_ideals(const FiniteRing& R) {
  std::vector<IdealSet> out;
  std::set<std::vector<Elem>> seen;
  for (Elem x = 0; x < R.order(); ++x) {
    const Elem gen[1] = {x};
    IdealSet I = x == 0 ? zero_ideal(R) : ideal_closure(R, gen);
    std::vector<Elem> key(I.members().begin(), I.members().end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(I));
  }
  return out;
}

std::vector<IdealSet> all_ideals(const FiniteRing& R, std::size_t max_order) {
  if (R.order() > max_order) {
    throw SizeError("all_ideals: " + R.label() + " has order " + std::to_string(R.order()) + " > cap " +
                    std::to_string(max_order));
  }
  std::vector<IdealSet> found = principal_ideals(R);
  std::set<std::vector<Elem>> seen;
  for (const IdealSet& I : found) seen.emplace(I.members().begin(), I.members().end());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (is_subset(found[i], found[j]) || is_subset(found[j], found[i])) continue;
      IdealSet s = ideal_sum(found[i], found[j]);
      if (seen.emplace(s.members().begin(), s.members().end()).second) found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const IdealSet& a, const IdealSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.members().begin(), a.members().end(), b.members().begin(),
                                        b.members().end());
  });
  return found;
}

std::vector<IdealSet> ideals_for_scan(const FiniteRing& R, std::size_t max_order) {
  if (R.order() <= max_order) return all_ideals(R, max_order);
  std::vector<IdealSet> out = principal_ideals(R);
  // <1> = R is already among the principal ideals.
  return out;
}

IdealSet jacobson_ideal(const FiniteRing& R) {
  IdealSet J(R, jacobson_radical(R));
  require_ideal(J, "jacobson_ideal");
  return J;
}

IdealSet zero_ideal(const FiniteRing& R) { return IdealSet(R, {0}); }

IdealSet whole_ideal(const FiniteRing& R) {
  std::vector<Elem> all(R.order());
  for (Elem x = 0; x < R.order(); ++x) all[x] = x;
  return IdealSet(R, std::move(all), {R.one()});
}

QuotientRing quotient(const IdealSet& I) {
  std::string label = I.label();
  return quotient(I.ring(), I.members(), label);
}

IdealSet matrix_ideal(const FiniteRing& Mk, const IdealSet& I, std::size_t k) {
  const std::size_t n = I.ring().order();
  MixedRadix codec(std::vector<std::size_t>(k * k, n), Mk.order());
  if (codec.size() != Mk.order()) throw DomainError("matrix_ideal: ambient ring is not M_k(R)");
  std::vector<Elem> members;
  std::vector<Elem> digits(k * k);
  for (Elem x = 0; x < Mk.order(); ++x) {
    codec.decode(x, digits);
    if (std::all_of(digits.begin(), digits.end(), [&](Elem d) { return I.contains(d); })) members.push_back(x);
  }
  IdealSet out(Mk, std::move(members));
  require_ideal(out, "matrix_ideal");
  return out;
}

IdealSet product_ideal(const FiniteRing& P, std::span<const IdealSet> parts) {
  std::vector<std::size_t> radices;
  for (const IdealSet& I : parts) radices.push_back(I.ring().order());
  MixedRadix codec(radices, P.order());
  if (codec.size() != P.order()) throw DomainError("product_ideal: ambient ring does not match factors");
  std::vector<Elem> members;
  std::vector<Elem> digits(parts.size());
  for (Elem x = 0; x < P.order(); ++x) {
    codec.decode(x, digits);
    bool in = true;
    for (std::size_t i = 0; i < parts.size() && in; ++i) in = parts[i].contains(digits[i]);
    if (in) members.push_back(x);
  }
  IdealSet out(P, std::move(members));
  require_ideal(out, "product_ideal");
  return out;
}

IdealSet idealization_ideal(const FiniteRing& RM, const Bimodule& M, const IdealSet& I, std::span<const Elem> N) {
  require_component(I, M.left_ring(), "idealization_ideal");
  if (!is_submodule(M, N)) throw DomainError("idealization_ideal: N is not a submodule of M");
  MixedRadix codec({I.ring().order(), M.order()}, RM.order());
  if (codec.size() != RM.order()) throw DomainError("idealization_ideal: ambient ring is not R(M)");
  std::vector<char> in_n(M.order(), 0);
  for (Elem x : N) in_n[x] = 1;
  std::vector<Elem> members;
  for (Elem r : I.members()) {
    for (Elem m = 0; m < M.order(); ++m) {
      if (in_n[m]) {
        const Elem d[2] = {r, m};
        members.push_back(codec.encode(d));
      }
    }
  }
  IdealSet out(RM, std::move(members));
  require_ideal(out, "idealization_ideal");
  return out;
}

IdealSet morita_ideal(const FiniteRing& T, const Bimodule& M, const Bimodule& N, const IdealSet& I,
                      const IdealSet& J) {
  require_component(I, M.left_ring(), "morita_ideal I");
  require_component(J, M.right_ring(), "morita_ideal J");
  MixedRadix codec({I.ring().order(), M.order(), N.order(), J.ring().order()}, T.order());
  if (codec.size() != T.order()) throw DomainError("morita_ideal: ambient ring does not match");
  std::vector<Elem> members;
  for (Elem r : I.members()) {
    for (Elem m = 0; m < M.order(); ++m) {
      for (Elem n = 0; n < N.order(); ++n) {
        for (Elem s : J.members()) {
          const Elem d[4] = {r, m, n, s};
          members.push_back(codec.encode(d));
        }
      }
    }
  }
  IdealSet out(T, std::move(members));
  require_ideal(out, "morita_ideal");
  return out;
}

IdealSet tri2_ideal(const FiniteRing& T, const Bimodule& M, const IdealSet& I, const IdealSet& J) {
  return morita_ideal(T, Bimodule::zero(I.ring(), J.ring()), M, I, J);
}

IdealSet tri3_ideal(const FiniteRing& T, const Bimodule& A21, const Bimodule& A31, const Bimodule& A32,
                    const IdealSet& I, const IdealSet& J, const IdealSet& K) {
  require_component(I, A21.right_ring(), "tri3_ideal I");
  require_component(J, A21.left_ring(), "tri3_ideal J");
  require_component(K, A31.left_ring(), "tri3_ideal K");
  MixedRadix codec({I.ring().order(), A21.order(), A31.order(), J.ring().order(), A32.order(), K.ring().order()},
                   T.order());
  if (codec.size() != T.order()) throw DomainError("tri3_ideal: ambient ring does not match");
  std::vector<Elem> members;
  std::vector<Elem> d(6);
  for (Elem x = 0; x < T.order(); ++x) {
    codec.decode(x, d);
    if (I.contains(d[0]) && J.contains(d[3]) && K.contains(d[5])) members.push_back(x);
  }
  IdealSet out(T, std::move(members));
  require_ideal(out, "tri3_ideal");
  return out;
}

IdealSet series_ideal(const FiniteRing& Rk, const IdealSet& I, std::size_t k) {
  MixedRadix codec(std::vector<std::size_t>(k, I.ring().order()), Rk.order());
  if (codec.size() != Rk.order()) throw DomainError("series_ideal: ambient ring is not R[x]/(x^k)");
  std::vector<Elem> members;
  std::vector<Elem> d(k);
  for (Elem x = 0; x < Rk.order(); ++x) {
    codec.decode(x, d);
    if (std::all_of(d.begin(), d.end(), [&](Elem c) { return I.contains(c); })) members.push_back(x);
  }
  IdealSet out(Rk, std::move(members));
  require_ideal(out, "series_ideal");
  return out;
}

IdealSet corner_ideal(const CornerRing& C, const IdealSet& I) {
  const FiniteRing& R = I.ring();
  const Elem e = C.idempotent;
  std::vector<Elem> members;
  for (Elem x : I.members()) {
    const Elem exe = R.mul(R.mul(e, x), e);
    if (C.locate.size() != R.order() || C.locate[exe] == kNoElem) {
      throw DomainError("corner_ideal: corner ring does not belong to the ideal's ring");
    }
    members.push_back(C.locate[exe]);
  }
  IdealSet out(C.ring, std::move(members));
  require_ideal(out, "corner_ideal");
  return out;
}

std::vector<Elem> submodule_closure(const Bimodule& M, std::span<const Elem> gens) {
  auto step = [&M](Elem x, auto& push) {
    for (Elem r = 0; r < M.left_ring().order(); ++r) push(M.act_left(r, x));
    push(M.neg(x));
  };
  auto sum = [&M](Elem x, Elem y, auto& push) { push(M.add(x, y)); };
  return close_set(M.order(), gens, step, sum);
}

bool is_submodule(const Bimodule& M, std::span<const Elem> N) {
  std::vector<char> mask(M.order(), 0);
  for (Elem x : N) {
    if (x >= M.order()) return false;
    mask[x] = 1;
  }
  if (!mask[0]) return false;
  for (Elem x : N) {
    for (Elem y : N) {
      if (!mask[M.add(x, y)]) return false;
    }
    for (Elem r = 0; r < M.left_ring().order(); ++r) {
      if (!mask[M.act_left(r, x)]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Elem>> all_submodules(const Bimodule& M) {
  std::vector<std::vector<Elem>> found;
  std::set<std::vector<Elem>> seen;
  for (Elem x = 0; x < M.order(); ++x) {
    const Elem g[1] = {x};
    auto s = submodule_closure(M, g);
    if (seen.insert(s).second) found.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Elem> gens = found[i];
      gens.insert(gens.end(), found[j].begin(), found[j].end());
      auto s = submodule_closure(M, gens);
      if (seen.insert(s).second) found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

}  // namespace cleanring
