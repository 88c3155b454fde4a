#include "cleanring/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cleanring/error.hpp"
#include "cleanring/mixed_radix.hpp"

namespace cleanring {

namespace {

/// Fills add/mul tables by running digit-level operations over every pair.
/// add and mul receive (a_digits, b_digits, out_digits) spans.
template <class AddFn, class MulFn>
FiniteRing build_ring(const MixedRadix& codec, std::span<const Elem> one_digits, std::string label,
                      std::string construction, AddFn add, MulFn mul) {
  const std::size_t n = codec.size();
  const std::size_t w = codec.digits();
  const std::vector<Elem> digits = codec.decode_all();
  RingTables t;
  t.label = std::move(label);
  t.construction = std::move(construction);
  t.order = n;
  t.one = codec.encode(one_digits);
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Elem> out(w);
  for (std::size_t a = 0; a < n; ++a) {
    std::span<const Elem> da(digits.data() + a * w, w);
    for (std::size_t b = 0; b < n; ++b) {
      std::span<const Elem> db(digits.data() + b * w, w);
      add(da, db, std::span<Elem>(out));
      t.add[a * n + b] = codec.encode(out);
      mul(da, db, std::span<Elem>(out));
      t.mul[a * n + b] = codec.encode(out);
    }
  }
  return FiniteRing::from_tables(std::move(t));
}

void require_same(const FiniteRing& expected, const FiniteRing& actual, const char* what) {
  if (!(expected == actual)) {
    throw DomainError(std::string(what) + ": bimodule acts through " + actual.label() + ", expected " +
                      expected.label());
  }
}

std::vector<Elem> derive_neg(std::size_t order, const std::vector<Elem>& add) {
  std::vector<Elem> neg(order, kNoElem);
  for (Elem x = 0; x < order; ++x) {
    for (Elem y = 0; y < order; ++y) {
      if (add[x * order + y] == 0) {
        neg[x] = y;
        break;
      }
    }
  }
  return neg;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bimodule

Bimodule::Bimodule(FiniteRing left, FiniteRing right, std::size_t order, std::vector<Elem> add,
                   std::vector<Elem> left_action, std::vector<Elem> right_action, std::string label)
    : left_(std::move(left)),
      right_(std::move(right)),
      order_(order),
      add_(std::move(add)),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)),
      label_(std::move(label)) {
  if (order_ == 0) throw StructuralError("bimodule carrier must be nonempty");
  if (add_.size() != order_ * order_) throw StructuralError("bimodule add table is not order x order");
  if (left_action_.size() != left_.order() * order_) throw StructuralError("left action table has wrong shape");
  if (right_action_.size() != order_ * right_.order()) throw StructuralError("right action table has wrong shape");
  auto in_range = [this](Elem e) { return e < order_; };
  if (!std::all_of(add_.begin(), add_.end(), in_range) ||
      !std::all_of(left_action_.begin(), left_action_.end(), in_range) ||
      !std::all_of(right_action_.begin(), right_action_.end(), in_range)) {
    throw StructuralError("bimodule table entry out of range");
  }
  neg_ = derive_neg(order_, add_);
}

Bimodule Bimodule::regular(const FiniteRing& R) {
  const RingTables& t = R.tables();
  return Bimodule(R, R, R.order(), t.add, t.mul, t.mul, "regular");
}

Bimodule Bimodule::zero(const FiniteRing& left, const FiniteRing& right) {
  return Bimodule(left, right, 1, {0}, std::vector<Elem>(left.order(), 0), std::vector<Elem>(right.order(), 0),
                  "zero");
}

Bimodule Bimodule::cyclic(const FiniteRing& left, const FiniteRing& right, std::size_t m) {
  if (m == 0) throw DomainError("cyclic bimodule needs m >= 1");
  std::vector<Elem> add(m * m), la(left.order() * m), ra(m * right.order());
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) add[a * m + b] = static_cast<Elem>((a + b) % m);
  }
  for (std::size_t r = 0; r < left.order(); ++r) {
    for (std::size_t x = 0; x < m; ++x) la[r * m + x] = static_cast<Elem>(((r % m) * x) % m);
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t s = 0; s < right.order(); ++s) ra[x * right.order() + s] = static_cast<Elem>((x * (s % m)) % m);
  }
  return Bimodule(left, right, m, std::move(add), std::move(la), std::move(ra), "(znmod " + std::to_string(m) + ")");
}

std::vector<std::string> Bimodule::validate() const {
  std::vector<std::string> bad;
  auto flag = [&bad](const char* what) {
    if (std::find(bad.begin(), bad.end(), what) == bad.end()) bad.emplace_back(what);
  };
  const std::size_t n = order_;
  const std::size_t nl = left_.order();
  const std::size_t nr = right_.order();

  for (Elem a = 0; a < n; ++a) {
    if (add(0, a) != a || add(a, 0) != a) flag("carrier identity");
    if (neg_[a] == kNoElem) flag("carrier inverse");
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) flag("carrier commutativity");
      for (Elem c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) flag("carrier associativity");
      }
    }
  }

  for (Elem m = 0; m < n; ++m) {
    if (act_left(left_.one(), m) != m) flag("left unital");
    if (act_right(m, right_.one()) != m) flag("right unital");
  }
  for (Elem r = 0; r < nl; ++r) {
    for (Elem m = 0; m < n; ++m) {
      for (Elem m2 = 0; m2 < n; ++m2) {
        if (act_left(r, add(m, m2)) != add(act_left(r, m), act_left(r, m2))) flag("left action additive in module");
      }
      for (Elem r2 = 0; r2 < nl; ++r2) {
        if (act_left(left_.mul(r, r2), m) != act_left(r, act_left(r2, m))) flag("left action associative");
        if (act_left(left_.add(r, r2), m) != add(act_left(r, m), act_left(r2, m))) flag("left action additive in ring");
      }
      for (Elem s = 0; s < nr; ++s) {
        if (act_right(act_left(r, m), s) != act_left(r, act_right(m, s))) flag("actions commute");
      }
    }
  }
  for (Elem s = 0; s < nr; ++s) {
    for (Elem m = 0; m < n; ++m) {
      for (Elem m2 = 0; m2 < n; ++m2) {
        if (act_right(add(m, m2), s) != add(act_right(m, s), act_right(m2, s))) flag("right action additive in module");
      }
      for (Elem s2 = 0; s2 < nr; ++s2) {
        if (act_right(m, right_.mul(s, s2)) != act_right(act_right(m, s), s2)) flag("right action associative");
        if (act_right(m, right_.add(s, s2)) != add(act_right(m, s), act_right(m, s2))) flag("right action additive in ring");
      }
    }
  }
  return bad;
}

void Bimodule::require_valid() const {
  auto bad = validate();
  if (!bad.empty()) {
    throw AxiomError("bimodule " + label_ + " over (" + left_.label() + ", " + right_.label() + "): " + bad.front());
  }
}

bool Bimodule::is_symmetric() const {
  if (!(left_ == right_)) return false;
  for (Elem r = 0; r < left_.order(); ++r) {
    for (Elem m = 0; m < order_; ++m) {
      if (act_left(r, m) != act_right(m, r)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// PairingMap

PairingMap::PairingMap(std::size_t left_order, std::size_t right_order, std::vector<Elem> map, std::string label)
    : left_order_(left_order), right_order_(right_order), map_(std::move(map)), label_(std::move(label)) {
  if (map_.size() != left_order_ * right_order_) throw StructuralError("pairing table has wrong shape");
}

PairingMap PairingMap::zero(const Bimodule& a32, const Bimodule& a21) {
  return PairingMap(a32.order(), a21.order(), std::vector<Elem>(a32.order() * a21.order(), 0), "zero");
}

PairingMap PairingMap::cyclic_product(const Bimodule& a32, const Bimodule& a21, const Bimodule& a31) {
  std::vector<Elem> map(a32.order() * a21.order());
  for (std::size_t i = 0; i < a32.order(); ++i) {
    for (std::size_t j = 0; j < a21.order(); ++j) map[i * a21.order() + j] = static_cast<Elem>((i * j) % a31.order());
  }
  return PairingMap(a32.order(), a21.order(), std::move(map), "mul");
}

bool PairingMap::is_zero() const {
  return std::all_of(map_.begin(), map_.end(), [](Elem e) { return e == 0; });
}

std::vector<std::string> PairingMap::validate(const Bimodule& a21, const Bimodule& a31, const Bimodule& a32) const {
  std::vector<std::string> bad;
  auto flag = [&bad](const char* what) {
    if (std::find(bad.begin(), bad.end(), what) == bad.end()) bad.emplace_back(what);
  };
  if (left_order_ != a32.order() || right_order_ != a21.order()) {
    bad.emplace_back("shape");
    return bad;
  }
  if (std::any_of(map_.begin(), map_.end(), [&](Elem e) { return e >= a31.order(); })) {
    bad.emplace_back("range");
    return bad;
  }
  const FiniteRing& A1 = a21.right_ring();
  const FiniteRing& A2 = a21.left_ring();
  const FiniteRing& A3 = a32.left_ring();
  for (Elem m = 0; m < a32.order(); ++m) {
    for (Elem n = 0; n < a21.order(); ++n) {
      const Elem v = (*this)(m, n);
      for (Elem m2 = 0; m2 < a32.order(); ++m2) {
        if ((*this)(a32.add(m, m2), n) != a31.add(v, (*this)(m2, n))) flag("additive in first argument");
      }
      for (Elem n2 = 0; n2 < a21.order(); ++n2) {
        if ((*this)(m, a21.add(n, n2)) != a31.add(v, (*this)(m, n2))) flag("additive in second argument");
      }
      for (Elem r = 0; r < A2.order(); ++r) {
        if ((*this)(a32.act_right(m, r), n) != (*this)(m, a21.act_left(r, n))) flag("balanced over middle ring");
      }
      for (Elem r = 0; r < A3.order(); ++r) {
        if ((*this)(a32.act_left(r, m), n) != a31.act_left(r, v)) flag("left linear");
      }
      for (Elem r = 0; r < A1.order(); ++r) {
        if ((*this)(m, a21.act_right(n, r)) != a31.act_right(v, r)) flag("right linear");
      }
    }
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Rings

FiniteRing zn(std::size_t n) {
  if (n == 0) throw DomainError("zn needs n >= 1");
  if (n > 65536) throw SizeError("zn order too large");
  RingTables t;
  t.label = "Z_" + std::to_string(n);
  t.construction = "(zn " + std::to_string(n) + ")";
  t.order = n;
  t.one = static_cast<Elem>(1 % n);
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.neg[a] = static_cast<Elem>((n - a) % n);
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
      t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  return FiniteRing::from_tables(std::move(t));
}

FiniteRing direct_product(std::span<const FiniteRing> factors, std::size_t max_order) {
  if (factors.empty()) throw DomainError("direct_product needs at least one factor");
  std::vector<std::size_t> radices;
  std::vector<Elem> one;
  std::string label, construction = "(product";
  for (const FiniteRing& f : factors) {
    radices.push_back(f.order());
    one.push_back(f.one());
    if (!label.empty()) label += " x ";
    label += f.label();
    construction += " " + f.construction();
  }
  construction += ")";
  MixedRadix codec(radices, max_order);
  return build_ring(
      codec, one, label, construction,
      [&](auto a, auto b, auto out) {
        for (std::size_t i = 0; i < factors.size(); ++i) out[i] = factors[i].add(a[i], b[i]);
      },
      [&](auto a, auto b, auto out) {
        for (std::size_t i = 0; i < factors.size(); ++i) out[i] = factors[i].mul(a[i], b[i]);
      });
}

FiniteRing matrix_ring(const FiniteRing& R, std::size_t k, std::size_t max_order) {
  if (k == 0) throw DomainError("matrix_ring needs k >= 1");
  MixedRadix codec(std::vector<std::size_t>(k * k, R.order()), max_order);
  std::vector<Elem> one(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) one[i * k + i] = R.one();
  return build_ring(
      codec, one, "M_" + std::to_string(k) + "(" + R.label() + ")",
      "(matrix " + std::to_string(k) + " " + R.construction() + ")",
      [&](auto a, auto b, auto out) {
        for (std::size_t i = 0; i < k * k; ++i) out[i] = R.add(a[i], b[i]);
      },
      [&](auto a, auto b, auto out) {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            Elem acc = 0;
            for (std::size_t l = 0; l < k; ++l) acc = R.add(acc, R.mul(a[i * k + l], b[l * k + j]));
            out[i * k + j] = acc;
          }
        }
      });
}

namespace {

Elem det_unchecked(const FiniteRing& R, std::size_t k, std::span<const Elem> a) {
  if (k == 1) return a[0];
  if (k == 2) return R.sub(R.mul(a[0], a[3]), R.mul(a[1], a[2]));
  Elem acc = 0;
  std::vector<Elem> minor((k - 1) * (k - 1));
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t w = 0;
    for (std::size_t r = 1; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        if (c != j) minor[w++] = a[r * k + c];
      }
    }
    Elem term = R.mul(a[j], det_unchecked(R, k - 1, minor));
    acc = (j % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
  }
  return acc;
}

void check_det_args(const FiniteRing& R, std::size_t k, std::span<const Elem> a) {
  if (!R.is_commutative()) throw DomainError("determinant needs a commutative ring, got " + R.label());
  if (k == 0 || k > 4) throw DomainError("determinant supports 1 <= k <= 4");
  if (a.size() != k * k) throw StructuralError("matrix has wrong number of entries");
}

}  // namespace

Elem det(const FiniteRing& R, std::size_t k, std::span<const Elem> a) {
  check_det_args(R, k, a);
  return det_unchecked(R, k, a);
}

Elem cofactor(const FiniteRing& R, std::size_t k, std::span<const Elem> a, std::size_t i, std::size_t j) {
  check_det_args(R, k, a);
  if (i >= k || j >= k) throw DomainError("cofactor index out of range");
  if (k == 1) return R.one();
  std::vector<Elem> minor;
  minor.reserve((k - 1) * (k - 1));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (r != i && c != j) minor.push_back(a[r * k + c]);
    }
  }
  Elem m = det_unchecked(R, k - 1, minor);
  return (i + j) % 2 == 0 ? m : R.neg(m);
}

FiniteRing morita_zero(const FiniteRing& R, const FiniteRing& S, const Bimodule& M, const Bimodule& N,
                       std::size_t max_order) {
  require_same(R, M.left_ring(), "morita_zero M left");
  require_same(S, M.right_ring(), "morita_zero M right");
  require_same(S, N.left_ring(), "morita_zero N left");
  require_same(R, N.right_ring(), "morita_zero N right");
  MixedRadix codec({R.order(), M.order(), N.order(), S.order()}, max_order);
  M.require_valid();
  N.require_valid();
  const Elem one[4] = {R.one(), 0, 0, S.one()};
  return build_ring(
      codec, one, "Morita(" + R.label() + ", " + S.label() + "; " + M.label() + ", " + N.label() + ")",
      "(morita " + R.construction() + " " + S.construction() + " " + M.label() + " " + N.label() + ")",
      [&](auto a, auto b, auto out) {
        out[0] = R.add(a[0], b[0]);
        out[1] = M.add(a[1], b[1]);
        out[2] = N.add(a[2], b[2]);
        out[3] = S.add(a[3], b[3]);
      },
      [&](auto a, auto b, auto out) {
        // [[r, m], [n, s]] [[r', m'], [n', s']] with m n' = 0 and n m' = 0
        out[0] = R.mul(a[0], b[0]);
        out[1] = M.add(M.act_left(a[0], b[1]), M.act_right(a[1], b[3]));
        out[2] = N.add(N.act_right(a[2], b[0]), N.act_left(a[3], b[2]));
        out[3] = S.mul(a[3], b[3]);
      });
}

FiniteRing tri2(const FiniteRing& R, const FiniteRing& S, const Bimodule& M, std::size_t max_order) {
  FiniteRing T = morita_zero(R, S, Bimodule::zero(R, S), M, max_order);
  return T.relabeled("Tri2(" + R.label() + ", " + S.label() + "; " + M.label() + ")",
                     "(tri2 " + R.construction() + " " + S.construction() + " " + M.label() + ")");
}

FiniteRing tri3(const FiniteRing& A1, const FiniteRing& A2, const FiniteRing& A3, const Bimodule& A21,
                const Bimodule& A31, const Bimodule& A32, const std::optional<PairingMap>& comp,
                std::size_t max_order) {
  require_same(A2, A21.left_ring(), "tri3 A21 left");
  require_same(A1, A21.right_ring(), "tri3 A21 right");
  require_same(A3, A31.left_ring(), "tri3 A31 left");
  require_same(A1, A31.right_ring(), "tri3 A31 right");
  require_same(A3, A32.left_ring(), "tri3 A32 left");
  require_same(A2, A32.right_ring(), "tri3 A32 right");
  MixedRadix codec({A1.order(), A21.order(), A31.order(), A2.order(), A32.order(), A3.order()}, max_order);
  A21.require_valid();
  A31.require_valid();
  A32.require_valid();
  const PairingMap phi = comp ? *comp : PairingMap::zero(A32, A21);
  if (auto bad = phi.validate(A21, A31, A32); !bad.empty()) {
    throw AxiomError("tri3 composition map " + phi.label() + ": " + bad.front());
  }
  const Elem one[6] = {A1.one(), 0, 0, A2.one(), 0, A3.one()};
  std::string mods = A21.label() + " " + A31.label() + " " + A32.label();
  std::string construction =
      "(tri3 " + A1.construction() + " " + A2.construction() + " " + A3.construction() + " " + mods;
  if (!phi.is_zero()) construction += " " + phi.label();
  construction += ")";
  // digits: 0=a1 1=a21 2=a31 3=a2 4=a32 5=a3
  return build_ring(
      codec, one, "Tri3(" + A1.label() + ", " + A2.label() + ", " + A3.label() + "; " + A21.label() + ", " +
                      A31.label() + ", " + A32.label() + (phi.is_zero() ? "" : "; " + phi.label()) + ")",
      construction,
      [&](auto a, auto b, auto out) {
        out[0] = A1.add(a[0], b[0]);
        out[1] = A21.add(a[1], b[1]);
        out[2] = A31.add(a[2], b[2]);
        out[3] = A2.add(a[3], b[3]);
        out[4] = A32.add(a[4], b[4]);
        out[5] = A3.add(a[5], b[5]);
      },
      [&](auto a, auto b, auto out) {
        out[0] = A1.mul(a[0], b[0]);
        out[1] = A21.add(A21.act_right(a[1], b[0]), A21.act_left(a[3], b[1]));
        out[2] = A31.add(A31.add(A31.act_right(a[2], b[0]), phi(a[4], b[1])), A31.act_left(a[5], b[2]));
        out[3] = A2.mul(a[3], b[3]);
        out[4] = A32.add(A32.act_right(a[4], b[3]), A32.act_left(a[5], b[4]));
        out[5] = A3.mul(a[5], b[5]);
      });
}

Bimodule triangular_column(const FiniteRing& B, const FiniteRing& A1, const Bimodule& A21, const Bimodule& A31,
                           const Bimodule& A32, const std::optional<PairingMap>& comp) {
  const FiniteRing& A2 = A21.left_ring();
  const FiniteRing& A3 = A31.left_ring();
  MixedRadix bcodec({A2.order(), A32.order(), A3.order()}, B.order());
  if (bcodec.size() != B.order()) throw DomainError("triangular_column: B is not tri2(A2, A3, A32)");
  MixedRadix mcodec({A21.order(), A31.order()}, A21.order() * A31.order());
  const PairingMap phi = comp ? *comp : PairingMap::zero(A32, A21);
  const std::size_t n = mcodec.size();
  std::vector<Elem> add(n * n), la(B.order() * n), ra(n * A1.order());
  std::vector<Elem> x(2), y(2), out(2), bd(3);
  for (Elem i = 0; i < n; ++i) {
    mcodec.decode(i, x);
    for (Elem j = 0; j < n; ++j) {
      mcodec.decode(j, y);
      out[0] = A21.add(x[0], y[0]);
      out[1] = A31.add(x[1], y[1]);
      add[i * n + j] = mcodec.encode(out);
    }
    for (Elem r = 0; r < A1.order(); ++r) {
      out[0] = A21.act_right(x[0], r);
      out[1] = A31.act_right(x[1], r);
      ra[i * A1.order() + r] = mcodec.encode(out);
    }
    for (Elem b = 0; b < B.order(); ++b) {
      bcodec.decode(b, bd);
      out[0] = A21.act_left(bd[0], x[0]);
      out[1] = A31.add(phi(bd[1], x[0]), A31.act_left(bd[2], x[1]));
      la[b * n + i] = mcodec.encode(out);
    }
  }
  return Bimodule(B, A1, n, std::move(add), std::move(la), std::move(ra),
                  "[" + A21.label() + "; " + A31.label() + "]");
}

FiniteRing idealization(const FiniteRing& R, const Bimodule& M, std::size_t max_order) {
  if (!R.is_commutative()) throw DomainError("idealization needs a commutative ring, got " + R.label());
  require_same(R, M.left_ring(), "idealization module");
  MixedRadix codec({R.order(), M.order()}, max_order);
  M.require_valid();
  if (!M.is_symmetric()) throw DomainError("idealization needs r.m == m.r");
  const Elem one[2] = {R.one(), 0};
  std::string module_label = M.label() == "regular" ? R.label() : M.label();
  return build_ring(
      codec, one, R.label() + "(" + module_label + ")", "(idealize " + R.construction() + " " + M.label() + ")",
      [&](auto a, auto b, auto out) {
        out[0] = R.add(a[0], b[0]);
        out[1] = M.add(a[1], b[1]);
      },
      [&](auto a, auto b, auto out) {
        out[0] = R.mul(a[0], b[0]);
        out[1] = M.add(M.act_left(a[0], b[1]), M.act_left(b[0], a[1]));
      });
}

QuotientRing quotient(const FiniteRing& R, std::span<const Elem> ideal, const std::string& ideal_label) {
  const std::size_t n = R.order();
  std::vector<char> member(n, 0);
  for (Elem x : ideal) {
    if (x >= n) throw StructuralError("ideal member out of range");
    member[x] = 1;
  }
  bool ok = member[0] != 0;
  for (Elem x : ideal) {
    for (Elem y : ideal) ok = ok && member[R.add(x, y)];
    for (Elem r = 0; r < n && ok; ++r) ok = member[R.mul(r, x)] && member[R.mul(x, r)];
    if (!ok) break;
  }
  if (!ok) throw DomainError("quotient: " + ideal_label + " is not a two-sided ideal of " + R.label());

  std::vector<Elem> rep(n);
  for (Elem x = 0; x < n; ++x) {
    Elem best = x;
    for (Elem i : ideal) best = std::min(best, R.add(x, i));
    rep[x] = best;
  }
  std::vector<Elem> reps = rep;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Elem> index_of(n, kNoElem);
  for (Elem c = 0; c < reps.size(); ++c) index_of[reps[c]] = c;
  std::vector<Elem> projection(n);
  for (Elem x = 0; x < n; ++x) projection[x] = index_of[rep[x]];

  const std::size_t m = reps.size();
  RingTables t;
  t.label = R.label() + "/" + ideal_label;
  t.construction = "(quotient " + R.construction() + " " + ideal_label + ")";
  t.order = m;
  t.one = projection[R.one()];
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a * m + b] = projection[R.add(reps[a], reps[b])];
      t.mul[a * m + b] = projection[R.mul(reps[a], reps[b])];
    }
  }
  return QuotientRing{FiniteRing::from_tables(std::move(t)), std::move(projection), std::move(reps)};
}

FiniteRing truncated_power_series(const FiniteRing& R, std::size_t k, std::size_t max_order) {
  if (k == 0) throw DomainError("truncated_power_series needs k >= 1");
  MixedRadix codec(std::vector<std::size_t>(k, R.order()), max_order);
  std::vector<Elem> one(k, 0);
  one[0] = R.one();
  return build_ring(
      codec, one, R.label() + "[x]/(x^" + std::to_string(k) + ")",
      "(series " + R.construction() + " " + std::to_string(k) + ")",
      [&](auto a, auto b, auto out) {
        for (std::size_t i = 0; i < k; ++i) out[i] = R.add(a[i], b[i]);
      },
      [&](auto a, auto b, auto out) {
        for (std::size_t d = 0; d < k; ++d) {
          Elem acc = 0;
          for (std::size_t i = 0; i <= d; ++i) acc = R.add(acc, R.mul(a[i], b[d - i]));
          out[d] = acc;
        }
      });
}

CornerRing corner_ring(const FiniteRing& R, Elem e) {
  if (e >= R.order() || !R.is_idempotent(e)) throw DomainError("corner_ring needs an idempotent");
  const std::size_t n = R.order();
  std::vector<Elem> locate(n, kNoElem), embedding;
  std::vector<char> in(n, 0);
  for (Elem x = 0; x < n; ++x) in[R.mul(R.mul(e, x), e)] = 1;
  for (Elem x = 0; x < n; ++x) {
    if (in[x]) {
      locate[x] = static_cast<Elem>(embedding.size());
      embedding.push_back(x);
    }
  }
  const std::size_t m = embedding.size();
  RingTables t;
  t.label = "e" + R.label() + "e[e=" + std::to_string(e) + "]";
  t.construction = "(corner " + R.construction() + " " + std::to_string(e) + ")";
  t.order = m;
  t.one = locate[e];
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a * m + b] = locate[R.add(embedding[a], embedding[b])];
      t.mul[a * m + b] = locate[R.mul(embedding[a], embedding[b])];
    }
  }
  return CornerRing{FiniteRing::from_tables(std::move(t)), e, std::move(embedding), std::move(locate)};
}

}  // namespace cleanring
