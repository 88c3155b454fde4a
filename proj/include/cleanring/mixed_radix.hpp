#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cleanring/error.hpp"
#include "cleanring/ring.hpp"

namespace cleanring {

/// Tuple <-> index codec used by every composite construction. The first
/// digit is the most significant, so indices order tuples lexicographically
/// and the all-zero tuple is index 0.
class MixedRadix {
 public:
  MixedRadix() = default;

  /// Throws SizeError when the product of radices exceeds max_total.
  MixedRadix(std::vector<std::size_t> radices, std::size_t max_total) : radices_(std::move(radices)) {
    total_ = 1;
    for (std::size_t r : radices_) {
      if (r == 0) throw StructuralError("mixed radix with zero digit range");
      if (total_ > max_total / r) {
        throw SizeError("construction order exceeds cap " + std::to_string(max_total));
      }
      total_ *= r;
    }
    if (total_ > max_total) throw SizeError("construction order exceeds cap " + std::to_string(max_total));
  }

  std::size_t size() const noexcept { return total_; }
  std::size_t digits() const noexcept { return radices_.size(); }
  std::size_t radix(std::size_t i) const noexcept { return radices_[i]; }

  Elem encode(std::span<const Elem> digits) const noexcept {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) idx = idx * radices_[i] + digits[i];
    return static_cast<Elem>(idx);
  }

  void decode(Elem index, std::span<Elem> out) const noexcept {
    std::size_t idx = index;
    for (std::size_t i = radices_.size(); i-- > 0;) {
      out[i] = static_cast<Elem>(idx % radices_[i]);
      idx /= radices_[i];
    }
  }

  std::vector<Elem> decode(Elem index) const {
    std::vector<Elem> out(radices_.size());
    decode(index, out);
    return out;
  }

  /// Every index decoded once, row-major: digits of element x start at x * digits().
  std::vector<Elem> decode_all() const {
    std::vector<Elem> out(total_ * radices_.size());
    for (std::size_t x = 0; x < total_; ++x) {
      decode(static_cast<Elem>(x), std::span<Elem>(out.data() + x * radices_.size(), radices_.size()));
    }
    return out;
  }

 private:
  std::vector<std::size_t> radices_;
  std::size_t total_ = 1;
};

}  // namespace cleanring
