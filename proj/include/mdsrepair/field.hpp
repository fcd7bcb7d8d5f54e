#pragma once

#include <cstdint>

#include "mdsrepair/errors.hpp"

namespace mdsrepair {

// GF(q) for prime q. Elements are canonical representatives in [0, q-1]
// stored as uint32_t; all arithmetic reduces through 64-bit intermediates.
class PrimeField {
 public:
  // Throws CompositeModulus unless q is a verified prime >= 2.
  explicit PrimeField(uint32_t q);

  uint32_t q() const { return q_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint64_t s = static_cast<uint64_t>(a) + b;
    return s >= q_ ? static_cast<uint32_t>(s - q_) : static_cast<uint32_t>(s);
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : static_cast<uint32_t>(a + static_cast<uint64_t>(q_) - b);
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % q_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;  // DivisionByZero when a == 0
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  // Reduces an arbitrary signed value into [0, q-1].
  uint32_t from_int(long long v) const {
    long long r = v % static_cast<long long>(q_);
    if (r < 0) r += q_;
    return static_cast<uint32_t>(r);
  }

  static bool is_prime(uint64_t n);

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.q_ == b.q_;
  }

 private:
  uint32_t q_;
};

}  // namespace mdsrepair
