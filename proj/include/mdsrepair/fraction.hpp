#pragma once

#include <cstdint>
#include <string>

namespace mdsrepair {

// Exact rational with reduced terms and positive denominator. Bound
// comparisons in the audits are exact (128-bit cross multiplication); the
// decimal form exists only for display.
struct Frac {
  long long num = 0;
  long long den = 1;

  static Frac of(long long n, long long d);
  static Frac integer(long long n) { return Frac{n, 1}; }

  bool is_integer() const { return den == 1; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string decimal(int places = 4) const;
  std::string ratio_string() const;  // "num/den" (or "num" when integral)

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Frac& a, const Frac& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Frac& a, const Frac& b) { return a == b || a < b; }
  friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }
  friend bool operator>(const Frac& a, const Frac& b) { return !(a <= b); }
};

bool frac_le_int(const Frac& f, long long v);   // f <= v
bool int_le_frac(long long v, const Frac& f);   // v <= f
bool int_ge_frac(long long v, const Frac& f);   // v >= f

}  // namespace mdsrepair
