#include "mdsrepair/gf2poly.hpp"

namespace mdsrepair::gf2 {

int degree(const Poly& p) {
  for (size_t w = p.size(); w-- > 0;) {
    if (p[w]) return static_cast<int>(w * 64 + 63 - __builtin_clzll(p[w]));
  }
  return -1;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly shifted(const Poly& p, size_t bits) {
  Poly out;
  add_shifted(out, p, bits);
  return out;
}

void add_shifted(Poly& acc, const Poly& p, size_t bits) {
  size_t wshift = bits >> 6;
  size_t bshift = bits & 63;
  size_t need = p.size() + wshift + 1;
  if (acc.size() < need) acc.resize(need, 0);
  if (bshift == 0) {
    for (size_t w = 0; w < p.size(); ++w) acc[w + wshift] ^= p[w];
  } else {
    for (size_t w = 0; w < p.size(); ++w) {
      acc[w + wshift] ^= p[w] << bshift;
      acc[w + wshift + 1] ^= p[w] >> (64 - bshift);
    }
  }
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  const Poly& lo = (degree(a) <= degree(b)) ? a : b;
  const Poly& hi = (degree(a) <= degree(b)) ? b : a;
  for (size_t w = 0; w < lo.size(); ++w) {
    uint64_t word = lo[w];
    while (word) {
      int bit = __builtin_ctzll(word);
      word &= word - 1;
      add_shifted(out, hi, w * 64 + static_cast<size_t>(bit));
    }
  }
  trim(out);
  return out;
}

Poly mod(Poly a, const Poly& f) {
  int df = degree(f);
  int da = degree(a);
  while (da >= df && df >= 0) {
    add_shifted(a, f, static_cast<size_t>(da - df));
    // the leading bit just cancelled; rescan from there
    int nd = -1;
    for (size_t w = (static_cast<size_t>(da) >> 6) + 1; w-- > 0;) {
      if (w < a.size() && a[w]) {
        nd = static_cast<int>(w * 64 + 63 - __builtin_clzll(a[w]));
        break;
      }
    }
    da = nd;
  }
  trim(a);
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f) {
  return mod(mul(a, b), f);
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b);
    a.swap(b);
    b = std::move(r);
  }
  return a;
}

bool irreducible(const Poly& f) {
  int l = degree(f);
  if (l < 1) return false;
  if (l == 1) return true;
  Poly x;
  set_bit(x, 1);
  if (!get_bit(f, 0)) return false;  // divisible by x
  Poly g = mod(x, f);
  for (int j = 1; j <= l; ++j) {
    g = mulmod(g, g, f);  // Frobenius step
    if (j <= l / 2) {
      Poly d = g;
      if (d.empty()) d.resize(1, 0);
      d[0] ^= 2;  // g - x
      Poly gg = gcd(d, f);
      if (degree(gg) != 0) return false;
    }
  }
  trim(g);
  return g == x;  // x^(2^l) == x
}

}  // namespace mdsrepair::gf2
