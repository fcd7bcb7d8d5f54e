#pragma once

#include <cstdint>
#include <vector>

// Bit-packed polynomials over GF(2): word w, bit b holds the coefficient of
// x^(64w+b). Everything the extension-field arithmetic and the
// irreducibility search need at large degree runs on these.

namespace mdsrepair::gf2 {

using Poly = std::vector<uint64_t>;

inline bool get_bit(const Poly& p, size_t i) {
  size_t w = i >> 6;
  return w < p.size() && ((p[w] >> (i & 63)) & 1u);
}

inline void set_bit(Poly& p, size_t i) {
  size_t w = i >> 6;
  if (w >= p.size()) p.resize(w + 1, 0);
  p[w] |= uint64_t(1) << (i & 63);
}

int degree(const Poly& p);  // -1 for the zero polynomial
void trim(Poly& p);

Poly shifted(const Poly& p, size_t bits);     // p * x^bits
void add_shifted(Poly& acc, const Poly& p, size_t bits);  // acc ^= p * x^bits

Poly mul(const Poly& a, const Poly& b);
Poly mod(Poly a, const Poly& f);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f);
Poly gcd(Poly a, Poly b);

// True iff f (monic, degree >= 1) is irreducible over GF(2). Runs the
// Frobenius chain g <- g^2 mod f from g = x, screening gcd(g - x, f) at every
// step j <= deg/2 (no factor of degree <= deg/2 means irreducible) and
// confirming x^(2^deg) == x at the end.
bool irreducible(const Poly& f);

}  // namespace mdsrepair::gf2
