#include "mdsrepair/field.hpp"

#include <string>

namespace mdsrepair {

bool PrimeField::is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(uint32_t q) : q_(q) {
  if (!is_prime(q)) {
    throw CompositeModulus("modulus " + std::to_string(q) + " is not prime");
  }
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
  uint64_t base = a % q_;
  uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  // extended Euclid on (a, q)
  long long t = 0, new_t = 1;
  long long r = q_, new_r = a;
  while (new_r != 0) {
    long long quot = r / new_r;
    long long tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += q_;
  return static_cast<uint32_t>(t);
}

}  // namespace mdsrepair
