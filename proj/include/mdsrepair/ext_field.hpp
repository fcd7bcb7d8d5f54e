#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mdsrepair/field.hpp"
#include "mdsrepair/gf2poly.hpp"
#include "mdsrepair/linalg.hpp"

namespace mdsrepair {

// Element of an extension field, as its coefficient vector over the base
// field: c[j] holds the coefficient of beta^j ("little-endian"). The file
// formats depend on this order, so it is fixed.
struct ExtElem {
  std::vector<uint32_t> c;
  friend bool operator==(const ExtElem& a, const ExtElem& b) = default;
};

// Deterministic seeded search for a monic irreducible polynomial of degree l
// over F, returned as its little-endian coefficient vector (length l + 1).
// Candidates are drawn from Rng(seed); the first certified irreducible wins.
std::vector<uint32_t> irreducible_poly(const PrimeField& F, uint32_t l, uint64_t seed);

// E = GF(q^l) built as F[x]/(h) with beta the residue of x. Immutable after
// construction; the precomputed tables (powers of beta up to beta^(2l-2),
// the Frobenius row space, the trace functional) make every element
// operation safe to run concurrently on shared instances.
class ExtField {
 public:
  // Searches for h with irreducible_poly(F, l, seed).
  static ExtField build(const PrimeField& F, uint32_t l, uint64_t seed);
  // Uses the given modulus; throws InvalidModulus unless h is monic of
  // degree l and certified irreducible.
  static ExtField with_modulus(const PrimeField& F, std::vector<uint32_t> h);

  const PrimeField& base() const { return F_; }
  uint32_t l() const { return l_; }
  const std::vector<uint32_t>& modulus() const { return h_; }

  ExtElem zero() const { return ExtElem{std::vector<uint32_t>(l_, 0)}; }
  ExtElem one() const { return from_base(1); }
  ExtElem beta() const;
  ExtElem from_base(uint32_t v) const;
  ExtElem from_coeffs(std::vector<uint32_t> coeffs) const;  // LengthMismatch
  bool is_zero(const ExtElem& x) const;

  ExtElem add(const ExtElem& x, const ExtElem& y) const;
  ExtElem sub(const ExtElem& x, const ExtElem& y) const;
  ExtElem neg(const ExtElem& x) const;
  ExtElem mul(const ExtElem& x, const ExtElem& y) const;
  ExtElem inv(const ExtElem& x) const;  // DivisionByZero
  ExtElem div(const ExtElem& x, const ExtElem& y) const;
  ExtElem scale(uint32_t c, const ExtElem& x) const;

  // x^e by square and multiply; e may vastly exceed l. pow(x, 0) == 1.
  ExtElem pow(ExtElem x, uint64_t e) const;
  // beta^e; table lookup for e <= 2l-2, square-and-multiply beyond.
  ExtElem beta_pow(uint64_t e) const;

  // x -> x^q, the generator of Gal(E/F).
  ExtElem frobenius(const ExtElem& x) const;

  // tr(x) = x + x^q + ... + x^(q^(l-1)), which always lands in F. Evaluated
  // through the precomputed functional tr(beta^j); the construction
  // self-check verifies it against the literal Frobenius orbit sum.
  uint32_t trace(const ExtElem& x) const;

  // The literal orbit sum as an element of E (its coefficients above
  // position 0 must vanish). Kept as the slow reference path.
  ExtElem frobenius_orbit_sum(const ExtElem& x) const;

  // Rows = coefficient vectors of the elements of V.
  Mat coefficient_matrix(const std::vector<ExtElem>& V) const;

 private:
  ExtField(const PrimeField& F, std::vector<uint32_t> h);
  void build_tables();
  void self_check() const;
  ExtElem row_to_elem(const Mat& M, size_t r) const;

  PrimeField F_;
  uint32_t l_;
  std::vector<uint32_t> h_;  // little-endian, h_[l] == 1

  gf2::Poly h2_;             // packed modulus (q == 2)
  Mat powers_;               // row e = beta^e, e in [0, 2l-2]
  Mat frob_rows_;            // row j = beta^(jq) mod h
  std::vector<uint32_t> tau_;  // tau[j] = tr(beta^j)
};

// dim over F of the span of V (rank of the coefficient matrix).
size_t rank_over_base(const ExtField& E, const std::vector<ExtElem>& V);

// Trace-orthogonal dual of a basis B: returns M with tr(B[i] * M[j]) equal
// to 1 when i == j and 0 otherwise. Throws NotABasis when B is dependent.
std::vector<ExtElem> dual_basis(const ExtField& E, const std::vector<ExtElem>& B);

}  // namespace mdsrepair
