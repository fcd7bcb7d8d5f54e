#include "mdsrepair/ext_field.hpp"

#include <stdexcept>
#include <string>

#include "mdsrepair/rng.hpp"

namespace mdsrepair {
namespace {

// Dense polynomials over GF(q) for the generic (q != 2) paths: coefficient
// vectors, little-endian, not necessarily trimmed.
using Poly = std::vector<uint32_t>;

int pdeg(const Poly& p) {
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i]) return static_cast<int>(i);
  }
  return -1;
}

void ptrim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly pmul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j]) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
  }
  return out;
}

Poly pmod(const PrimeField& F, Poly a, const Poly& f) {
  int df = pdeg(f);
  uint32_t lead_inv = F.inv(f[static_cast<size_t>(df)]);
  for (int d = pdeg(a); d >= df; d = pdeg(a)) {
    uint32_t factor = F.mul(a[static_cast<size_t>(d)], lead_inv);
    size_t shift = static_cast<size_t>(d - df);
    for (int j = 0; j <= df; ++j) {
      a[shift + static_cast<size_t>(j)] =
          F.sub(a[shift + static_cast<size_t>(j)], F.mul(factor, f[static_cast<size_t>(j)]));
    }
  }
  ptrim(a);
  return a;
}

Poly pgcd(const PrimeField& F, Poly a, Poly b) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// g(x) -> g(x^q) mod f; equals g^q mod f because the coefficients lie in F.
Poly pfrob_step(const PrimeField& F, const Poly& g, const Poly& f) {
  Poly spread;
  spread.assign(g.empty() ? 1 : (g.size() - 1) * F.q() + 1, 0);
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i]) spread[i * F.q()] = g[i];
  }
  return pmod(F, std::move(spread), f);
}

bool pirreducible(const PrimeField& F, const Poly& f) {
  int l = pdeg(f);
  if (l < 1) return false;
  if (l == 1) return true;
  if (f[0] == 0) return false;
  Poly x = {0, 1};
  Poly g = x;
  for (int j = 1; j <= l; ++j) {
    g = pfrob_step(F, g, f);
    if (j <= l / 2) {
      Poly d = g;
      if (d.size() < 2) d.resize(2, 0);
      d[1] = F.sub(d[1], 1);
      if (pdeg(pgcd(F, std::move(d), f)) != 0) return false;
    }
  }
  ptrim(g);
  return g == x;
}

gf2::Poly pack_bits(const std::vector<uint32_t>& coeffs) {
  gf2::Poly out((coeffs.size() + 63) / 64, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] & 1u) out[i >> 6] |= uint64_t(1) << (i & 63);
  }
  gf2::trim(out);
  return out;
}

std::vector<uint32_t> unpack_bits(const gf2::Poly& p, size_t n) {
  std::vector<uint32_t> out(n, 0);
  for (size_t i = 0; i < n; ++i) out[i] = gf2::get_bit(p, i) ? 1 : 0;
  return out;
}

bool modulus_irreducible(const PrimeField& F, const std::vector<uint32_t>& h) {
  if (F.q() == 2) return gf2::irreducible(pack_bits(h));
  return pirreducible(F, h);
}

}  // namespace

std::vector<uint32_t> irreducible_poly(const PrimeField& F, uint32_t l, uint64_t seed) {
  if (l < 1) throw OutOfRange("extension degree must be positive");
  Rng rng(seed);
  uint32_t q = F.q();
  if (l == 1) {
    return {static_cast<uint32_t>(rng.below(q)), 1};
  }
  for (;;) {
    std::vector<uint32_t> cand(l + 1, 0);
    cand[l] = 1;
    cand[0] = 1 + static_cast<uint32_t>(rng.below(q - 1));  // no root at zero
    for (uint32_t j = 1; j < l; ++j) cand[j] = static_cast<uint32_t>(rng.below(q));
    if (modulus_irreducible(F, cand)) return cand;
  }
}

ExtField ExtField::build(const PrimeField& F, uint32_t l, uint64_t seed) {
  return ExtField(F, irreducible_poly(F, l, seed));
}

ExtField ExtField::with_modulus(const PrimeField& F, std::vector<uint32_t> h) {
  if (h.size() < 2) throw InvalidModulus("modulus must have degree >= 1");
  for (uint32_t& c : h) c %= F.q();
  if (h.back() != 1) throw InvalidModulus("modulus must be monic");
  if (!modulus_irreducible(F, h)) throw InvalidModulus("modulus is reducible");
  return ExtField(F, std::move(h));
}

ExtField::ExtField(const PrimeField& F, std::vector<uint32_t> h)
    : F_(F), l_(static_cast<uint32_t>(h.size() - 1)), h_(std::move(h)) {
  if (F_.q() == 2) h2_ = pack_bits(h_);
  build_tables();
  self_check();
}

void ExtField::build_tables() {
  size_t l = l_;
  powers_ = Mat(F_, 2 * l - 1, l);
  std::vector<uint32_t> cur(l, 0);
  cur[0] = 1;
  powers_.set_row(0, cur);
  for (size_t e = 1; e < 2 * l - 1; ++e) {
    uint32_t overflow = cur[l - 1];
    for (size_t j = l; j-- > 1;) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (overflow) {
      for (size_t j = 0; j < l; ++j) cur[j] = F_.sub(cur[j], F_.mul(overflow, h_[j]));
    }
    powers_.set_row(e, cur);
  }

  frob_rows_ = Mat(F_, l, l);
  if (F_.q() == 2) {
    for (size_t j = 0; j < l; ++j) {
      frob_rows_.set_row(j, powers_.row(2 * j));
    }
  } else {
    ExtElem bq = pow(beta(), F_.q());
    ExtElem r = one();
    frob_rows_.set_row(0, r.c);
    for (size_t j = 1; j < l; ++j) {
      r = mul(r, bq);
      frob_rows_.set_row(j, r.c);
    }
  }

  // tau[j] = tr(beta^j), read off as the matrix trace of multiplication by
  // beta^j: sum over u of the u-th coefficient of beta^(j+u).
  tau_.assign(l, 0);
  for (size_t j = 0; j < l; ++j) {
    uint32_t acc = 0;
    for (size_t u = 0; u < l; ++u) acc = F_.add(acc, powers_.get(j + u, u));
    tau_[j] = acc;
  }
}

void ExtField::self_check() const {
  // The trace functional must agree with the literal Frobenius orbit sum,
  // whose coefficients above position 0 must vanish.
  int samples = l_ >= 1024 ? 2 : 4;
  Rng rng(0x7261CEull ^ (uint64_t(l_) << 8) ^ F_.q());
  for (int s = 0; s < samples; ++s) {
    ExtElem x = zero();
    for (uint32_t j = 0; j < l_; ++j) x.c[j] = static_cast<uint32_t>(rng.below(F_.q()));
    ExtElem orbit = frobenius_orbit_sum(x);
    for (uint32_t j = 1; j < l_; ++j) {
      if (orbit.c[j] != 0) throw std::logic_error("trace orbit sum left the base field");
    }
    if (orbit.c[0] != trace(x)) throw std::logic_error("trace functional mismatch");
  }
}

ExtElem ExtField::beta() const {
  ExtElem b = zero();
  if (l_ == 1) {
    b.c[0] = F_.neg(h_[0]);  // residue of x when h = x + c
  } else {
    b.c[1] = 1;
  }
  return b;
}

ExtElem ExtField::from_base(uint32_t v) const {
  ExtElem x = zero();
  x.c[0] = v % F_.q();
  return x;
}

ExtElem ExtField::from_coeffs(std::vector<uint32_t> coeffs) const {
  if (coeffs.size() != l_) throw LengthMismatch("element length != extension degree");
  for (uint32_t& c : coeffs) c %= F_.q();
  return ExtElem{std::move(coeffs)};
}

bool ExtField::is_zero(const ExtElem& x) const {
  for (uint32_t c : x.c) {
    if (c) return false;
  }
  return true;
}

ExtElem ExtField::add(const ExtElem& x, const ExtElem& y) const {
  if (x.c.size() != l_ || y.c.size() != l_) throw LengthMismatch("add: element length");
  ExtElem out = zero();
  for (uint32_t j = 0; j < l_; ++j) out.c[j] = F_.add(x.c[j], y.c[j]);
  return out;
}

ExtElem ExtField::sub(const ExtElem& x, const ExtElem& y) const {
  if (x.c.size() != l_ || y.c.size() != l_) throw LengthMismatch("sub: element length");
  ExtElem out = zero();
  for (uint32_t j = 0; j < l_; ++j) out.c[j] = F_.sub(x.c[j], y.c[j]);
  return out;
}

ExtElem ExtField::neg(const ExtElem& x) const {
  ExtElem out = zero();
  for (uint32_t j = 0; j < l_; ++j) out.c[j] = F_.neg(x.c[j]);
  return out;
}

ExtElem ExtField::scale(uint32_t c, const ExtElem& x) const {
  ExtElem out = zero();
  for (uint32_t j = 0; j < l_; ++j) out.c[j] = F_.mul(c, x.c[j]);
  return out;
}

ExtElem ExtField::mul(const ExtElem& x, const ExtElem& y) const {
  if (x.c.size() != l_ || y.c.size() != l_) throw LengthMismatch("mul: element length");
  if (F_.q() == 2) {
    gf2::Poly prod = gf2::mul(pack_bits(x.c), pack_bits(y.c));
    prod = gf2::mod(std::move(prod), h2_);
    return ExtElem{unpack_bits(prod, l_)};
  }
  Poly prod = pmul(F_, x.c, y.c);
  prod = pmod(F_, std::move(prod), h_);
  prod.resize(l_, 0);
  return ExtElem{std::move(prod)};
}

ExtElem ExtField::inv(const ExtElem& x) const {
  if (is_zero(x)) throw DivisionByZero("inverse of zero element");
  // extended Euclid over F[x] against the (irreducible) modulus
  Poly r0 = h_, r1 = x.c;
  ptrim(r1);
  Poly t0 = {}, t1 = {1};
  while (pdeg(r1) > 0) {
    // r0 = quot * r1 + r2
    Poly quot(static_cast<size_t>(pdeg(r0) - pdeg(r1)) + 1, 0);
    Poly rem = r0;
    uint32_t lead_inv = F_.inv(r1[static_cast<size_t>(pdeg(r1))]);
    for (int d = pdeg(rem); d >= pdeg(r1); d = pdeg(rem)) {
      uint32_t factor = F_.mul(rem[static_cast<size_t>(d)], lead_inv);
      size_t shift = static_cast<size_t>(d - pdeg(r1));
      quot[shift] = factor;
      for (int j = 0; j <= pdeg(r1); ++j) {
        rem[shift + static_cast<size_t>(j)] =
            F_.sub(rem[shift + static_cast<size_t>(j)],
                   F_.mul(factor, r1[static_cast<size_t>(j)]));
      }
    }
    ptrim(rem);
    Poly t2_sub = pmul(F_, quot, t1);
    Poly t2 = t0;
    if (t2.size() < t2_sub.size()) t2.resize(t2_sub.size(), 0);
    for (size_t j = 0; j < t2_sub.size(); ++j) t2[j] = F_.sub(t2[j], t2_sub[j]);
    ptrim(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r1 is the (nonzero, constant) gcd; scale t1 by its inverse
  uint32_t g = r1.empty() ? 0 : r1[0];
  if (g == 0) throw DivisionByZero("element shares a factor with the modulus");
  uint32_t ginv = F_.inv(g);
  Poly out = pmod(F_, std::move(t1), h_);
  out.resize(l_, 0);
  for (uint32_t& c : out) c = F_.mul(c, ginv);
  return ExtElem{std::move(out)};
}

ExtElem ExtField::div(const ExtElem& x, const ExtElem& y) const {
  return mul(x, inv(y));
}

ExtElem ExtField::pow(ExtElem x, uint64_t e) const {
  ExtElem acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, x);
    x = mul(x, x);
    e >>= 1;
  }
  return acc;
}

ExtElem ExtField::beta_pow(uint64_t e) const {
  if (e < powers_.rows()) return ExtElem{powers_.row(static_cast<size_t>(e))};
  return pow(beta(), e);
}

ExtElem ExtField::frobenius(const ExtElem& x) const {
  if (x.c.size() != l_) throw LengthMismatch("frobenius: element length");
  return ExtElem{frob_rows_.combine(x.c)};
}

uint32_t ExtField::trace(const ExtElem& x) const {
  if (x.c.size() != l_) throw LengthMismatch("trace: element length");
  uint32_t acc = 0;
  for (uint32_t j = 0; j < l_; ++j) {
    if (x.c[j]) acc = F_.add(acc, F_.mul(x.c[j], tau_[j]));
  }
  return acc;
}

ExtElem ExtField::frobenius_orbit_sum(const ExtElem& x) const {
  ExtElem acc = x;
  ExtElem y = x;
  for (uint32_t u = 1; u < l_; ++u) {
    y = frobenius(y);
    acc = add(acc, y);
  }
  return acc;
}

Mat ExtField::coefficient_matrix(const std::vector<ExtElem>& V) const {
  Mat M(F_, V.size(), l_);
  for (size_t r = 0; r < V.size(); ++r) {
    if (V[r].c.size() != l_) throw LengthMismatch("coefficient_matrix: element length");
    M.set_row(r, V[r].c);
  }
  return M;
}

size_t rank_over_base(const ExtField& E, const std::vector<ExtElem>& V) {
  if (V.empty()) return 0;
  return E.coefficient_matrix(V).rank();
}

std::vector<ExtElem> dual_basis(const ExtField& E, const std::vector<ExtElem>& B) {
  size_t l = E.l();
  if (B.size() != l) throw NotABasis("need exactly l elements");
  Mat Bm = E.coefficient_matrix(B);
  if (Bm.rank() != l) throw NotABasis("elements are linearly dependent over the base field");

  // Bilinear form of the power basis: T[u][v] = tr(beta^(u+v)).
  const PrimeField& F = E.base();
  std::vector<uint32_t> tau_ext(2 * l - 1);
  for (size_t e = 0; e < 2 * l - 1; ++e) {
    tau_ext[e] = E.trace(E.beta_pow(e));
  }
  Mat T(F, l, l);
  for (size_t u = 0; u < l; ++u) {
    for (size_t v = 0; v < l; ++v) T.set(u, v, tau_ext[u + v]);
  }

  // tr(B_i mu_j) = (B T M^T)_(i,j), so M = ((B T)^T)^-1 gives the identity.
  Mat A = Bm.mul(T);
  std::optional<Mat> Minv = A.transpose().inverse();
  if (!Minv) throw NotABasis("trace form is singular on the given set");
  std::vector<ExtElem> out;
  out.reserve(l);
  for (size_t j = 0; j < l; ++j) out.push_back(ExtElem{Minv->row(j)});
  return out;
}

}  // namespace mdsrepair
