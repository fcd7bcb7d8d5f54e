#include "mdsrepair/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

namespace mdsrepair {

Frac Frac::of(long long n, long long d) {
  if (d == 0) throw DivisionByZero("fraction with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Frac{n, d};
}

std::string Frac::decimal(int places) const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, value());
  return buf;
}

std::string Frac::ratio_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool frac_le_int(const Frac& f, long long v) {
  return static_cast<__int128>(f.num) <= static_cast<__int128>(v) * f.den;
}

bool int_le_frac(long long v, const Frac& f) {
  return static_cast<__int128>(v) * f.den <= static_cast<__int128>(f.num);
}

bool int_ge_frac(long long v, const Frac& f) {
  return static_cast<__int128>(v) * f.den >= static_cast<__int128>(f.num);
}

namespace {

long long ipow_ll(long long b, int e) {
  long long out = 1;
  while (e-- > 0) out *= b;
  return out;
}

double linear_scheme_floor(const CodeParams& p, uint32_t q) {
  // (n-1) log_q ((n-1)|E| / ((r-1)(|E|-1) + (n-1))) with |E| = q^l, computed
  // in log space so q^l never materializes.
  long double lq = std::log(static_cast<long double>(q));
  long double inv_E = std::exp(-static_cast<long double>(p.l) * lq);  // 1/|E|
  long double inner = (p.r - 1) * (1.0L - inv_E) + (p.n - 1) * inv_E;
  long double val = (p.n - 1) * (std::log(static_cast<long double>(p.n - 1)) - std::log(inner)) / lq;
  return static_cast<double>(val);
}

}  // namespace

RSBounds rs_bounds(const CodeParams& p, uint32_t q) {
  RSBounds b;
  long long l = p.l;
  long long sm = p.window_count();
  b.cutset = Frac::of((p.n - 1) * l, p.r);
  b.linear_floor = linear_scheme_floor(p, q);

  long long weak_num = (p.n - 1) + 2 * (p.m - 1) * sm - 2 * p.m + 6;
  b.weak_upper = Frac::of(weak_num * l, p.r);
  b.weak_upper_subpower = Frac::of(weak_num * l, sm);

  if (p.m >= 3) {
    // n-1 + 3 s^(m-1) + 2(s^(m-2) + ... + s) - (m-4)
    long long series = 3 * ipow_ll(p.s, p.m - 1);
    for (int e = p.m - 2; e >= 1; --e) series += 2 * ipow_ll(p.s, e);
    long long num = (p.n - 1) + series - (p.m - 4);
    b.series_upper = Frac::of(num * l, sm);
  }

  b.ratio_guarantee = Frac::of(p.r, sm);
  return b;
}

ArrayBoundValues array_bound_values(const CodeParams& p) {
  ArrayBoundValues b;
  long long l = p.l;
  long long sm = p.window_count();
  b.cutset = Frac::of((p.n - 1) * l, p.r);
  long long strong_num = p.n - 1;
  for (int v = 1; v <= p.m - 1; ++v) strong_num += 2 * (ipow_ll(p.s, v) - 1);
  long long weak_num = (p.n - 1) + 2 * (p.m - 1) * sm - 2 * p.m + 2;
  b.strong = strong_num * l / sm;
  b.weak = weak_num * l / sm;
  return b;
}

std::vector<PairBound> pair_dimension_bounds(const CodeParams& p, int i, int t) {
  std::vector<PairBound> out;
  long long l = p.l;
  long long base = l / p.window_count();  // the group count l / s^m
  long long sm = p.window_count();
  auto spow = [&](int e) { return ipow_ll(p.s, e); };

  if (t < i) {
    int dist = i - t;
    if (dist >= p.m) {
      out.push_back({"far_low_basic", base + l / spow(dist)});
      out.push_back({"far_low", base + (sm - 1) * l / spow(dist + p.m)});
    } else {
      int w = dist;
      out.push_back({"near_low", base + (sm - 1) * l / spow(p.m + w)});
    }
  } else {
    int dist = t - i;
    if (dist >= p.m) {
      out.push_back({"far_high_basic", base + l / spow(p.m + p.n - t - 1)});
    } else {
      int w = dist;
      out.push_back({"near_high", base + (spow(w) - 1) * l / spow(p.n + w - i - 1) +
                                      (spow(p.m - w) - 1) * l / sm});
    }
  }
  return out;
}

std::vector<ReferenceRow> reference_rows(const CodeParams& p, uint32_t q) {
  std::vector<ReferenceRow> rows;
  double n = p.n, r = p.r;
  char buf[96];

  // full-length RS with one subsymbol per helper
  double gw_l = std::log(n) / std::log(n / r);
  std::snprintf(buf, sizeof(buf), "%.4f", gw_l);
  rows.push_back({"rs_full_length", std::to_string(p.n - 1), buf, "no (meets linear floor)"});

  // refined full-length variant, l = log_q n
  double dm_l = std::log(n) / std::log(static_cast<double>(q));
  double dm_bw = (n - 1) * dm_l * (1.0 - std::log(r) / std::log(n));
  std::snprintf(buf, sizeof(buf), "%.4f", dm_bw);
  ReferenceRow dm{"rs_full_length_refined", buf, "", "no (meets linear floor)"};
  std::snprintf(buf, sizeof(buf), "%.4f", dm_l);
  dm.subpacketization = buf;
  rows.push_back(dm);

  // this construction: bandwidth < (n-1+3r) l / r at l = s^(m+n-1)
  long long l = p.l;
  long long this_bw = (p.n - 1 + 3 * p.r) * l / p.r;
  rows.push_back({"rs_this_construction", "< " + std::to_string(this_bw), std::to_string(l),
                  p.exact_power ? "asymptotically" : "within (n-k)/s^m of it"});

  // base-r expansion construction, l = r^n
  double yb_l = std::pow(r, n);
  double yb_bw = (n + 1) * yb_l / r;
  std::snprintf(buf, sizeof(buf), "< %.0f", yb_bw);
  ReferenceRow yb{"rs_base_r_expansion", buf, "", "asymptotically"};
  std::snprintf(buf, sizeof(buf), "%.0f", yb_l);
  yb.subpacketization = buf;
  rows.push_back(yb);

  // cut-set-achieving RS, l ~ n^n
  double tyb_l = std::pow(n, n);
  double tyb_bw = (n - 1) * tyb_l / r;
  std::snprintf(buf, sizeof(buf), "%.0f", tyb_bw);
  ReferenceRow tyb{"rs_cutset_achieving", buf, "", "yes"};
  std::snprintf(buf, sizeof(buf), "~%.0f", tyb_l);
  tyb.subpacketization = buf;
  rows.push_back(tyb);

  return rows;
}

}  // namespace mdsrepair
