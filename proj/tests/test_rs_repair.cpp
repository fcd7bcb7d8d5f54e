#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mdsrepair/rng.hpp"
#include "mdsrepair/rs_repair.hpp"
#include "oracle_smallfield.hpp"

using namespace mdsrepair;

namespace {

ExtElem random_elem(const ExtField& E, Rng& rng) {
  ExtElem x = E.zero();
  for (uint32_t j = 0; j < E.l(); ++j) {
    x.c[j] = static_cast<uint32_t>(rng.below(E.base().q()));
  }
  return x;
}

std::vector<ExtElem> random_message(const RSCode& code, Rng& rng) {
  std::vector<ExtElem> msg;
  for (int u = 0; u < code.params.k; ++u) msg.push_back(random_elem(*code.E, rng));
  return msg;
}

uint64_t to_mask(const ExtElem& x) {
  uint64_t m = 0;
  for (size_t j = 0; j < x.c.size(); ++j) {
    if (x.c[j]) m |= uint64_t(1) << j;
  }
  return m;
}

uint64_t modulus_mask(const ExtField& E) {
  uint64_t m = 0;
  for (size_t j = 0; j < E.modulus().size(); ++j) {
    if (E.modulus()[j]) m |= uint64_t(1) << j;
  }
  return m;
}

RSCode small_code() {  // (s=2, m=1, n=4, k=2) over GF(2), l = 16
  return build_rs_code(CodeParams(2, 1, 4, 2), PrimeField(2), 0);
}

}  // namespace

TEST_CASE("code construction") {
  RSCode code = small_code();
  CHECK(code.params.l == 16);
  CHECK(code.E->l() == 16);
  const ExtField& E = *code.E;
  CHECK(code.points[0] == E.beta_pow(1));
  CHECK(code.points[1] == E.beta_pow(2));
  CHECK(code.points[2] == E.beta_pow(4));
  CHECK(code.points[3] == E.beta_pow(8));

  CHECK(build_rs_code(CodeParams(2, 2, 5, 1), PrimeField(2), 0).params.l == 64);
  CHECK(CodeParams(2, 2, 10, 6).l == 2048);
  CHECK_THROWS_AS(build_rs_code(CodeParams(2, 2, 10, 6), PrimeField(2), 0, 1024),
                  CapExceeded);
}

TEST_CASE("encoding") {
  RSCode code = small_code();
  const ExtField& E = *code.E;

  SUBCASE("a constant polynomial stores the constant everywhere") {
    ExtElem c = E.beta_pow(7);
    auto word = rs_encode(code, {c, E.zero()});
    for (const ExtElem& sym : word) CHECK(sym == c);
  }

  SUBCASE("f = x stores the evaluation points") {
    auto word = rs_encode(code, {E.zero(), E.one()});
    for (int t = 0; t < 4; ++t) CHECK(word[t] == code.points[t]);
  }

  SUBCASE("any k symbols interpolate every node (reference route)") {
    uint64_t f = modulus_mask(E);
    Rng rng(10);
    for (int trial = 0; trial < 10; ++trial) {
      auto word = rs_encode(code, random_message(code, rng));
      std::vector<uint64_t> xs, ys;
      for (int t : {1, 3}) {  // any k = 2 of the n nodes
        xs.push_back(to_mask(code.points[t]));
        ys.push_back(to_mask(word[t]));
      }
      for (int t = 0; t < 4; ++t) {
        CHECK(oracle::interpolate(xs, ys, to_mask(code.points[t]), f) == to_mask(word[t]));
      }
    }
  }

  CHECK_THROWS_AS(rs_encode(code, {E.one()}), LengthMismatch);
}

TEST_CASE("dual code coefficients") {
  SUBCASE("the product formula, recomputed factor by factor") {
    RSCode code = small_code();
    const ExtField& E = *code.E;
    auto nu = nu_coeffs(code);
    for (int t = 0; t < code.params.n; ++t) {
      ExtElem expect = E.one();
      for (int j = 0; j < code.params.n; ++j) {
        if (j == t) continue;
        expect = E.mul(expect, E.inv(E.sub(code.points[t], code.points[j])));
      }
      CHECK(nu[t] == expect);
    }
    // with two points the product is a single inverted difference, the same
    // one from either side in characteristic 2
    ExtElem d01 = E.inv(E.sub(code.points[0], code.points[1]));
    ExtElem d10 = E.inv(E.sub(code.points[1], code.points[0]));
    CHECK(d01 == d10);
  }

  SUBCASE("actual duality on random low-degree pairs") {
    RSCode code = small_code();
    const ExtField& E = *code.E;
    auto nu = nu_coeffs(code);
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      // deg p < n-k, deg g < k
      std::vector<ExtElem> pc, gc;
      for (int u = 0; u < code.params.r; ++u) pc.push_back(random_elem(E, rng));
      for (int u = 0; u < code.params.k; ++u) gc.push_back(random_elem(E, rng));
      ExtElem acc = E.zero();
      for (int j = 0; j < code.params.n; ++j) {
        ExtElem pv = E.zero(), gv = E.zero();
        for (size_t u = pc.size(); u-- > 0;) pv = E.add(E.mul(pv, code.points[j]), pc[u]);
        for (size_t u = gc.size(); u-- > 0;) gv = E.add(E.mul(gv, code.points[j]), gc[u]);
        acc = E.add(acc, E.mul(nu[j], E.mul(pv, gv)));
      }
      CHECK(E.is_zero(acc));
    }
  }
}

TEST_CASE("repair scheme structure") {
  RSCode code = small_code();
  const ExtField& E = *code.E;

  for (int i = 0; i < 4; ++i) {
    RSRepairScheme scheme = build_repair_scheme(code, i);
    CHECK(scheme.polys.size() == 16);

    SUBCASE("evaluation exponents at the failed node cover the full range") {
      std::vector<long long> exps;
      for (auto [a, z] : scheme.polys) exps.push_back(a + z * code.point_exps[i]);
      std::sort(exps.begin(), exps.end());
      for (long long e = 0; e < 16; ++e) CHECK(exps[e] == e);
    }

    SUBCASE("own column spans everything, helpers span less") {
      std::vector<ExtElem> own;
      for (size_t h = 0; h < 16; ++h) own.push_back(scheme.dual_codeword(h, i));
      CHECK(rank_over_base(E, own) == 16);
      for (int t = 0; t < 4; ++t) {
        if (t == i) continue;
        CHECK(scheme.queries[t].kept.size() < 16);
      }
    }

    SUBCASE("dual codewords annihilate 100 random codewords") {
      Rng rng(13 + i);
      for (int trial = 0; trial < 100; ++trial) {
        auto word = rs_encode(code, random_message(code, rng));
        for (size_t h = 0; h < 16; ++h) {
          ExtElem acc = E.zero();
          for (int j = 0; j < 4; ++j) {
            acc = E.add(acc, E.mul(scheme.dual_codeword(h, j), word[j]));
          }
          CHECK(E.is_zero(acc));
        }
      }
    }
  }
}

TEST_CASE("measured bandwidth at (2,1,4,2) matches the frozen reference table") {
  // Frozen from the reference route (mask arithmetic + mask elimination) for
  // the seed-0 modulus x^16+x^15+x^13+x^11+x^8+x+1; re-derived below.
  RSCode code = small_code();
  const long long frozen_dims[4][4] = {
      {-1, 9, 10, 12}, {12, -1, 10, 12}, {10, 12, -1, 11}, {9, 10, 12, -1}};
  const long long frozen_totals[4] = {31, 34, 33, 31};

  uint64_t f = modulus_mask(*code.E);
  REQUIRE(f == 0x1a903ull);

  for (int i = 0; i < 4; ++i) {
    RSRepairScheme scheme = build_repair_scheme(code, i);
    NodeBandwidth nb = rs_measure_bandwidth(code, scheme);
    CHECK(nb.total == frozen_totals[i]);
    CHECK(nb.pairs_pass);
    for (const PerHelperDim& ph : nb.per_helper) {
      CHECK(ph.dim == frozen_dims[i][ph.t]);

      // reference route: rank of the evaluation masks
      std::vector<uint64_t> masks;
      for (auto [a, z] : scheme.polys) {
        masks.push_back(oracle::powmod(2, static_cast<uint64_t>(a + z * code.point_exps[ph.t]), f));
      }
      CHECK(oracle::rank(masks) == static_cast<size_t>(ph.dim));
    }
  }
}

TEST_CASE("repair restores the erased symbol") {
  RSCode code = small_code();
  const ExtField& E = *code.E;

  SUBCASE("constant and zero codewords") {
    RSRepairScheme scheme = build_repair_scheme(code, 2);
    ExtElem c = E.beta_pow(9);
    auto word = rs_encode(code, {c, E.zero()});
    CHECK(rs_repair_from_codeword(code, scheme, word) == c);
    auto zero_word = rs_encode(code, {E.zero(), E.zero()});
    CHECK(rs_repair_from_codeword(code, scheme, zero_word) == E.zero());
  }

  SUBCASE("random messages, every failed node, two parameter sets") {
    for (CodeParams p : {CodeParams(2, 1, 5, 3), CodeParams(3, 1, 5, 2)}) {
      RSCode c = build_rs_code(p, PrimeField(2), 0);
      Rng rng(17);
      for (int i = 0; i < p.n; ++i) {
        RSRepairScheme scheme = build_repair_scheme(c, i);
        for (int trial = 0; trial < 10; ++trial) {
          auto word = rs_encode(c, random_message(c, rng));
          CHECK(rs_repair_from_codeword(c, scheme, word) == word[i]);
        }
      }
    }
  }

  SUBCASE("the transcript byte format round-trips through repair") {
    RSRepairScheme scheme = build_repair_scheme(code, 1);
    Rng rng(19);
    auto word = rs_encode(code, random_message(code, rng));
    RSTranscript tr = rs_make_transcript(code, scheme, word);
    CHECK(tr.total_symbols == 34);
    CHECK(rs_repair_node(code, scheme, tr) == word[1]);

    RSTranscript bad = tr;
    bad.responses[0].pop_back();
    CHECK_THROWS_AS(rs_repair_node(code, scheme, bad), TranscriptMismatch);
    bad = tr;
    bad.failed = 2;
    CHECK_THROWS_AS(rs_repair_node(code, scheme, bad), TranscriptMismatch);
  }
}

TEST_CASE("base-r structure emerges at s = n-k, m = 1") {
  CodeParams p(3, 1, 4, 1);  // s = r = 3
  CHECK(p.exact_power);
  RSCode code = build_rs_code(p, PrimeField(2), 0);
  CHECK(code.params.l == 81);  // 3^4
  RSRepairScheme scheme = build_repair_scheme(code, 0);
  CHECK(scheme.polys.size() == 81);
  // every a in the scheme has digit 0 at the failed node's radix-3 position
  Radix R = p.radix();
  for (auto [a, z] : scheme.polys) {
    CHECK(window(a, 0, R) == 0);
    CHECK(z < 3);
  }
}

TEST_CASE("closed-form bound values") {
  CodeParams p(2, 2, 10, 6);
  RSBounds b = rs_bounds(p, 2);
  CHECK(b.cutset == Frac::of(4608, 1));
  CHECK(b.weak_upper == Frac::of(9728, 1));  // 19 * 512
  CHECK_FALSE(b.series_upper.has_value());   // ambiguous below m = 3
  CHECK(b.ratio_guarantee == Frac::of(1, 1));

  CodeParams sub(2, 2, 7, 2);  // r = 5 > s^m = 4
  RSBounds bs = rs_bounds(sub, 2);
  CHECK(bs.ratio_guarantee == Frac::of(5, 4));
  CHECK(frac_le_int(bs.ratio_guarantee, 2));
  CHECK(bs.weak_upper_subpower == Frac::of(16 * 256 / 4, 1));

  CodeParams m3(2, 3, 12, 4);  // m = 3: series numerator n-1+3s^2+2s+1
  RSBounds b3 = rs_bounds(m3, 2);
  REQUIRE(b3.series_upper.has_value());
  long long num = 11 + 3 * 4 + 2 * 2 + 1;
  CHECK(*b3.series_upper == Frac::of(num * m3.l / 8, 1));

  SUBCASE("per-pair bounds are the set-size counts") {
    CodeParams q(2, 1, 4, 2);
    auto far_low = pair_dimension_bounds(q, 3, 0);
    REQUIRE(far_low.size() == 2);
    CHECK(far_low[0].name == "far_low_basic");
    CHECK(far_low[0].value == 8 + 2);   // l/s^m + l/s^(i-t)
    CHECK(far_low[1].name == "far_low");
    CHECK(far_low[1].value == 8 + 1);   // l/s^m + (s^m-1) l/s^(i-t+m)
    auto far_high = pair_dimension_bounds(q, 0, 2);
    REQUIRE(far_high.size() == 1);
    CHECK(far_high[0].value == 8 + 4);  // l/s^m + l/s^(m+n-t-1)
  }
}

TEST_CASE("subpower regime: r = 5, s = 2, m = 2") {
  CodeParams p(2, 2, 7, 2);
  RSCode code = build_rs_code(p, PrimeField(2), 1);
  CHECK(code.params.l == 256);
  Rng rng(23);
  RSBounds bounds = rs_bounds(p, 2);
  for (int i = 0; i < p.n; ++i) {
    RSRepairScheme scheme = build_repair_scheme(code, i);
    auto word = rs_encode(code, random_message(code, rng));
    CHECK(rs_repair_from_codeword(code, scheme, word) == word[i]);
    NodeBandwidth nb = rs_measure_bandwidth(code, scheme);
    CHECK(nb.pairs_pass);
    CHECK(int_le_frac(nb.total, bounds.weak_upper_subpower));
  }
}
