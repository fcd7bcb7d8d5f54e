#include "mdsrepair/rs_repair.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mdsrepair/rng.hpp"

namespace mdsrepair {

RSCode build_rs_code_with_modulus(const CodeParams& p, const PrimeField& F,
                                  std::vector<uint32_t> h, uint64_t seed) {
  RSCode code{p, F, nullptr, {}, {}, seed};
  code.E = std::make_shared<const ExtField>(ExtField::with_modulus(F, std::move(h)));
  if (static_cast<long long>(code.E->l()) != p.l) {
    throw DegenerateParams("modulus degree does not match l = s^(m+n-1)");
  }
  const ExtField& E = *code.E;
  long long exp = 1;
  for (int t = 0; t < p.n; ++t) {
    code.point_exps.push_back(exp);
    code.points.push_back(E.beta_pow(static_cast<uint64_t>(exp)));
    exp *= p.s;
  }
  for (int a = 0; a < p.n; ++a) {
    for (int b = a + 1; b < p.n; ++b) {
      if (code.points[a] == code.points[b]) {
        throw DegenerateParams("evaluation points collide");
      }
    }
  }
  return code;
}

RSCode build_rs_code(const CodeParams& p, const PrimeField& F, uint64_t seed,
                     long long cap) {
  if (p.l > cap) {
    throw CapExceeded("l = " + std::to_string(p.l) + " exceeds the cap of " +
                      std::to_string(cap));
  }
  return build_rs_code_with_modulus(p, F, irreducible_poly(F, static_cast<uint32_t>(p.l), seed),
                                    seed);
}

std::vector<ExtElem> rs_encode(const RSCode& code, const std::vector<ExtElem>& message) {
  if (static_cast<int>(message.size()) != code.params.k) {
    throw LengthMismatch("message must have k coefficients");
  }
  const ExtField& E = *code.E;
  std::vector<ExtElem> out;
  out.reserve(code.points.size());
  for (const ExtElem& alpha : code.points) {
    ExtElem acc = E.zero();
    for (size_t u = message.size(); u-- > 0;) {
      acc = E.add(E.mul(acc, alpha), message[u]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<ExtElem> nu_coeffs(const RSCode& code) {
  const ExtField& E = *code.E;
  int n = code.params.n;
  std::vector<ExtElem> nu;
  nu.reserve(n);
  for (int t = 0; t < n; ++t) {
    ExtElem prod = E.one();
    for (int j = 0; j < n; ++j) {
      if (j == t) continue;
      prod = E.mul(prod, E.sub(code.points[t], code.points[j]));
    }
    nu.push_back(E.inv(prod));
  }

  // Self-check actual duality: the nu-scaled evaluations of any polynomial
  // of degree < n-k must annihilate evaluations of degree < k polynomials.
  Rng rng(0xD0A1ull ^ code.seed);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<ExtElem> pc, gc;
    for (int u = 0; u < code.params.r; ++u) {
      ExtElem x = E.zero();
      for (uint32_t j = 0; j < E.l(); ++j) x.c[j] = static_cast<uint32_t>(rng.below(code.F.q()));
      pc.push_back(std::move(x));
    }
    for (int u = 0; u < code.params.k; ++u) {
      ExtElem x = E.zero();
      for (uint32_t j = 0; j < E.l(); ++j) x.c[j] = static_cast<uint32_t>(rng.below(code.F.q()));
      gc.push_back(std::move(x));
    }
    ExtElem acc = E.zero();
    for (int j = 0; j < n; ++j) {
      ExtElem pv = E.zero(), gv = E.zero();
      for (size_t u = pc.size(); u-- > 0;) pv = E.add(E.mul(pv, code.points[j]), pc[u]);
      for (size_t u = gc.size(); u-- > 0;) gv = E.add(E.mul(gv, code.points[j]), gc[u]);
      acc = E.add(acc, E.mul(nu[j], E.mul(pv, gv)));
    }
    if (!E.is_zero(acc)) {
      throw BasisFailure("dual coefficients failed the duality check");
    }
  }
  return nu;
}

ExtElem RSRepairScheme::dual_codeword(size_t h, size_t t) const {
  return ExtElem{dual_columns[t].row(h)};
}

std::vector<ExtElem> RSRepairScheme::query_elements(int helper) const {
  std::vector<ExtElem> out;
  for (int h : queries[helper].kept) {
    out.push_back(dual_codeword(static_cast<size_t>(h), static_cast<size_t>(helper)));
  }
  return out;
}

RSRepairScheme build_repair_scheme(const RSCode& code, int failed) {
  const CodeParams& p = code.params;
  const ExtField& E = *code.E;
  const Radix R = p.radix();
  if (failed < 0 || failed >= p.n) throw OutOfRange("failed node index");

  RSRepairScheme scheme;
  scheme.failed = failed;
  long long win = p.window_count();
  for (long long a : si_set(failed, R)) {
    for (int z = 0; z < win; ++z) scheme.polys.emplace_back(a, z);
  }
  size_t l = static_cast<size_t>(p.l);
  if (scheme.polys.size() != l) {
    throw BasisFailure("repair polynomial count != l");
  }

  // The evaluation exponents at the failed node must cover [0, l-1] exactly:
  // a has zeros across the window, so adding z*s^failed fills it carry-free.
  {
    std::vector<long long> exps;
    exps.reserve(l);
    for (auto [a, z] : scheme.polys) {
      exps.push_back(a + static_cast<long long>(z) * code.point_exps[failed]);
    }
    std::sort(exps.begin(), exps.end());
    for (size_t h = 0; h < l; ++h) {
      if (exps[h] != static_cast<long long>(h)) {
        throw BasisFailure("evaluation exponents at the failed node do not cover [0, l-1]");
      }
    }
  }

  scheme.nu = nu_coeffs(code);

  // Dual codeword table, one column block per node.
  scheme.dual_columns.reserve(p.n);
  for (int t = 0; t < p.n; ++t) {
    Mat col(code.F, l, E.l());
    for (size_t h = 0; h < l; ++h) {
      auto [a, z] = scheme.polys[h];
      uint64_t e = static_cast<uint64_t>(a) +
                   static_cast<uint64_t>(z) * static_cast<uint64_t>(code.point_exps[t]);
      col.set_row(h, E.mul(scheme.nu[t], E.beta_pow(e)).c);
    }
    scheme.dual_columns.push_back(std::move(col));
  }

  if (scheme.dual_columns[failed].rank() != l) {
    throw BasisFailure("dual symbols at the failed node do not form a basis");
  }

  // Greedy query selection per helper, in enumeration order, tracking how
  // every dual symbol expands over the kept queries.
  scheme.queries.resize(p.n);
  for (int t = 0; t < p.n; ++t) {
    if (t == failed) continue;
    SpanTracker tracker(code.F, E.l());
    std::vector<std::vector<uint32_t>> raw(l);
    HelperQueries& hq = scheme.queries[t];
    for (size_t h = 0; h < l; ++h) {
      bool independent = tracker.insert(scheme.dual_columns[t].row(h), &raw[h]);
      if (independent) hq.kept.push_back(static_cast<int>(h));
    }
    hq.expansion = Mat(code.F, l, hq.kept.size());
    for (size_t h = 0; h < l; ++h) hq.expansion.set_row(h, raw[h]);
  }

  std::vector<ExtElem> basis;
  basis.reserve(l);
  for (size_t h = 0; h < l; ++h) {
    basis.push_back(scheme.dual_codeword(h, static_cast<size_t>(failed)));
  }
  scheme.mu = dual_basis(E, basis);
  return scheme;
}

RSTranscript rs_make_transcript(const RSCode& code, const RSRepairScheme& scheme,
                                const std::vector<ExtElem>& codeword) {
  if (static_cast<int>(codeword.size()) != code.params.n) {
    throw LengthMismatch("codeword must have n symbols");
  }
  const ExtField& E = *code.E;
  RSTranscript tr;
  tr.failed = scheme.failed;
  tr.responses.resize(code.params.n);
  tr.total_symbols = 0;
  for (int t = 0; t < code.params.n; ++t) {
    if (t == scheme.failed) continue;
    std::vector<ExtElem> gammas = scheme.query_elements(t);
    std::vector<uint32_t>& resp = tr.responses[t];
    resp.reserve(gammas.size());
    for (const ExtElem& gamma : gammas) {
      resp.push_back(E.trace(E.mul(gamma, codeword[t])));
    }
    tr.total_symbols += static_cast<long long>(resp.size());
  }
  return tr;
}

ExtElem rs_repair_node(const RSCode& code, const RSRepairScheme& scheme,
                       const RSTranscript& transcript) {
  const CodeParams& p = code.params;
  const ExtField& E = *code.E;
  if (transcript.failed != scheme.failed) {
    throw TranscriptMismatch("transcript targets a different failed node");
  }
  if (static_cast<int>(transcript.responses.size()) != p.n) {
    throw TranscriptMismatch("transcript must carry one response list per node");
  }
  for (int t = 0; t < p.n; ++t) {
    size_t expect = (t == scheme.failed) ? 0 : scheme.queries[t].kept.size();
    if (transcript.responses[t].size() != expect) {
      throw TranscriptMismatch("response count for node " + std::to_string(t) +
                               " does not match its query set");
    }
  }

  // lambda_h = tr(dual_h[i] f(alpha_i)) = -sum_j tr(dual_h[j] f(alpha_j)),
  // each helper term expanded over that helper's queried traces.
  size_t l = static_cast<size_t>(p.l);
  const PrimeField& F = code.F;
  ExtElem out = E.zero();
  for (size_t h = 0; h < l; ++h) {
    uint32_t lambda = 0;
    for (int t = 0; t < p.n; ++t) {
      if (t == scheme.failed) continue;
      const HelperQueries& hq = scheme.queries[t];
      const std::vector<uint32_t>& resp = transcript.responses[t];
      for (size_t u = 0; u < hq.kept.size(); ++u) {
        uint32_t coef = hq.expansion.get(h, u);
        if (coef) lambda = F.add(lambda, F.mul(coef, resp[u]));
      }
    }
    lambda = F.neg(lambda);
    if (lambda) out = E.add(out, E.scale(lambda, scheme.mu[h]));
  }
  return out;
}

ExtElem rs_repair_from_codeword(const RSCode& code, const RSRepairScheme& scheme,
                                const std::vector<ExtElem>& codeword) {
  std::vector<ExtElem> masked = codeword;
  masked[static_cast<size_t>(scheme.failed)] = code.E->zero();  // erased
  RSTranscript tr = rs_make_transcript(code, scheme, masked);
  return rs_repair_node(code, scheme, tr);
}

NodeBandwidth rs_measure_bandwidth(const RSCode& code, const RSRepairScheme& scheme) {
  const CodeParams& p = code.params;
  NodeBandwidth nb;
  nb.failed = scheme.failed;
  nb.total = 0;
  nb.pairs_pass = true;
  for (int t = 0; t < p.n; ++t) {
    if (t == scheme.failed) continue;
    long long dim = static_cast<long long>(scheme.dual_columns[t].rank());
    // The greedy query set must have exactly this size (a maximal
    // independent subset of a set is a maximum one).
    if (dim != static_cast<long long>(scheme.queries[t].kept.size())) {
      throw BasisFailure("query set size disagrees with the measured rank");
    }
    PerHelperDim ph;
    ph.t = t;
    ph.dim = dim;
    for (const PairBound& b : pair_dimension_bounds(p, scheme.failed, t)) {
      bool ok = dim <= b.value;
      nb.pairs_pass = nb.pairs_pass && ok;
      ph.checks.push_back({b.name, b.value, ok});
    }
    nb.per_helper.push_back(std::move(ph));
    nb.total += dim;
  }
  return nb;
}

}  // namespace mdsrepair
