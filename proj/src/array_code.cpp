#include "mdsrepair/array_code.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "mdsrepair/linalg.hpp"
#include "mdsrepair/rng.hpp"

namespace mdsrepair {
namespace {

void check_word_shape(const ArrayCode& code, const ArrayWord& word, int expect_rows,
                      const char* what) {
  if (static_cast<int>(word.size()) != expect_rows) {
    throw ShapeMismatch(std::string(what) + ": expected " + std::to_string(expect_rows) +
                        " rows");
  }
  for (const auto& row : word) {
    if (static_cast<long long>(row.size()) != code.params.l) {
      throw ShapeMismatch(std::string(what) + ": rows must have l scalars");
    }
  }
}

uint32_t lam(const ArrayCode& code, int node, long long a, const Radix& R) {
  return code.lambda[static_cast<size_t>(node)]
                    [static_cast<size_t>(window(a, node, R))];
}

std::vector<std::vector<int>> all_tuples(int len, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(len), 0);
  for (;;) {
    out.push_back(cur);
    int u = len;
    while (u-- > 0) {
      if (++cur[static_cast<size_t>(u)] < s) break;
      cur[static_cast<size_t>(u)] = 0;
    }
    if (u < 0) break;
  }
  return out;
}

}  // namespace

ArrayCode array_code_with_lambda(const CodeParams& p, uint32_t q,
                                 std::vector<std::vector<uint32_t>> lambda,
                                 uint64_t seed) {
  long long win = p.window_count();
  if (static_cast<long long>(q) < win * p.n) {
    throw FieldTooSmall("need q >= s^m * n = " + std::to_string(win * p.n) + ", got " +
                        std::to_string(q));
  }
  PrimeField F(q);
  if (static_cast<int>(lambda.size()) != p.n) {
    throw ShapeMismatch("lambda table must have n rows");
  }
  std::unordered_set<uint32_t> seen;
  for (const auto& row : lambda) {
    if (static_cast<long long>(row.size()) != win) {
      throw ShapeMismatch("lambda rows must have s^m entries");
    }
    for (uint32_t v : row) {
      if (v >= q || !seen.insert(v).second) {
        throw DegenerateParams("lambda entries must be distinct field elements");
      }
    }
  }
  return ArrayCode{p, F, std::move(lambda), seed, false};
}

ArrayCode build_array_code(const CodeParams& p, uint32_t q, uint64_t seed, bool shuffle) {
  long long win = p.window_count();
  if (static_cast<long long>(q) < win * p.n) {
    throw FieldTooSmall("need q >= s^m * n = " + std::to_string(win * p.n) + ", got " +
                        std::to_string(q));
  }
  if (!PrimeField::is_prime(q)) throw CompositeModulus("field size must be prime");
  std::vector<uint32_t> pool(q);
  std::iota(pool.begin(), pool.end(), 0u);
  if (shuffle) {
    Rng rng(seed);
    for (size_t i = pool.size(); i-- > 1;) {
      std::swap(pool[i], pool[rng.below(i + 1)]);
    }
  }
  std::vector<std::vector<uint32_t>> lambda(static_cast<size_t>(p.n));
  for (int i = 0; i < p.n; ++i) {
    for (long long j = 0; j < win; ++j) {
      lambda[static_cast<size_t>(i)].push_back(pool[static_cast<size_t>(i * win + j)]);
    }
  }
  ArrayCode code = array_code_with_lambda(p, q, std::move(lambda), seed);
  code.shuffled = shuffle;
  return code;
}

ArrayWord array_encode(const ArrayCode& code, const ArrayWord& systematic) {
  const CodeParams& p = code.params;
  check_word_shape(code, systematic, p.k, "systematic input");
  const Radix R = p.radix();
  const PrimeField& F = code.F;

  ArrayWord word(static_cast<size_t>(p.n),
                 std::vector<uint32_t>(static_cast<size_t>(p.l), 0));
  for (int i = 0; i < p.k; ++i) word[static_cast<size_t>(i)] = systematic[static_cast<size_t>(i)];

  // Per coordinate: r unknown parity symbols against the r parity rows.
  std::vector<std::vector<uint32_t>> A(static_cast<size_t>(p.r),
                                       std::vector<uint32_t>(static_cast<size_t>(p.r)));
  std::vector<uint32_t> b(static_cast<size_t>(p.r));
  for (long long a = 0; a < p.l; ++a) {
    for (int t = 0; t < p.r; ++t) {
      uint32_t rhs = 0;
      for (int i = 0; i < p.k; ++i) {
        uint32_t w = F.pow(lam(code, i, a, R), static_cast<uint64_t>(t));
        rhs = F.add(rhs, F.mul(w, systematic[static_cast<size_t>(i)][static_cast<size_t>(a)]));
      }
      b[static_cast<size_t>(t)] = F.neg(rhs);
      for (int u = 0; u < p.r; ++u) {
        A[static_cast<size_t>(t)][static_cast<size_t>(u)] =
            F.pow(lam(code, p.k + u, a, R), static_cast<uint64_t>(t));
      }
    }
    std::vector<uint32_t> x = solve_dense(F, A, b);
    for (int u = 0; u < p.r; ++u) {
      word[static_cast<size_t>(p.k + u)][static_cast<size_t>(a)] = x[static_cast<size_t>(u)];
    }
  }
  return word;
}

bool parity_check(const ArrayCode& code, const ArrayWord& word) {
  const CodeParams& p = code.params;
  check_word_shape(code, word, p.n, "codeword");
  const Radix R = p.radix();
  const PrimeField& F = code.F;
  for (long long a = 0; a < p.l; ++a) {
    for (int t = 0; t < p.r; ++t) {
      uint32_t acc = 0;
      for (int i = 0; i < p.n; ++i) {
        uint32_t w = F.pow(lam(code, i, a, R), static_cast<uint64_t>(t));
        acc = F.add(acc, F.mul(w, word[static_cast<size_t>(i)][static_cast<size_t>(a)]));
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

ArrayWord reconstruct_from_k(const ArrayCode& code, const std::vector<int>& nodes,
                             const ArrayWord& symbols) {
  const CodeParams& p = code.params;
  if (static_cast<int>(nodes.size()) != p.k) {
    throw ShapeMismatch("reconstruction needs exactly k node indices");
  }
  check_word_shape(code, symbols, p.k, "surviving symbols");
  std::vector<bool> have(static_cast<size_t>(p.n), false);
  for (int i : nodes) {
    if (i < 0 || i >= p.n || have[static_cast<size_t>(i)]) {
      throw ShapeMismatch("surviving node indices must be distinct and in range");
    }
    have[static_cast<size_t>(i)] = true;
  }
  std::vector<int> missing;
  for (int i = 0; i < p.n; ++i) {
    if (!have[static_cast<size_t>(i)]) missing.push_back(i);
  }

  const Radix R = p.radix();
  const PrimeField& F = code.F;
  ArrayWord word(static_cast<size_t>(p.n),
                 std::vector<uint32_t>(static_cast<size_t>(p.l), 0));
  for (int u = 0; u < p.k; ++u) {
    word[static_cast<size_t>(nodes[static_cast<size_t>(u)])] = symbols[static_cast<size_t>(u)];
  }

  size_t miss = missing.size();  // always r
  std::vector<std::vector<uint32_t>> A(miss, std::vector<uint32_t>(miss));
  std::vector<uint32_t> b(miss);
  for (long long a = 0; a < p.l; ++a) {
    for (size_t t = 0; t < miss; ++t) {
      uint32_t rhs = 0;
      for (int i : nodes) {
        uint32_t w = F.pow(lam(code, i, a, R), static_cast<uint64_t>(t));
        rhs = F.add(rhs, F.mul(w, word[static_cast<size_t>(i)][static_cast<size_t>(a)]));
      }
      b[t] = F.neg(rhs);
      for (size_t u = 0; u < miss; ++u) {
        A[t][u] = F.pow(lam(code, missing[u], a, R), static_cast<uint64_t>(t));
      }
    }
    std::vector<uint32_t> x = solve_dense(F, A, b);
    for (size_t u = 0; u < miss; ++u) {
      word[static_cast<size_t>(missing[u])][static_cast<size_t>(a)] = x[u];
    }
  }
  return word;
}

std::vector<std::vector<std::vector<uint32_t>>> encoding_matrices(const ArrayCode& code) {
  const CodeParams& p = code.params;
  const Radix R = p.radix();
  const PrimeField& F = code.F;
  std::vector<std::vector<std::vector<uint32_t>>> D(
      static_cast<size_t>(p.r),
      std::vector<std::vector<uint32_t>>(static_cast<size_t>(p.k),
                                         std::vector<uint32_t>(static_cast<size_t>(p.l), 0)));
  // Per coordinate, column j of -(V1)^-1 V2 is the response of the parity
  // symbols to a unit change of systematic symbol j.
  std::vector<std::vector<uint32_t>> A(static_cast<size_t>(p.r),
                                       std::vector<uint32_t>(static_cast<size_t>(p.r)));
  std::vector<uint32_t> b(static_cast<size_t>(p.r));
  for (long long a = 0; a < p.l; ++a) {
    for (int j = 0; j < p.k; ++j) {
      for (int t = 0; t < p.r; ++t) {
        b[static_cast<size_t>(t)] = F.neg(F.pow(lam(code, j, a, R), static_cast<uint64_t>(t)));
        for (int u = 0; u < p.r; ++u) {
          A[static_cast<size_t>(t)][static_cast<size_t>(u)] =
              F.pow(lam(code, p.k + u, a, R), static_cast<uint64_t>(t));
        }
      }
      std::vector<uint32_t> x = solve_dense(F, A, b);
      for (int u = 0; u < p.r; ++u) {
        D[static_cast<size_t>(u)][static_cast<size_t>(j)][static_cast<size_t>(a)] =
            x[static_cast<size_t>(u)];
      }
    }
  }
  return D;
}

RepairPlan build_repair_plan(const ArrayCode& code, int failed, PlanKind kind) {
  const CodeParams& p = code.params;
  const Radix R = p.radix();
  if (failed < 0 || failed >= p.n) throw OutOfRange("failed node index");

  RepairPlan plan;
  plan.failed = failed;
  plan.kind = kind;
  for (long long rep : si_set(failed, R)) {
    RepairGroup group;
    group.rep = rep;
    for (int j = 0; j < p.n; ++j) {
      if (j == failed) continue;
      int dist = j > failed ? j - failed : failed - j;
      if (dist >= p.m) {
        RepairDescriptor d;
        d.helper = j;
        d.coords = group_set(rep, failed, R);
        d.lam_index = helper_index(rep, j, failed, R);
        group.descriptors.push_back(std::move(d));
      } else if (kind == PlanKind::strong) {
        for (const std::vector<int>& b : all_tuples(p.m - dist, p.s)) {
          RepairDescriptor d;
          d.helper = j;
          d.b = b;
          d.coords = t_set(rep, j, failed, b, R);
          d.lam_index = helper_index(rep, j, failed, b, R);
          group.descriptors.push_back(std::move(d));
        }
      } else {
        // weak plan: near helpers ship each group coordinate unaggregated
        for (long long a : group_set(rep, failed, R)) {
          RepairDescriptor d;
          d.helper = j;
          d.coords = {a};
          d.lam_index = window(a, j, R);
          group.descriptors.push_back(std::move(d));
        }
      }
    }
    if (!plan.groups.empty() &&
        plan.groups.front().descriptors.size() != group.descriptors.size()) {
      throw BasisFailure("descriptor count varies across groups");
    }
    plan.groups.push_back(std::move(group));
  }
  plan.per_group_count = static_cast<long long>(plan.groups.front().descriptors.size());
  plan.total_symbols = plan.per_group_count * static_cast<long long>(plan.groups.size());
  return plan;
}

std::vector<uint32_t> helper_respond(const ArrayCode& code, const ArrayWord& word,
                                     const RepairPlan& plan, size_t group_index,
                                     int helper) {
  check_word_shape(code, word, code.params.n, "codeword");
  const PrimeField& F = code.F;
  std::vector<uint32_t> out;
  for (const RepairDescriptor& d : plan.groups.at(group_index).descriptors) {
    if (d.helper != helper) continue;
    uint32_t acc = 0;
    for (long long a : d.coords) {
      acc = F.add(acc, word[static_cast<size_t>(helper)][static_cast<size_t>(a)]);
    }
    out.push_back(acc);
  }
  return out;
}

ArrayTranscript array_make_transcript(const ArrayCode& code, const ArrayWord& word,
                                      const RepairPlan& plan) {
  check_word_shape(code, word, code.params.n, "codeword");
  const PrimeField& F = code.F;
  ArrayTranscript tr;
  tr.failed = plan.failed;
  tr.values.reserve(plan.groups.size());
  for (const RepairGroup& g : plan.groups) {
    std::vector<uint32_t> vals;
    vals.reserve(g.descriptors.size());
    for (const RepairDescriptor& d : g.descriptors) {
      uint32_t acc = 0;
      for (long long a : d.coords) {
        acc = F.add(acc, word[static_cast<size_t>(d.helper)][static_cast<size_t>(a)]);
      }
      vals.push_back(acc);
    }
    tr.values.push_back(std::move(vals));
  }
  return tr;
}

std::vector<uint32_t> array_repair_node(const ArrayCode& code, const RepairPlan& plan,
                                        const ArrayTranscript& transcript) {
  const CodeParams& p = code.params;
  const PrimeField& F = code.F;
  if (transcript.failed != plan.failed) {
    throw ResponseMismatch("transcript targets a different failed node");
  }
  if (transcript.values.size() != plan.groups.size()) {
    throw ResponseMismatch("transcript group count does not match the plan");
  }

  long long win = p.window_count();
  const std::vector<uint32_t>& lrow = code.lambda[static_cast<size_t>(plan.failed)];
  std::vector<uint32_t> out(static_cast<size_t>(p.l), 0);

  std::vector<std::vector<uint32_t>> A(static_cast<size_t>(win),
                                       std::vector<uint32_t>(static_cast<size_t>(win)));
  for (long long t = 0; t < win; ++t) {
    for (long long w = 0; w < win; ++w) {
      A[static_cast<size_t>(t)][static_cast<size_t>(w)] =
          F.pow(lrow[static_cast<size_t>(w)], static_cast<uint64_t>(t));
    }
  }

  for (size_t gi = 0; gi < plan.groups.size(); ++gi) {
    const RepairGroup& g = plan.groups[gi];
    const std::vector<uint32_t>& vals = transcript.values[gi];
    if (vals.size() != g.descriptors.size()) {
      throw ResponseMismatch("transcript is missing helper values for a group");
    }
    // B_t = -sum over descriptors of lambda[helper][lam_index]^t * value,
    // using the parity rows t in [0, s^m - 1].
    std::vector<uint32_t> B(static_cast<size_t>(win), 0);
    for (long long t = 0; t < win; ++t) {
      uint32_t acc = 0;
      for (size_t di = 0; di < g.descriptors.size(); ++di) {
        const RepairDescriptor& d = g.descriptors[di];
        uint32_t w = F.pow(code.lambda[static_cast<size_t>(d.helper)]
                                      [static_cast<size_t>(d.lam_index)],
                           static_cast<uint64_t>(t));
        acc = F.add(acc, F.mul(w, vals[di]));
      }
      B[static_cast<size_t>(t)] = F.neg(acc);
    }
    std::vector<uint32_t> x = solve_dense(F, A, B);
    // coordinate with window value w is rep + w * s^failed (the window of
    // the representative is zero, so the substitution never carries)
    long long step = 1;
    for (int j = 0; j < plan.failed; ++j) step *= p.s;
    for (long long w = 0; w < win; ++w) {
      out[static_cast<size_t>(g.rep + w * step)] = x[static_cast<size_t>(w)];
    }
  }
  return out;
}

ArrayBandwidth array_measure_bandwidth(const ArrayCode& code, const RepairPlan& plan) {
  ArrayBandwidth bw;
  ArrayBoundValues vals = array_bound_values(code.params);
  bw.total = plan.total_symbols;
  bw.bound_strong = vals.strong;
  bw.bound_weak = vals.weak;
  bw.cutset = vals.cutset;
  bw.tight = (bw.total == bw.bound_strong);
  return bw;
}

}  // namespace mdsrepair
