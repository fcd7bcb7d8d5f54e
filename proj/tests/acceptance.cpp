// Acceptance suite: one line per criterion, exact tolerances, nonzero exit
// on any failure. Heavier sweeps than the unit tests; minutes of CPU.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mdsrepair/rng.hpp"
#include "mdsrepair/serialize.hpp"
#include "mdsrepair/version.hpp"

using namespace mdsrepair;

namespace {

int g_failures = 0;
long long g_checks = 0;
bool g_current_ok = true;
std::string g_first_failure;

void expect(bool ok, const std::string& what) {
  ++g_checks;
  if (!ok && g_current_ok) {
    g_current_ok = false;
    g_first_failure = what;
  }
}

void criterion(int number, const std::string& title, const std::function<void()>& body) {
  g_current_ok = true;
  g_first_failure.clear();
  long long before = g_checks;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("AC%02d %s - %s (%lld checks, %.2fs)%s%s\n", number,
              g_current_ok ? "PASS" : "FAIL", title.c_str(), g_checks - before, secs,
              g_current_ok ? "" : ": ", g_current_ok ? "" : g_first_failure.c_str());
  std::fflush(stdout);
  if (!g_current_ok) ++g_failures;
}

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

ArrayWord random_systematic(const ArrayCode& code, Rng& rng) {
  ArrayWord sys(static_cast<size_t>(code.params.k),
                std::vector<uint32_t>(static_cast<size_t>(code.params.l)));
  for (auto& row : sys) {
    for (auto& v : row) v = static_cast<uint32_t>(rng.below(code.F.q()));
  }
  return sys;
}

std::vector<CodeParams> rs_sweep() {
  std::vector<CodeParams> out;
  for (int n = 4; n <= 8; ++n) out.push_back(CodeParams(2, 1, n, n - 2));
  out.push_back(CodeParams(2, 2, 5, 1));
  out.push_back(CodeParams(2, 2, 6, 2));
  out.push_back(CodeParams(3, 1, 5, 2));
  return out;
}

// ---------------------------------------------------------------------------

void ac1_digit_examples() {
  Radix R(2, 2, 10);
  expect(window(6, 0, R) == 2, "window(6, node 0)");
  expect(window(6, 1, R) == 3, "window(6, node 1)");
  expect(window(6, 2, R) == 1, "window(6, node 2)");
  for (int node = 3; node <= 9; ++node) {
    expect(window(6, node, R) == 0, "window(6, high node)");
  }
  expect(substitute(0, 1, {0, 0}, R) == 0, "substitute 00");
  expect(substitute(0, 1, {0, 1}, R) == 2, "substitute 01");
  expect(substitute(0, 1, {1, 0}, R) == 4, "substitute 10");
  expect(substitute(0, 1, {1, 1}, R) == 6, "substitute 11");
  expect(group_set(0, 1, R) == std::vector<long long>{0, 2, 4, 6}, "group set");
  expect(t_set(0, 0, 1, {0}, R) == std::vector<long long>{0, 4}, "t_set helper0 b=0");
  expect(t_set(0, 0, 1, {1}, R) == std::vector<long long>{2, 6}, "t_set helper0 b=1");
  expect(t_set(0, 2, 1, {0}, R) == std::vector<long long>{0, 2}, "t_set helper2 b=0");
  expect(t_set(0, 2, 1, {1}, R) == std::vector<long long>{4, 6}, "t_set helper2 b=1");
  for (int helper = 3; helper <= 9; ++helper) {
    expect(helper_index(0, helper, 1, R) == 0, "far helper index");
  }
  expect(helper_index(0, 0, 1, {0}, R) == 0, "near index (0,b=0)");
  expect(helper_index(0, 0, 1, {1}, R) == 2, "near index (0,b=1)");
  expect(helper_index(0, 2, 1, {0}, R) == 0, "near index (2,b=0)");
  expect(helper_index(0, 2, 1, {1}, R) == 1, "near index (2,b=1)");
}

void ac2_rs_repair_exactness() {
  for (const CodeParams& p : rs_sweep()) {
    RSCode code = build_rs_code(p, PrimeField(2), 0);
    std::vector<std::vector<ExtElem>> words;
    Rng rng(100 + static_cast<uint64_t>(p.n) * 10 + p.m);
    for (int trial = 0; trial < 100; ++trial) {
      words.push_back(rs_encode(code, random_message(code, rng)));
    }
    for (int i = 0; i < p.n; ++i) {
      RSRepairScheme scheme = build_repair_scheme(code, i);
      for (const auto& word : words) {
        expect(rs_repair_from_codeword(code, scheme, word) == word[static_cast<size_t>(i)],
               "repair mismatch at n=" + std::to_string(p.n) + " i=" + std::to_string(i));
      }
    }
  }
}

void ac3_rs_bandwidth_bounds() {
  for (const CodeParams& p : rs_sweep()) {
    RSCode code = build_rs_code(p, PrimeField(2), 0);
    RSBounds bounds = rs_bounds(p, 2);
    long long max_b = 0;
    for (int i = 0; i < p.n; ++i) {
      RSRepairScheme scheme = build_repair_scheme(code, i);
      NodeBandwidth nb = rs_measure_bandwidth(code, scheme);
      expect(nb.pairs_pass, "per-pair dimension bound violated at n=" + std::to_string(p.n));
      if (p.exact_power) {
        expect(int_le_frac(nb.total, bounds.weak_upper),
               "b_i exceeds the weak upper bound at n=" + std::to_string(p.n));
      } else {
        expect(int_le_frac(nb.total, bounds.weak_upper_subpower), "b_i exceeds the bound");
      }
      if (nb.total > max_b) max_b = nb.total;
    }
    expect(int_ge_frac(max_b, bounds.cutset), "max b below the cut-set floor");
    expect(static_cast<double>(max_b) >= bounds.linear_floor,
           "max b below the linear-scheme floor");
  }
}

void ac4_exponent_coverage() {
  for (const CodeParams& p : rs_sweep()) {
    RSCode code = build_rs_code(p, PrimeField(2), 0);
    for (int i = 0; i < p.n; ++i) {
      // build_repair_scheme hard-fails unless the exponents cover [0, l-1];
      // re-verify explicitly here.
      RSRepairScheme scheme = build_repair_scheme(code, i);
      std::vector<bool> seen(static_cast<size_t>(p.l), false);
      bool ok = true;
      for (auto [a, z] : scheme.polys) {
        long long e = a + static_cast<long long>(z) * code.point_exps[i];
        if (e < 0 || e >= p.l || seen[static_cast<size_t>(e)]) {
          ok = false;
          break;
        }
        seen[static_cast<size_t>(e)] = true;
      }
      expect(ok, "exponent coverage at n=" + std::to_string(p.n) + " i=" + std::to_string(i));
    }
  }
}

void ac5_array_paper_parameters() {
  CodeParams p(2, 2, 10, 6);
  ArrayCode code = build_array_code(p, 41, 0);
  ArrayBoundValues bv = array_bound_values(p);
  expect(bv.cutset == Frac::of(4608, 1), "cut-set value");
  expect(bv.strong == 5632, "strong bound value");

  for (int i = 0; i < p.n; ++i) {
    RepairPlan plan = build_repair_plan(code, i);
    ArrayBandwidth bw = array_measure_bandwidth(code, plan);
    bool interior = (i >= p.m - 1) && (i <= p.n - p.m);
    if (interior) {
      expect(bw.total == 5632 && bw.tight, "interior node must meet the bound exactly");
    } else {
      expect(bw.total <= 5632, "boundary node exceeds the bound");
    }
  }

  // repair exactness, 50 random codewords x all 10 nodes, with the
  // transcript payload recounted as the bandwidth oracle
  Rng rng(500);
  std::vector<RepairPlan> plans;
  for (int i = 0; i < p.n; ++i) plans.push_back(build_repair_plan(code, i));
  for (int trial = 0; trial < 50; ++trial) {
    ArrayWord word = array_encode(code, random_systematic(code, rng));
    for (int i = 0; i < p.n; ++i) {
      ArrayTranscript tr = array_make_transcript(code, word, plans[static_cast<size_t>(i)]);
      long long counted = 0;
      for (const auto& g : tr.values) counted += static_cast<long long>(g.size());
      expect(counted == plans[static_cast<size_t>(i)].total_symbols,
             "transcript payload disagrees with the plan accounting");
      expect(array_repair_node(code, plans[static_cast<size_t>(i)], tr) ==
                 word[static_cast<size_t>(i)],
             "array repair mismatch at i=" + std::to_string(i));
    }
  }
}

void ac6_mds_property() {
  struct Config {
    CodeParams p;
    uint32_t q;
    size_t expect_subsets;
  };
  for (const Config& cfg : {Config{CodeParams(2, 1, 5, 3), 11, 10},
                            Config{CodeParams(2, 2, 6, 2), 29, 15}}) {
    ArrayCode code = build_array_code(cfg.p, cfg.q, 0);
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick(static_cast<size_t>(cfg.p.k));
    for (int i = 0; i < cfg.p.k; ++i) pick[static_cast<size_t>(i)] = i;
    for (;;) {
      subsets.push_back(pick);
      int i = cfg.p.k - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == cfg.p.n - cfg.p.k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < cfg.p.k; ++j) {
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
      }
    }
    expect(subsets.size() == cfg.expect_subsets, "subset count");
    Rng rng(600 + cfg.q);
    for (int trial = 0; trial < 20; ++trial) {
      ArrayWord word = array_encode(code, random_systematic(code, rng));
      for (const auto& subset : subsets) {
        ArrayWord kept;
        for (int i : subset) kept.push_back(word[static_cast<size_t>(i)]);
        expect(reconstruct_from_k(code, subset, kept) == word,
               "reconstruction mismatch at n=" + std::to_string(cfg.p.n));
      }
    }
  }
}

void ac7_optimal_update() {
  CodeParams p(2, 2, 10, 6);
  ArrayCode code = build_array_code(p, 41, 0);
  Rng rng(700);
  ArrayWord sys = random_systematic(code, rng);
  ArrayWord word = array_encode(code, sys);
  for (int sample = 0; sample < 1000; ++sample) {
    int j = static_cast<int>(rng.below(static_cast<uint64_t>(p.k)));
    long long a = static_cast<long long>(rng.below(static_cast<uint64_t>(p.l)));
    uint32_t delta = 1 + static_cast<uint32_t>(rng.below(40));
    ArrayWord sys2 = sys;
    auto& cell = sys2[static_cast<size_t>(j)][static_cast<size_t>(a)];
    cell = code.F.add(cell, delta);
    ArrayWord word2 = array_encode(code, sys2);
    long long changed = 0;
    bool where_ok = true;
    for (int i = p.k; i < p.n; ++i) {
      long long node_changed = 0;
      for (long long c = 0; c < p.l; ++c) {
        if (word2[static_cast<size_t>(i)][static_cast<size_t>(c)] !=
            word[static_cast<size_t>(i)][static_cast<size_t>(c)]) {
          ++node_changed;
          if (c != a) where_ok = false;
        }
      }
      if (node_changed != 1) where_ok = false;
      changed += node_changed;
    }
    expect(where_ok && changed == p.r, "update must touch exactly one symbol per parity");
  }
}

void ac8_scheme_equivalence() {
  CodeParams p(2, 2, 10, 6);
  ArrayCode code = build_array_code(p, 41, 0);
  long long strong_cap = 11;  // n-1 + 2 sum_{v<m} (s^v - 1)
  long long weak_cap = 15;    // n-1 - 2(m-1) + 2(m-1) r
  std::vector<RepairPlan> strong, weak;
  for (int i = 0; i < p.n; ++i) {
    strong.push_back(build_repair_plan(code, i, PlanKind::strong));
    weak.push_back(build_repair_plan(code, i, PlanKind::weak));
    expect(strong.back().per_group_count <= strong_cap, "strong plan per-group size");
    expect(weak.back().per_group_count <= weak_cap, "weak plan per-group size");
  }
  Rng rng(800);
  for (int trial = 0; trial < 20; ++trial) {
    ArrayWord word = array_encode(code, random_systematic(code, rng));
    for (int i = 0; i < p.n; ++i) {
      auto a = array_repair_node(code, strong[static_cast<size_t>(i)],
                                 array_make_transcript(code, word, strong[static_cast<size_t>(i)]));
      auto b = array_repair_node(code, weak[static_cast<size_t>(i)],
                                 array_make_transcript(code, word, weak[static_cast<size_t>(i)]));
      expect(a == b, "plans disagree at i=" + std::to_string(i));
      expect(a == word[static_cast<size_t>(i)], "both plans must repair exactly");
    }
  }
}

void ac9_subpower_regime() {
  CodeParams p(2, 2, 7, 2);  // r = 5 > s^m = 4
  expect(!p.exact_power, "regime flag");

  RSCode rs = build_rs_code(p, PrimeField(2), 0);
  RSBounds bounds = rs_bounds(p, 2);
  expect(bounds.ratio_guarantee == Frac::of(5, 4), "reported cut-set ratio");
  expect(frac_le_int(bounds.ratio_guarantee, 2), "ratio guarantee is at most 2");
  Rng rng(900);
  auto words = std::vector<std::vector<ExtElem>>{};
  for (int t = 0; t < 10; ++t) words.push_back(rs_encode(rs, random_message(rs, rng)));
  for (int i = 0; i < p.n; ++i) {
    RSRepairScheme scheme = build_repair_scheme(rs, i);
    for (const auto& w : words) {
      expect(rs_repair_from_codeword(rs, scheme, w) == w[static_cast<size_t>(i)],
             "rs repair in the subpower regime");
    }
    NodeBandwidth nb = rs_measure_bandwidth(rs, scheme);
    expect(int_le_frac(nb.total, bounds.weak_upper_subpower),
           "rs bandwidth above the subpower bound");
    expect(nb.pairs_pass, "per-pair bounds in the subpower regime");
  }

  ArrayCode ac = build_array_code(p, 29, 0);
  ArrayBoundValues bv = array_bound_values(p);
  for (int t = 0; t < 10; ++t) {
    ArrayWord word = array_encode(ac, random_systematic(ac, rng));
    for (int i = 0; i < p.n; ++i) {
      RepairPlan plan = build_repair_plan(ac, i);
      expect(plan.total_symbols <= bv.strong, "array bandwidth above the subpower bound");
      expect(array_repair_node(ac, plan, array_make_transcript(ac, word, plan)) ==
                 word[static_cast<size_t>(i)],
             "array repair in the subpower regime");
    }
  }
}

void ac10_determinism() {
  auto produce = [] {
    std::string out;
    RSCode code = build_rs_code(CodeParams(2, 1, 4, 2), PrimeField(2), 0);
    Rng msg_rng(7);
    auto word = rs_encode(code, random_message(code, msg_rng));
    out += dump_json(rs_word_json(code, word, 7));
    RSRepairScheme scheme = build_repair_scheme(code, 0);
    out += dump_json(rs_transcript_json(rs_make_transcript(code, scheme, word)));
    std::vector<NodeBandwidth> nodes;
    for (int i = 0; i < 4; ++i) {
      nodes.push_back(rs_measure_bandwidth(code, build_repair_scheme(code, i)));
    }
    out += dump_json(rs_audit_json(code, nodes, rs_bounds(code.params, 2)));

    ArrayCode ac = build_array_code(CodeParams(2, 2, 10, 6), 41, 0);
    Rng rng(7);
    ArrayWord aw = array_encode(ac, random_systematic(ac, rng));
    out += dump_json(array_word_json(ac, aw, 7));
    RepairPlan plan = build_repair_plan(ac, 2);
    out += dump_json(array_transcript_json(plan, array_make_transcript(ac, aw, plan)));
    std::vector<ArrayNodeAudit> audits;
    for (int i = 0; i < 10; ++i) {
      RepairPlan pl = build_repair_plan(ac, i);
      audits.push_back({i, pl.per_group_count, array_measure_bandwidth(ac, pl)});
    }
    out += dump_json(array_audit_json(ac, audits));
    return out;
  };
  std::string first = produce();
  std::string second = produce();
  expect(!first.empty() && first == second, "artifacts differ between identical runs");
}

}  // namespace

int main() {
  std::printf("acceptance suite, %s %s\n", kToolName, kVersion);

  auto t0 = std::chrono::steady_clock::now();
  criterion(1, "digit bookkeeping reproduces every worked example", ac1_digit_examples);
  double ac1_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ac1_secs >= 1.0) {
    std::printf("AC01 FAIL - exceeded the 1s budget (%.2fs)\n", ac1_secs);
    ++g_failures;
  }

  criterion(2, "rs repair restores the erased symbol exactly (100 msgs x all nodes)",
            ac2_rs_repair_exactness);
  criterion(3, "rs measured bandwidth respects every dimension bound and floor",
            ac3_rs_bandwidth_bounds);
  criterion(4, "repair-polynomial exponents cover [0, l-1] at the failed node",
            ac4_exponent_coverage);
  criterion(5, "array code at the worked parameters: tight interior bandwidth, exact repair",
            ac5_array_paper_parameters);
  criterion(6, "any k nodes reconstruct every codeword (exhaustive subsets)",
            ac6_mds_property);
  criterion(7, "single-symbol updates touch exactly one symbol per parity node",
            ac7_optimal_update);
  criterion(8, "aggregated and unaggregated repair plans produce identical nodes",
            ac8_scheme_equivalence);
  criterion(9, "subpower regime (r=5, s^m=4): both constructions build, repair, and bound",
            ac9_subpower_regime);
  criterion(10, "identical config and seed give byte-identical artifacts", ac10_determinism);

  if (g_failures == 0) {
    std::printf("all criteria pass (%lld checks)\n", g_checks);
  } else {
    std::printf("%d criteria FAILED\n", g_failures);
  }
  return g_failures;
}
