// Batch front-end: construct codes, encode seeded messages, inject a node
// failure and repair it, and emit bound-vs-measured audit tables.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mdsrepair/serialize.hpp"
#include "mdsrepair/rng.hpp"
#include "mdsrepair/version.hpp"

namespace {

using namespace mdsrepair;

struct CommonOpts {
  int s = 2, m = 1, n = 4, k = 2;
  uint32_t q = 2;
  uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::string code_file;
};

void add_param_flags(CLI::App* cmd, CommonOpts& o, bool with_q, uint32_t default_q) {
  cmd->add_option("-s", o.s, "radix of the digit expansion (>= 2)");
  cmd->add_option("-m", o.m, "window size (s^m <= n-k)");
  cmd->add_option("-n", o.n, "code length");
  cmd->add_option("-k", o.k, "code dimension");
  if (with_q) {
    o.q = default_q;
    cmd->add_option("-q", o.q, "base field size (prime)");
  }
  cmd->add_option("--seed", o.seed, "construction seed");
  cmd->add_option("--format", o.format, "output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("-o,--out", o.out, "write the report to this file");
  cmd->add_option("--code", o.code_file, "load the code from a file instead of flags");
}

void emit(const CommonOpts& o, const std::string& payload) {
  if (!o.out.empty()) {
    write_file(o.out, payload);
  } else {
    std::cout << payload;
  }
}

int thread_count(int jobs) {
  if (const char* env = std::getenv("MDSREPAIR_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, jobs);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::max(1, std::min<int>(hw ? static_cast<int>(hw) : 1, jobs));
}

// Runs fn(i) for i in [0, jobs) on a bounded pool; results land by index so
// report assembly stays ordered no matter the thread count.
template <typename T, typename Fn>
std::vector<T> run_indexed(int jobs, Fn fn) {
  std::vector<T> out(static_cast<size_t>(jobs));
  int workers = thread_count(jobs);
  if (workers <= 1) {
    for (int i = 0; i < jobs; ++i) out[static_cast<size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= jobs) return;
        out[static_cast<size_t>(i)] = fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

std::vector<ExtElem> seeded_rs_message(const RSCode& code, uint64_t message_seed) {
  Rng rng(message_seed);
  std::vector<ExtElem> msg;
  for (int u = 0; u < code.params.k; ++u) {
    ExtElem x = code.E->zero();
    for (uint32_t j = 0; j < code.E->l(); ++j) {
      x.c[j] = static_cast<uint32_t>(rng.below(code.F.q()));
    }
    msg.push_back(std::move(x));
  }
  return msg;
}

ArrayWord seeded_array_message(const ArrayCode& code, uint64_t message_seed) {
  Rng rng(message_seed);
  ArrayWord sys(static_cast<size_t>(code.params.k),
                std::vector<uint32_t>(static_cast<size_t>(code.params.l)));
  for (auto& row : sys) {
    for (auto& v : row) v = static_cast<uint32_t>(rng.below(code.F.q()));
  }
  return sys;
}

RSCode resolve_rs_code(const CommonOpts& o, long long cap) {
  if (!o.code_file.empty()) {
    return rs_code_from_json(parse_json(read_file(o.code_file)));
  }
  CodeParams p(o.s, o.m, o.n, o.k);
  return build_rs_code(p, PrimeField(o.q), o.seed, cap);
}

ArrayCode resolve_array_code(const CommonOpts& o, bool shuffle) {
  if (!o.code_file.empty()) {
    return array_code_from_json(parse_json(read_file(o.code_file)));
  }
  CodeParams p(o.s, o.m, o.n, o.k);
  return build_array_code(p, o.q, o.seed, shuffle);
}

std::string render_rs_audit(const CommonOpts& o, const RSCode& code,
                            const std::vector<NodeBandwidth>& nodes, const RSBounds& bounds) {
  Json report = rs_audit_json(code, nodes, bounds);
  if (o.format == "json") return dump_json(report);
  long long max_b = report.at("max_b").get<long long>();
  const Frac& bound =
      code.params.exact_power ? bounds.weak_upper : bounds.weak_upper_subpower;
  bool meets = report.at("summary").at("all_le_weak_upper").get<bool>() &&
               report.at("summary").at("all_pairs_pass").get<bool>();
  if (o.format == "csv") {
    return audit_csv_header() + "\n" +
           audit_csv_row("rs", code.params, max_b, bound, bounds.cutset,
                         bounds.linear_floor, meets) +
           "\n";
  }
  std::ostringstream t;
  t << "rs audit  s=" << code.params.s << " m=" << code.params.m << " n=" << code.params.n
    << " k=" << code.params.k << " q=" << code.F.q() << " l=" << code.params.l
    << " seed=" << code.seed << "\n";
  for (const NodeBandwidth& nb : nodes) {
    t << "  node " << nb.failed << ": b = " << nb.total
      << (nb.pairs_pass ? "  (all per-pair bounds hold)" : "  (PER-PAIR BOUND VIOLATED)")
      << "\n";
  }
  char floor_buf[32];
  std::snprintf(floor_buf, sizeof(floor_buf), "%.4f", bounds.linear_floor);
  t << "  max b           = " << max_b << "\n";
  t << "  upper bound     = " << bound.ratio_string() << " (" << bound.decimal() << ")\n";
  t << "  cut-set floor   = " << bounds.cutset.ratio_string() << " ("
    << bounds.cutset.decimal() << ")\n";
  t << "  linear floor    = " << floor_buf << "\n";
  t << "  meets bound     = " << (meets ? "true" : "false") << "\n";
  return t.str();
}

int cmd_rs_build(const CommonOpts& o, long long cap) {
  RSCode code = resolve_rs_code(o, cap);
  emit(o, dump_json(rs_code_json(code)));
  return 0;
}

int cmd_rs_encode(const CommonOpts& o, long long cap, uint64_t message_seed) {
  RSCode code = resolve_rs_code(o, cap);
  std::vector<ExtElem> word = rs_encode(code, seeded_rs_message(code, message_seed));
  emit(o, dump_json(rs_word_json(code, word, message_seed)));
  return 0;
}

int cmd_rs_repair(const CommonOpts& o, long long cap, uint64_t message_seed, int fail,
                  const std::string& word_file, const std::string& transcript_file,
                  const std::string& transcript_out) {
  std::optional<RSCode> code_opt;
  std::optional<std::vector<ExtElem>> word;
  if (!word_file.empty()) {
    auto [c, w] = rs_word_from_json(parse_json(read_file(word_file)));
    code_opt = std::move(c);
    word = std::move(w);
  } else {
    code_opt = resolve_rs_code(o, cap);
  }
  RSCode& code = *code_opt;
  if (fail < 0 || fail >= code.params.n) {
    throw OutOfRange("--fail must name a node in [0, n-1]");
  }
  RSRepairScheme scheme = build_repair_scheme(code, fail);

  RSTranscript tr;
  if (!transcript_file.empty()) {
    tr = rs_transcript_from_json(parse_json(read_file(transcript_file)));
    if (tr.failed != fail) throw TranscriptMismatch("transcript is for a different node");
    tr.responses.resize(static_cast<size_t>(code.params.n));
  } else {
    if (!word) word = rs_encode(code, seeded_rs_message(code, message_seed));
    tr = rs_make_transcript(code, scheme, *word);
    if (!transcript_out.empty()) {
      write_file(transcript_out, dump_json(rs_transcript_json(tr)));
    }
  }
  ExtElem repaired = rs_repair_node(code, scheme, tr);

  Json report;
  report["schema"] = "mdsrepair.rs_repair.v1";
  report["version"] = kVersion;
  report["provenance"] = rs_code_json(code);
  report["failed"] = fail;
  report["downloaded_symbols"] = tr.total_symbols;
  report["repaired"] = hex_encode(repaired.c, code.F.q());
  if (word) {
    bool ok = repaired == (*word)[static_cast<size_t>(fail)];
    report["repaired_equals_original"] = ok;
  }
  if (o.format == "text") {
    std::ostringstream t;
    t << "repair of node " << fail << ": downloaded " << tr.total_symbols
      << " base-field symbols\n";
    if (word) {
      t << "repaired == original: "
        << (repaired == (*word)[static_cast<size_t>(fail)] ? "true" : "false") << "\n";
    }
    emit(o, t.str());
  } else {
    emit(o, dump_json(report));
  }
  if (word && !(repaired == (*word)[static_cast<size_t>(fail)])) return 1;
  return 0;
}

int cmd_rs_audit(const CommonOpts& o, long long cap, bool slow) {
  RSCode code = resolve_rs_code(o, cap);
  const CodeParams& p = code.params;
  if (p.l >= 1024 && !slow) {
    long long cells = static_cast<long long>(p.n) * (p.n - 1);
    throw CapExceeded(
        "this audit ranks " + std::to_string(cells) + " matrices of " +
        std::to_string(p.l) + "x" + std::to_string(p.l) +
        " base-field entries (minutes of CPU); pass --slow to proceed");
  }
  std::vector<NodeBandwidth> nodes = run_indexed<NodeBandwidth>(p.n, [&](int i) {
    RSRepairScheme scheme = build_repair_scheme(code, i);
    return rs_measure_bandwidth(code, scheme);
  });
  RSBounds bounds = rs_bounds(p, code.F.q());
  emit(o, render_rs_audit(o, code, nodes, bounds));
  return 0;
}

int cmd_array_build(const CommonOpts& o, bool shuffle) {
  ArrayCode code = resolve_array_code(o, shuffle);
  emit(o, dump_json(array_code_json(code)));
  return 0;
}

int cmd_array_encode(const CommonOpts& o, bool shuffle, uint64_t message_seed) {
  ArrayCode code = resolve_array_code(o, shuffle);
  ArrayWord word = array_encode(code, seeded_array_message(code, message_seed));
  emit(o, dump_json(array_word_json(code, word, message_seed)));
  return 0;
}

int cmd_array_repair(const CommonOpts& o, bool shuffle, uint64_t message_seed, int fail,
                     bool weak, const std::string& word_file,
                     const std::string& transcript_file, const std::string& transcript_out) {
  std::optional<ArrayCode> code_opt;
  std::optional<ArrayWord> word;
  if (!word_file.empty()) {
    auto [c, w] = array_word_from_json(parse_json(read_file(word_file)));
    code_opt = std::move(c);
    word = std::move(w);
  } else {
    code_opt = resolve_array_code(o, shuffle);
  }
  ArrayCode& code = *code_opt;
  if (fail < 0 || fail >= code.params.n) {
    throw OutOfRange("--fail must name a node in [0, n-1]");
  }
  RepairPlan plan = build_repair_plan(code, fail, weak ? PlanKind::weak : PlanKind::strong);

  ArrayTranscript tr;
  if (!transcript_file.empty()) {
    tr = array_transcript_from_json(parse_json(read_file(transcript_file)), plan);
  } else {
    if (!word) word = array_encode(code, seeded_array_message(code, message_seed));
    tr = array_make_transcript(code, *word, plan);
    if (!transcript_out.empty()) {
      write_file(transcript_out, dump_json(array_transcript_json(plan, tr)));
    }
  }
  std::vector<uint32_t> repaired = array_repair_node(code, plan, tr);

  Json report;
  report["schema"] = "mdsrepair.array_repair.v1";
  report["version"] = kVersion;
  report["provenance"] = array_code_json(code);
  report["failed"] = fail;
  report["plan"] = weak ? "weak" : "strong";
  report["downloaded_symbols"] = plan.total_symbols;
  report["repaired"] = hex_encode(repaired, code.F.q());
  if (word) {
    report["repaired_equals_original"] = (repaired == (*word)[static_cast<size_t>(fail)]);
  }
  if (o.format == "text") {
    std::ostringstream t;
    t << "repair of node " << fail << ": downloaded " << plan.total_symbols
      << " base-field symbols (" << (weak ? "weak" : "strong") << " plan)\n";
    if (word) {
      t << "repaired == original: "
        << (repaired == (*word)[static_cast<size_t>(fail)] ? "true" : "false") << "\n";
    }
    emit(o, t.str());
  } else {
    emit(o, dump_json(report));
  }
  if (word && !(repaired == (*word)[static_cast<size_t>(fail)])) return 1;
  return 0;
}

int cmd_array_mds_check(const CommonOpts& o, bool shuffle, int trials) {
  ArrayCode code = resolve_array_code(o, shuffle);
  const CodeParams& p = code.params;

  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(static_cast<size_t>(p.k));
  for (int i = 0; i < p.k; ++i) pick[static_cast<size_t>(i)] = i;
  for (;;) {
    subsets.push_back(pick);
    int i = p.k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == p.n - p.k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < p.k; ++j) {
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }

  std::vector<ArrayWord> words;
  for (int t = 0; t < trials; ++t) {
    words.push_back(array_encode(code, seeded_array_message(code, o.seed + 1000 + t)));
  }
  long long subsets_passed = 0, checks_failed = 0;
  for (const auto& subset : subsets) {
    bool subset_ok = true;
    for (const ArrayWord& word : words) {
      ArrayWord kept;
      for (int i : subset) kept.push_back(word[static_cast<size_t>(i)]);
      if (reconstruct_from_k(code, subset, kept) != word) {
        subset_ok = false;
        ++checks_failed;
      }
    }
    if (subset_ok) ++subsets_passed;
  }

  Json report;
  report["schema"] = "mdsrepair.array_mds_check.v1";
  report["version"] = kVersion;
  report["provenance"] = array_code_json(code);
  report["subsets"] = subsets.size();
  report["trials"] = trials;
  report["subsets_passed"] = subsets_passed;
  report["checks_failed"] = checks_failed;
  report["all_pass"] = (checks_failed == 0);
  if (o.format == "text") {
    std::ostringstream t;
    t << subsets_passed << "/" << subsets.size() << " subsets pass over " << trials
      << " codewords\n";
    emit(o, t.str());
  } else {
    emit(o, dump_json(report));
  }
  return checks_failed == 0 ? 0 : 1;
}

int cmd_array_update_check(const CommonOpts& o, bool shuffle, int samples) {
  ArrayCode code = resolve_array_code(o, shuffle);
  const CodeParams& p = code.params;
  ArrayWord sys = seeded_array_message(code, o.seed + 17);
  ArrayWord word = array_encode(code, sys);

  Rng rng(o.seed + 18);
  long long ok = 0, bad = 0;
  for (int t = 0; t < samples; ++t) {
    int j = static_cast<int>(rng.below(static_cast<uint64_t>(p.k)));
    long long a = static_cast<long long>(rng.below(static_cast<uint64_t>(p.l)));
    uint32_t delta = 1 + static_cast<uint32_t>(rng.below(code.F.q() - 1));
    ArrayWord sys2 = sys;
    auto& cell = sys2[static_cast<size_t>(j)][static_cast<size_t>(a)];
    cell = code.F.add(cell, delta);
    ArrayWord word2 = array_encode(code, sys2);
    // exactly one changed coordinate per parity node, nothing else
    bool good = true;
    for (int i = p.k; i < p.n; ++i) {
      long long changed = 0;
      for (long long c = 0; c < p.l; ++c) {
        if (word2[static_cast<size_t>(i)][static_cast<size_t>(c)] !=
            word[static_cast<size_t>(i)][static_cast<size_t>(c)]) {
          ++changed;
          if (c != a) good = false;
        }
      }
      if (changed != 1) good = false;
    }
    (good ? ok : bad) += 1;
  }

  Json report;
  report["schema"] = "mdsrepair.array_update_check.v1";
  report["version"] = kVersion;
  report["provenance"] = array_code_json(code);
  report["samples"] = samples;
  report["changed_symbols_per_update"] = p.r;
  report["checks_passed"] = ok;
  report["checks_failed"] = bad;
  report["all_pass"] = (bad == 0);
  if (o.format == "text") {
    std::ostringstream t;
    t << "changed symbols per single-symbol update: " << p.r << " (one per parity node); "
      << ok << "/" << samples << " samples pass\n";
    emit(o, t.str());
  } else {
    emit(o, dump_json(report));
  }
  return bad == 0 ? 0 : 1;
}

int cmd_array_audit(const CommonOpts& o, bool shuffle) {
  ArrayCode code = resolve_array_code(o, shuffle);
  const CodeParams& p = code.params;
  std::vector<ArrayNodeAudit> nodes = run_indexed<ArrayNodeAudit>(p.n, [&](int i) {
    RepairPlan plan = build_repair_plan(code, i);
    return ArrayNodeAudit{i, plan.per_group_count, array_measure_bandwidth(code, plan)};
  });
  Json report = array_audit_json(code, nodes);
  if (o.format == "json") {
    emit(o, dump_json(report));
    return 0;
  }
  ArrayBoundValues bv = array_bound_values(p);
  long long max_total = report.at("max_total").get<long long>();
  bool meets = report.at("summary").at("all_le_strong_upper").get<bool>();
  RSBounds ref = rs_bounds(p, code.F.q());
  if (o.format == "csv") {
    emit(o, audit_csv_header() + "\n" +
                audit_csv_row("array", p, max_total, Frac::integer(bv.strong), bv.cutset,
                              ref.linear_floor, meets) +
                "\n");
    return 0;
  }
  std::ostringstream t;
  t << "array audit  s=" << p.s << " m=" << p.m << " n=" << p.n << " k=" << p.k
    << " q=" << code.F.q() << " l=" << p.l << " seed=" << code.seed << "\n";
  for (const ArrayNodeAudit& na : nodes) {
    t << "  node " << na.failed << ": total = " << na.bw.total << " ("
      << na.per_group << " per group" << (na.bw.tight ? ", meets the bound exactly" : "")
      << ")\n";
  }
  t << "  strong upper    = " << bv.strong << "\n";
  t << "  weak upper      = " << bv.weak << "\n";
  t << "  cut-set floor   = " << bv.cutset.ratio_string() << " (" << bv.cutset.decimal()
    << ")\n";
  emit(o, t.str());
  return 0;
}

int cmd_bounds(const CommonOpts& o) {
  CodeParams p(o.s, o.m, o.n, o.k);
  RSBounds rb = rs_bounds(p, o.q);
  ArrayBoundValues ab = array_bound_values(p);
  std::vector<ReferenceRow> rows = reference_rows(p, o.q);

  if (o.format == "csv") {
    std::ostringstream out;
    out << audit_csv_header() << "\n";
    out << audit_csv_row("rs", p, std::nullopt,
                         p.exact_power ? rb.weak_upper : rb.weak_upper_subpower, rb.cutset,
                         rb.linear_floor, true)
        << "\n";
    out << audit_csv_row("array", p, std::nullopt, Frac::integer(ab.strong), ab.cutset,
                         rb.linear_floor, true)
        << "\n";
    emit(o, out.str());
    return 0;
  }

  Json j;
  j["schema"] = "mdsrepair.bounds.v1";
  j["version"] = kVersion;
  j["params"] = params_json(p);
  j["q"] = o.q;
  j["rs"] = rs_bounds_json(rb);
  Json aj;
  aj["cutset"] = frac_json(ab.cutset);
  aj["strong_upper"] = ab.strong;
  aj["weak_upper"] = ab.weak;
  j["array"] = aj;
  Json refs = Json::array();
  for (const ReferenceRow& r : rows) {
    refs.push_back(Json{{"construction", r.name},
                        {"bandwidth", r.bandwidth},
                        {"subpacketization", r.subpacketization},
                        {"meets_cutset", r.meets_cutset}});
  }
  j["reference_constructions"] = refs;

  if (o.format == "json") {
    emit(o, dump_json(j));
    return 0;
  }
  std::ostringstream t;
  t << "bounds for s=" << p.s << " m=" << p.m << " n=" << p.n << " k=" << p.k
    << " (l = " << p.l << ", q = " << o.q << ")\n";
  t << "  cut-set floor        = " << rb.cutset.ratio_string() << " (" << rb.cutset.decimal()
    << ")\n";
  {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", rb.linear_floor);
    t << "  linear-scheme floor  = " << buf << "\n";
  }
  t << "  rs weak upper        = " << rb.weak_upper.ratio_string() << "\n";
  t << "  rs weak upper / s^m  = " << rb.weak_upper_subpower.ratio_string() << "\n";
  if (rb.series_upper) {
    t << "  rs series upper      = " << rb.series_upper->ratio_string() << "\n";
  }
  t << "  rs ratio guarantee   = " << rb.ratio_guarantee.ratio_string() << " ("
    << rb.ratio_guarantee.decimal() << ", asymptotic, at most 2)\n";
  t << "  array strong upper   = " << ab.strong << "\n";
  t << "  array weak upper     = " << ab.weak << "\n";
  t << "reference constructions (closed-form evaluations):\n";
  for (const ReferenceRow& r : rows) {
    t << "  " << r.name << ": bandwidth " << r.bandwidth << ", subpacketization "
      << r.subpacketization << ", meets cut-set: " << r.meets_cutset << "\n";
  }
  emit(o, t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) + " " + kVersion +
               " - repair-bandwidth-efficient MDS codes"};
  app.require_subcommand(1);

  CommonOpts rs_o, ar_o, b_o;
  long long cap = kDefaultSubpacketizationCap;
  uint64_t rs_msg_seed = 0, ar_msg_seed = 0;
  int rs_fail = 0, ar_fail = 0;
  bool rs_slow = false, ar_shuffle = false, ar_weak = false;
  int mds_trials = 20, update_samples = 1000;
  std::string rs_word, rs_tr_in, rs_tr_out, ar_word, ar_tr_in, ar_tr_out;

  CLI::App* rs = app.add_subcommand("rs", "Reed-Solomon code with trace repair");
  rs->require_subcommand(1);
  CLI::App* rs_build = rs->add_subcommand("build", "construct the code and print it");
  CLI::App* rs_encode_c = rs->add_subcommand("encode", "encode a seeded random message");
  CLI::App* rs_repair_c = rs->add_subcommand("repair", "fail one node and repair it");
  CLI::App* rs_audit_c = rs->add_subcommand("audit", "measure bandwidth against every bound");
  for (CLI::App* c : {rs_build, rs_encode_c, rs_repair_c, rs_audit_c}) {
    add_param_flags(c, rs_o, true, 2);
    c->add_option("--cap", cap, "refuse l beyond this value");
  }
  rs_encode_c->add_option("--message-seed", rs_msg_seed, "seed for the random message");
  rs_repair_c->add_option("--message-seed", rs_msg_seed, "seed for the random message");
  rs_repair_c->add_option("--fail", rs_fail, "node to fail")->required();
  rs_repair_c->add_option("--word", rs_word, "codeword file to repair from");
  rs_repair_c->add_option("--transcript", rs_tr_in, "ingest helper responses from a file");
  rs_repair_c->add_option("--transcript-out", rs_tr_out, "write helper responses to a file");
  rs_audit_c->add_flag("--slow", rs_slow, "allow audits at l >= 1024");

  CLI::App* ar = app.add_subcommand("array", "optimal-update MDS array code");
  ar->require_subcommand(1);
  CLI::App* ar_build = ar->add_subcommand("build", "construct the code and print it");
  CLI::App* ar_encode_c = ar->add_subcommand("encode", "encode a seeded random message");
  CLI::App* ar_repair_c = ar->add_subcommand("repair", "fail one node and repair it");
  CLI::App* ar_mds = ar->add_subcommand("mds-check", "reconstruct from every k-subset");
  CLI::App* ar_upd = ar->add_subcommand("update-check", "verify the optimal-update property");
  CLI::App* ar_audit_c = ar->add_subcommand("audit", "measure repair bandwidth per node");
  for (CLI::App* c : {ar_build, ar_encode_c, ar_repair_c, ar_mds, ar_upd, ar_audit_c}) {
    add_param_flags(c, ar_o, true, 41);
    c->add_flag("--shuffle", ar_shuffle, "assign the lambda table from a seeded shuffle");
  }
  ar_encode_c->add_option("--message-seed", ar_msg_seed, "seed for the random message");
  ar_repair_c->add_option("--message-seed", ar_msg_seed, "seed for the random message");
  ar_repair_c->add_option("--fail", ar_fail, "node to fail")->required();
  ar_repair_c->add_flag("--weak", ar_weak, "use the unaggregated near-helper plan");
  ar_repair_c->add_option("--word", ar_word, "codeword file to repair from");
  ar_repair_c->add_option("--transcript", ar_tr_in, "ingest helper responses from a file");
  ar_repair_c->add_option("--transcript-out", ar_tr_out, "write helper responses to a file");
  ar_mds->add_option("--trials", mds_trials, "random codewords per subset sweep");
  ar_upd->add_option("--samples", update_samples, "sampled (node, coordinate) positions");

  CLI::App* bounds_c = app.add_subcommand("bounds", "closed-form bound table for one parameter set");
  add_param_flags(bounds_c, b_o, true, 2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (rs_build->parsed()) return cmd_rs_build(rs_o, cap);
    if (rs_encode_c->parsed()) return cmd_rs_encode(rs_o, cap, rs_msg_seed);
    if (rs_repair_c->parsed()) {
      return cmd_rs_repair(rs_o, cap, rs_msg_seed, rs_fail, rs_word, rs_tr_in, rs_tr_out);
    }
    if (rs_audit_c->parsed()) return cmd_rs_audit(rs_o, cap, rs_slow);
    if (ar_build->parsed()) return cmd_array_build(ar_o, ar_shuffle);
    if (ar_encode_c->parsed()) return cmd_array_encode(ar_o, ar_shuffle, ar_msg_seed);
    if (ar_repair_c->parsed()) {
      return cmd_array_repair(ar_o, ar_shuffle, ar_msg_seed, ar_fail, ar_weak, ar_word,
                              ar_tr_in, ar_tr_out);
    }
    if (ar_mds->parsed()) return cmd_array_mds_check(ar_o, ar_shuffle, mds_trials);
    if (ar_upd->parsed()) return cmd_array_update_check(ar_o, ar_shuffle, update_samples);
    if (ar_audit_c->parsed()) return cmd_array_audit(ar_o, ar_shuffle);
    if (bounds_c->parsed()) return cmd_bounds(b_o);
  } catch (const Error& e) {
    std::cerr << dump_json(error_record(e.kind(), e.what()));
    const std::string& k = e.kind();
    bool usage = k == "degenerate_params" || k == "cap_exceeded" || k == "field_too_small" ||
                 k == "composite_modulus" || k == "out_of_range" || k == "parse_error";
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << dump_json(error_record("internal", e.what()));
    return 1;
  }
  return 0;
}
