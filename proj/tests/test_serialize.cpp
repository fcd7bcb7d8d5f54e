#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdsrepair/rng.hpp"
#include "mdsrepair/serialize.hpp"

using namespace mdsrepair;

namespace {

std::vector<ExtElem> seeded_message(const RSCode& code, uint64_t seed) {
  Rng rng(seed);
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

ArrayWord seeded_systematic(const ArrayCode& code, uint64_t seed) {
  Rng rng(seed);
  ArrayWord sys(static_cast<size_t>(code.params.k),
                std::vector<uint32_t>(static_cast<size_t>(code.params.l)));
  for (auto& row : sys) {
    for (auto& v : row) v = static_cast<uint32_t>(rng.below(code.F.q()));
  }
  return sys;
}

}  // namespace

TEST_CASE("hex payloads round-trip for every field width") {
  Rng rng(1);
  for (uint32_t q : {2u, 3u, 17u, 41u, 257u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<uint32_t> v(1 + rng.below(40));
      for (auto& x : v) x = static_cast<uint32_t>(rng.below(q));
      CHECK(hex_decode(hex_encode(v, q), q, v.size()) == v);
    }
  }
  CHECK_THROWS_AS(hex_decode("zz", 2, 2), ParseError);
  CHECK_THROWS_AS(hex_decode("5", 3, 1), ParseError);  // 5 >= q
  CHECK_THROWS_AS(hex_decode("01", 2, 3), ParseError);
}

TEST_CASE("codeword files round-trip exactly") {
  RSCode code = build_rs_code(CodeParams(2, 1, 4, 2), PrimeField(2), 0);
  auto word = rs_encode(code, seeded_message(code, 7));

  Json j = rs_word_json(code, word, 7);
  auto [code2, word2] = rs_word_from_json(j);
  CHECK(code2.E->modulus() == code.E->modulus());
  CHECK(word2 == word);
  CHECK(dump_json(rs_word_json(code2, word2, 7)) == dump_json(j));

  ArrayCode ac = build_array_code(CodeParams(2, 1, 5, 3), 11, 3);
  ArrayWord aw = array_encode(ac, seeded_systematic(ac, 9));
  Json aj = array_word_json(ac, aw, 9);
  auto [ac2, aw2] = array_word_from_json(aj);
  CHECK(ac2.lambda == ac.lambda);
  CHECK(aw2 == aw);
  CHECK(dump_json(array_word_json(ac2, aw2, 9)) == dump_json(aj));
}

TEST_CASE("transcripts survive the wire format") {
  SUBCASE("reed-solomon") {
    RSCode code = build_rs_code(CodeParams(2, 1, 4, 2), PrimeField(2), 0);
    auto word = rs_encode(code, seeded_message(code, 11));
    RSRepairScheme scheme = build_repair_scheme(code, 2);
    RSTranscript tr = rs_make_transcript(code, scheme, word);
    RSTranscript back = rs_transcript_from_json(rs_transcript_json(tr));
    back.responses.resize(static_cast<size_t>(code.params.n));
    CHECK(rs_repair_node(code, scheme, back) == word[2]);

    Json broken = rs_transcript_json(tr);
    broken["total_symbols"] = 1;
    CHECK_THROWS_AS(rs_transcript_from_json(broken), ParseError);
  }

  SUBCASE("array, both plan kinds") {
    ArrayCode code = build_array_code(CodeParams(2, 2, 6, 2), 29, 0);
    ArrayWord word = array_encode(code, seeded_systematic(code, 13));
    for (PlanKind kind : {PlanKind::strong, PlanKind::weak}) {
      RepairPlan plan = build_repair_plan(code, 1, kind);
      ArrayTranscript tr = array_make_transcript(code, word, plan);
      Json j = array_transcript_json(plan, tr);
      ArrayTranscript back = array_transcript_from_json(j, plan);
      CHECK(array_repair_node(code, plan, back) == word[1]);
    }
    RepairPlan plan = build_repair_plan(code, 1);
    ArrayTranscript tr = array_make_transcript(code, word, plan);
    Json j = array_transcript_json(plan, tr);
    j["entries"].erase(0);
    CHECK_THROWS_AS(array_transcript_from_json(j, plan), ResponseMismatch);
  }
}

TEST_CASE("audit reports carry provenance and verdicts") {
  RSCode code = build_rs_code(CodeParams(2, 1, 4, 2), PrimeField(2), 0);
  std::vector<NodeBandwidth> nodes;
  for (int i = 0; i < 4; ++i) {
    nodes.push_back(rs_measure_bandwidth(code, build_repair_scheme(code, i)));
  }
  RSBounds bounds = rs_bounds(code.params, 2);
  Json report = rs_audit_json(code, nodes, bounds);

  CHECK(report.at("provenance").at("field").contains("h"));
  CHECK(report.at("provenance").at("params").at("l") == 16);
  CHECK(report.at("max_b") == 34);
  CHECK(report.at("summary").at("all_pairs_pass") == true);
  CHECK(report.at("summary").at("all_le_weak_upper") == true);
  CHECK(report.at("summary").at("max_b_ge_cutset") == true);
  CHECK(report.at("summary").at("max_b_ge_linear_floor") == true);
  CHECK(report.at("bounds").at("cutset").at("num") == 24);

  SUBCASE("csv mirrors the comparison-table columns") {
    CHECK(audit_csv_header() ==
          "construction,s,m,n,k,l,measured_max_bandwidth,bound,cutset,gw,meets_bound");
    std::string row = audit_csv_row("rs", code.params, 34, bounds.weak_upper, bounds.cutset,
                                    bounds.linear_floor, true);
    CHECK(row.substr(0, 16) == "rs,2,1,4,2,16,34");
  }
}

TEST_CASE("identical inputs produce byte-identical artifacts") {
  auto produce = [] {
    RSCode code = build_rs_code(CodeParams(2, 2, 5, 1), PrimeField(2), 4);
    auto word = rs_encode(code, seeded_message(code, 21));
    RSRepairScheme scheme = build_repair_scheme(code, 3);
    RSTranscript tr = rs_make_transcript(code, scheme, word);
    std::vector<NodeBandwidth> nodes;
    for (int i = 0; i < code.params.n; ++i) {
      nodes.push_back(rs_measure_bandwidth(code, build_repair_scheme(code, i)));
    }
    std::string out = dump_json(rs_word_json(code, word, 21));
    out += dump_json(rs_transcript_json(tr));
    out += dump_json(rs_audit_json(code, nodes, rs_bounds(code.params, 2)));

    ArrayCode ac = build_array_code(CodeParams(2, 2, 6, 2), 29, 4, true);
    ArrayWord aw = array_encode(ac, seeded_systematic(ac, 21));
    RepairPlan plan = build_repair_plan(ac, 2);
    out += dump_json(array_word_json(ac, aw, 21));
    out += dump_json(array_transcript_json(plan, array_make_transcript(ac, aw, plan)));
    return out;
  };
  CHECK(produce() == produce());
}

TEST_CASE("error records are machine readable") {
  Json e = error_record("field_too_small", "need q >= 40");
  CHECK(e.at("error").at("kind") == "field_too_small");
  CHECK_THROWS_AS(parse_json("{nope"), ParseError);
}
