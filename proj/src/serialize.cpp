#include "mdsrepair/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mdsrepair/version.hpp"

namespace mdsrepair {
namespace {

int hex_width(uint32_t q) {
  int w = 0;
  uint32_t v = q - 1;
  do {
    ++w;
    v >>= 4;
  } while (v);
  return w;
}

std::string format_double(double v, int places = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, v);
  return buf;
}

void expect_schema(const Json& j, const std::string& schema) {
  if (!j.contains("schema") || j.at("schema") != schema) {
    throw ParseError("expected schema \"" + schema + "\"");
  }
}

}  // namespace

std::string hex_encode(const std::vector<uint32_t>& v, uint32_t q) {
  int w = hex_width(q);
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(v.size() * static_cast<size_t>(w));
  for (uint32_t x : v) {
    for (int d = w; d-- > 0;) out.push_back(digits[(x >> (4 * d)) & 0xF]);
  }
  return out;
}

std::vector<uint32_t> hex_decode(const std::string& s, uint32_t q, size_t expect) {
  int w = hex_width(q);
  if (s.size() != expect * static_cast<size_t>(w)) {
    throw ParseError("hex payload has wrong length");
  }
  std::vector<uint32_t> out(expect, 0);
  for (size_t i = 0; i < expect; ++i) {
    uint32_t x = 0;
    for (int d = 0; d < w; ++d) {
      char c = s[i * static_cast<size_t>(w) + static_cast<size_t>(d)];
      uint32_t nib;
      if (c >= '0' && c <= '9') {
        nib = static_cast<uint32_t>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        nib = static_cast<uint32_t>(c - 'a' + 10);
      } else {
        throw ParseError("invalid hex digit");
      }
      x = (x << 4) | nib;
    }
    if (x >= q) throw ParseError("scalar exceeds the field modulus");
    out[i] = x;
  }
  return out;
}

Json frac_json(const Frac& f) {
  return Json{{"num", f.num}, {"den", f.den}, {"decimal", f.decimal()}};
}

Json field_descriptor_json(const ExtField& E) {
  return Json{{"q", E.base().q()}, {"l", E.l()}, {"h", E.modulus()}};
}

Json params_json(const CodeParams& p) {
  return Json{{"s", p.s}, {"m", p.m}, {"n", p.n}, {"k", p.k},
              {"r", p.r}, {"l", p.l}, {"exact_power", p.exact_power}};
}

CodeParams params_from_json(const Json& j) {
  return CodeParams(j.at("s").get<int>(), j.at("m").get<int>(), j.at("n").get<int>(),
                    j.at("k").get<int>());
}

Json rs_code_json(const RSCode& code) {
  Json j;
  j["schema"] = "mdsrepair.rs_code.v1";
  j["version"] = kVersion;
  j["params"] = params_json(code.params);
  j["field"] = field_descriptor_json(*code.E);
  j["seed"] = code.seed;
  return j;
}

RSCode rs_code_from_json(const Json& j) {
  expect_schema(j, "mdsrepair.rs_code.v1");
  CodeParams p = params_from_json(j.at("params"));
  const Json& f = j.at("field");
  PrimeField F(f.at("q").get<uint32_t>());
  return build_rs_code_with_modulus(p, F, f.at("h").get<std::vector<uint32_t>>(),
                                    j.at("seed").get<uint64_t>());
}

Json rs_word_json(const RSCode& code, const std::vector<ExtElem>& nodes,
                  std::optional<uint64_t> message_seed) {
  Json j = rs_code_json(code);
  j["schema"] = "mdsrepair.rs_word.v1";
  if (message_seed) {
    j["message_seed"] = *message_seed;
  } else {
    j["message_seed"] = nullptr;
  }
  Json arr = Json::array();
  for (const ExtElem& x : nodes) arr.push_back(hex_encode(x.c, code.F.q()));
  j["nodes"] = arr;
  return j;
}

std::pair<RSCode, std::vector<ExtElem>> rs_word_from_json(const Json& j) {
  expect_schema(j, "mdsrepair.rs_word.v1");
  Json cj = j;
  cj["schema"] = "mdsrepair.rs_code.v1";
  RSCode code = rs_code_from_json(cj);
  std::vector<ExtElem> nodes;
  for (const auto& h : j.at("nodes")) {
    nodes.push_back(code.E->from_coeffs(
        hex_decode(h.get<std::string>(), code.F.q(), static_cast<size_t>(code.params.l))));
  }
  if (static_cast<int>(nodes.size()) != code.params.n) {
    throw ParseError("codeword file must carry n node vectors");
  }
  return {std::move(code), std::move(nodes)};
}

Json array_code_json(const ArrayCode& code) {
  Json j;
  j["schema"] = "mdsrepair.array_code.v1";
  j["version"] = kVersion;
  j["params"] = params_json(code.params);
  j["q"] = code.F.q();
  j["lambda"] = code.lambda;
  j["seed"] = code.seed;
  j["shuffled"] = code.shuffled;
  return j;
}

ArrayCode array_code_from_json(const Json& j) {
  expect_schema(j, "mdsrepair.array_code.v1");
  CodeParams p = params_from_json(j.at("params"));
  ArrayCode code = array_code_with_lambda(
      p, j.at("q").get<uint32_t>(), j.at("lambda").get<std::vector<std::vector<uint32_t>>>(),
      j.at("seed").get<uint64_t>());
  code.shuffled = j.at("shuffled").get<bool>();
  return code;
}

Json array_word_json(const ArrayCode& code, const ArrayWord& word,
                     std::optional<uint64_t> message_seed) {
  Json j = array_code_json(code);
  j["schema"] = "mdsrepair.array_word.v1";
  if (message_seed) {
    j["message_seed"] = *message_seed;
  } else {
    j["message_seed"] = nullptr;
  }
  Json arr = Json::array();
  for (const auto& row : word) arr.push_back(hex_encode(row, code.F.q()));
  j["nodes"] = arr;
  return j;
}

std::pair<ArrayCode, ArrayWord> array_word_from_json(const Json& j) {
  expect_schema(j, "mdsrepair.array_word.v1");
  Json cj = j;
  cj["schema"] = "mdsrepair.array_code.v1";
  ArrayCode code = array_code_from_json(cj);
  ArrayWord word;
  for (const auto& h : j.at("nodes")) {
    word.push_back(hex_decode(h.get<std::string>(), code.F.q(),
                              static_cast<size_t>(code.params.l)));
  }
  if (static_cast<int>(word.size()) != code.params.n) {
    throw ParseError("codeword file must carry n node vectors");
  }
  return {std::move(code), std::move(word)};
}

Json rs_transcript_json(const RSTranscript& tr) {
  Json j;
  j["schema"] = "mdsrepair.rs_transcript.v1";
  j["failed"] = tr.failed;
  Json resp = Json::array();
  for (size_t t = 0; t < tr.responses.size(); ++t) {
    if (static_cast<int>(t) == tr.failed) continue;
    resp.push_back(Json{{"helper", t}, {"values", tr.responses[t]}});
  }
  j["responses"] = resp;
  j["total_symbols"] = tr.total_symbols;
  return j;
}

RSTranscript rs_transcript_from_json(const Json& j) {
  expect_schema(j, "mdsrepair.rs_transcript.v1");
  RSTranscript tr;
  tr.failed = j.at("failed").get<int>();
  tr.total_symbols = 0;
  int max_helper = tr.failed;
  for (const auto& r : j.at("responses")) {
    max_helper = std::max(max_helper, r.at("helper").get<int>());
  }
  tr.responses.resize(static_cast<size_t>(max_helper) + 1);
  for (const auto& r : j.at("responses")) {
    int helper = r.at("helper").get<int>();
    if (helper == tr.failed) throw ParseError("transcript carries values for the failed node");
    tr.responses[static_cast<size_t>(helper)] = r.at("values").get<std::vector<uint32_t>>();
    tr.total_symbols += static_cast<long long>(tr.responses[static_cast<size_t>(helper)].size());
  }
  if (j.at("total_symbols").get<long long>() != tr.total_symbols) {
    throw ParseError("total_symbols disagrees with the response payload");
  }
  return tr;
}

Json array_transcript_json(const RepairPlan& plan, const ArrayTranscript& tr) {
  Json j;
  j["schema"] = "mdsrepair.array_transcript.v1";
  j["failed"] = tr.failed;
  Json entries = Json::array();
  for (size_t gi = 0; gi < plan.groups.size(); ++gi) {
    const RepairGroup& g = plan.groups[gi];
    for (size_t di = 0; di < g.descriptors.size(); ++di) {
      const RepairDescriptor& d = g.descriptors[di];
      Json e;
      e["helper"] = d.helper;
      e["group"] = g.rep;
      if (!d.b.empty()) {
        e["b"] = d.b;
      } else if (d.coords.size() == 1 && plan.kind == PlanKind::weak) {
        e["coord"] = d.coords.front();
      }
      e["value"] = tr.values.at(gi).at(di);
      entries.push_back(std::move(e));
    }
  }
  j["entries"] = entries;
  return j;
}

ArrayTranscript array_transcript_from_json(const Json& j, const RepairPlan& plan) {
  expect_schema(j, "mdsrepair.array_transcript.v1");
  ArrayTranscript tr;
  tr.failed = j.at("failed").get<int>();
  tr.values.assign(plan.groups.size(), {});
  for (size_t gi = 0; gi < plan.groups.size(); ++gi) {
    tr.values[gi].assign(plan.groups[gi].descriptors.size(), 0);
  }
  std::vector<std::vector<bool>> seen(tr.values.size());
  for (size_t gi = 0; gi < tr.values.size(); ++gi) seen[gi].assign(tr.values[gi].size(), false);

  for (const auto& e : j.at("entries")) {
    int helper = e.at("helper").get<int>();
    long long group = e.at("group").get<long long>();
    size_t gi = plan.groups.size();
    for (size_t g = 0; g < plan.groups.size(); ++g) {
      if (plan.groups[g].rep == group) {
        gi = g;
        break;
      }
    }
    if (gi == plan.groups.size()) throw ResponseMismatch("transcript entry for unknown group");
    const auto& descriptors = plan.groups[gi].descriptors;
    size_t di = descriptors.size();
    for (size_t d = 0; d < descriptors.size(); ++d) {
      if (descriptors[d].helper != helper) continue;
      if (e.contains("b")) {
        if (descriptors[d].b == e.at("b").get<std::vector<int>>()) {
          di = d;
          break;
        }
      } else if (e.contains("coord")) {
        if (descriptors[d].coords.size() == 1 &&
            descriptors[d].coords.front() == e.at("coord").get<long long>()) {
          di = d;
          break;
        }
      } else if (descriptors[d].b.empty()) {
        di = d;
        break;
      }
    }
    if (di == descriptors.size()) {
      throw ResponseMismatch("transcript entry does not match any plan descriptor");
    }
    tr.values[gi][di] = e.at("value").get<uint32_t>();
    seen[gi][di] = true;
  }
  for (const auto& group_seen : seen) {
    for (bool s : group_seen) {
      if (!s) throw ResponseMismatch("transcript is missing a plan descriptor");
    }
  }
  return tr;
}

Json rs_bounds_json(const RSBounds& b) {
  Json j;
  j["cutset"] = frac_json(b.cutset);
  j["linear_floor"] = format_double(b.linear_floor);
  j["linear_floor_note"] =
      "derived for full-length codes; reported here as a reference line";
  j["weak_upper"] = frac_json(b.weak_upper);
  j["weak_upper_subpower"] = frac_json(b.weak_upper_subpower);
  j["series_upper"] = b.series_upper ? frac_json(*b.series_upper) : Json(nullptr);
  j["ratio_guarantee"] = frac_json(b.ratio_guarantee);
  return j;
}

Json rs_audit_json(const RSCode& code, const std::vector<NodeBandwidth>& nodes,
                   const RSBounds& bounds) {
  Json j;
  j["schema"] = "mdsrepair.rs_audit.v1";
  j["version"] = kVersion;
  Json prov;
  prov["construction"] = "rs";
  prov["params"] = params_json(code.params);
  prov["field"] = field_descriptor_json(*code.E);
  prov["seed"] = code.seed;
  j["provenance"] = prov;
  j["bounds"] = rs_bounds_json(bounds);

  long long max_b = 0;
  bool all_pairs = true;
  bool all_weak = true;
  Json narr = Json::array();
  const Frac& weak = code.params.exact_power ? bounds.weak_upper : bounds.weak_upper_subpower;
  for (const NodeBandwidth& nb : nodes) {
    Json nj;
    nj["failed"] = nb.failed;
    nj["b"] = nb.total;
    Json per = Json::array();
    for (const PerHelperDim& ph : nb.per_helper) {
      Json pj;
      pj["helper"] = ph.t;
      pj["dim"] = ph.dim;
      Json checks = Json::array();
      for (const PairCheck& c : ph.checks) {
        checks.push_back(Json{{"bound", c.name}, {"value", c.bound}, {"pass", c.pass}});
      }
      pj["checks"] = checks;
      per.push_back(std::move(pj));
    }
    nj["per_helper"] = per;
    nj["pairs_pass"] = nb.pairs_pass;
    bool le_weak = int_le_frac(nb.total, weak);
    nj["le_weak_upper"] = le_weak;
    narr.push_back(std::move(nj));
    max_b = std::max(max_b, nb.total);
    all_pairs = all_pairs && nb.pairs_pass;
    all_weak = all_weak && le_weak;
  }
  j["nodes"] = narr;
  j["max_b"] = max_b;
  Json summary;
  summary["all_pairs_pass"] = all_pairs;
  summary["all_le_weak_upper"] = all_weak;
  summary["max_b_ge_cutset"] = int_ge_frac(max_b, bounds.cutset);
  summary["max_b_ge_linear_floor"] = static_cast<double>(max_b) >= bounds.linear_floor;
  j["summary"] = summary;
  return j;
}

Json array_audit_json(const ArrayCode& code, const std::vector<ArrayNodeAudit>& nodes) {
  Json j;
  j["schema"] = "mdsrepair.array_audit.v1";
  j["version"] = kVersion;
  Json prov;
  prov["construction"] = "array";
  prov["params"] = params_json(code.params);
  prov["q"] = code.F.q();
  prov["lambda"] = code.lambda;
  prov["seed"] = code.seed;
  prov["shuffled"] = code.shuffled;
  j["provenance"] = prov;

  ArrayBoundValues bv = array_bound_values(code.params);
  Json bounds;
  bounds["cutset"] = frac_json(bv.cutset);
  bounds["strong_upper"] = bv.strong;
  bounds["weak_upper"] = bv.weak;
  j["bounds"] = bounds;

  long long max_total = 0;
  bool all_le = true;
  Json narr = Json::array();
  for (const ArrayNodeAudit& na : nodes) {
    Json nj;
    nj["failed"] = na.failed;
    nj["total"] = na.bw.total;
    nj["per_group"] = na.per_group;
    nj["tight"] = na.bw.tight;
    bool le = na.bw.total <= na.bw.bound_strong;
    nj["le_strong_upper"] = le;
    narr.push_back(std::move(nj));
    max_total = std::max(max_total, na.bw.total);
    all_le = all_le && le;
  }
  j["nodes"] = narr;
  j["max_total"] = max_total;
  Json summary;
  summary["all_le_strong_upper"] = all_le;
  summary["max_ge_cutset"] = int_ge_frac(max_total, bv.cutset);
  j["summary"] = summary;
  return j;
}

std::string audit_csv_header() {
  return "construction,s,m,n,k,l,measured_max_bandwidth,bound,cutset,gw,meets_bound";
}

std::string audit_csv_row(const std::string& construction, const CodeParams& p,
                          std::optional<long long> measured_max, const Frac& bound,
                          const Frac& cutset, double gw, bool meets_bound) {
  std::ostringstream out;
  out << construction << ',' << p.s << ',' << p.m << ',' << p.n << ',' << p.k << ','
      << p.l << ',';
  if (measured_max) {
    out << *measured_max;
  }
  out << ',' << bound.ratio_string() << ',' << cutset.ratio_string() << ','
      << format_double(gw) << ',' << (meets_bound ? "true" : "false");
  return out.str();
}

Json error_record(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

}  // namespace mdsrepair
