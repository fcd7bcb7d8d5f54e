#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mdsrepair/array_code.hpp"
#include "mdsrepair/rs_repair.hpp"

namespace mdsrepair {

// ordered_json keeps insertion order, so identical inputs dump to identical
// bytes; every report and artifact goes through it.
using Json = nlohmann::ordered_json;

// Coefficient vectors serialize as fixed-width hex, lowest coefficient
// first; the width is the number of hex digits of q-1.
std::string hex_encode(const std::vector<uint32_t>& v, uint32_t q);
std::vector<uint32_t> hex_decode(const std::string& s, uint32_t q, size_t expect);

Json frac_json(const Frac& f);

// Field descriptor record: {q, l, h} with h little-endian.
Json field_descriptor_json(const ExtField& E);
Json params_json(const CodeParams& p);
CodeParams params_from_json(const Json& j);

// Codeword and code files. Loading rebuilds codes from the stored modulus /
// lambda table, never from a fresh search, so artifacts round-trip exactly.
Json rs_code_json(const RSCode& code);
RSCode rs_code_from_json(const Json& j);
Json rs_word_json(const RSCode& code, const std::vector<ExtElem>& nodes,
                  std::optional<uint64_t> message_seed);
std::pair<RSCode, std::vector<ExtElem>> rs_word_from_json(const Json& j);

Json array_code_json(const ArrayCode& code);
ArrayCode array_code_from_json(const Json& j);
Json array_word_json(const ArrayCode& code, const ArrayWord& word,
                     std::optional<uint64_t> message_seed);
std::pair<ArrayCode, ArrayWord> array_word_from_json(const Json& j);

Json rs_transcript_json(const RSTranscript& tr);
RSTranscript rs_transcript_from_json(const Json& j);

// Array transcripts flatten to one entry per transferred scalar: {helper,
// group, b?|coord?, value}; parsing realigns them against the plan.
Json array_transcript_json(const RepairPlan& plan, const ArrayTranscript& tr);
ArrayTranscript array_transcript_from_json(const Json& j, const RepairPlan& plan);

// Audit reports.
Json rs_bounds_json(const RSBounds& b);
Json rs_audit_json(const RSCode& code, const std::vector<NodeBandwidth>& nodes,
                   const RSBounds& bounds);

struct ArrayNodeAudit {
  int failed;
  long long per_group;
  ArrayBandwidth bw;
};
Json array_audit_json(const ArrayCode& code, const std::vector<ArrayNodeAudit>& nodes);

// One comparison-table line: construction, s, m, n, k, l,
// measured_max_bandwidth, bound, cutset, gw, meets_bound.
std::string audit_csv_header();
std::string audit_csv_row(const std::string& construction, const CodeParams& p,
                          std::optional<long long> measured_max, const Frac& bound,
                          const Frac& cutset, double gw, bool meets_bound);

Json error_record(const std::string& kind, const std::string& message);

std::string dump_json(const Json& j);  // canonical 2-space dump + newline
Json parse_json(const std::string& text);  // ParseError on malformed input
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mdsrepair
