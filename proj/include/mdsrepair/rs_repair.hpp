#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "mdsrepair/bounds.hpp"
#include "mdsrepair/digits.hpp"
#include "mdsrepair/ext_field.hpp"

namespace mdsrepair {

inline constexpr long long kDefaultSubpacketizationCap = 4096;

// Reed-Solomon code over E = F(beta) with evaluation points beta^(s^t).
// Immutable after construction; the field is shared so schemes and audits
// for different failed nodes can run concurrently against one code.
struct RSCode {
  CodeParams params;
  PrimeField F;
  std::shared_ptr<const ExtField> E;
  std::vector<long long> point_exps;  // s^t for t in [0, n-1]
  std::vector<ExtElem> points;        // alpha_t = beta^(s^t), pairwise distinct
  uint64_t seed = 0;                  // provenance only; the modulus is authoritative
};

RSCode build_rs_code(const CodeParams& p, const PrimeField& F, uint64_t seed,
                     long long cap = kDefaultSubpacketizationCap);
// Rebuilds a code from an explicit modulus (e.g. from a codeword file); no
// search is run, so artifacts round-trip exactly.
RSCode build_rs_code_with_modulus(const CodeParams& p, const PrimeField& F,
                                  std::vector<uint32_t> h, uint64_t seed = 0);

// Node t stores f(alpha_t) for the polynomial with the given k coefficients.
std::vector<ExtElem> rs_encode(const RSCode& code, const std::vector<ExtElem>& message);

// Coefficients nu_t = prod_{j != t} (alpha_t - alpha_j)^-1 making the
// nu-scaled evaluations of degree < n-k polynomials the dual code.
std::vector<ExtElem> nu_coeffs(const RSCode& code);

// Query bookkeeping for one helper: which dual symbols were kept as the
// query set, and how every dual symbol expands over them.
struct HelperQueries {
  std::vector<int> kept;  // enumeration indices h whose dual symbols form the query set
  Mat expansion;          // |polys| x |kept|: dual symbol h over the kept queries
};

// Everything needed to repair one failed node: the repair polynomials
// beta^a x^z indexed by (a, z), the dual codeword table, per-helper query
// sets with expansion coefficients, and the reconstruction basis.
struct RSRepairScheme {
  int failed;
  std::vector<std::pair<long long, int>> polys;  // (a, z), lexicographic
  std::vector<ExtElem> nu;
  std::vector<Mat> dual_columns;  // per node: row h = coeffs of nu_t * f_h(alpha_t)
  std::vector<HelperQueries> queries;  // per node; entry at `failed` is unused
  std::vector<ExtElem> mu;  // trace-dual of the dual symbols at the failed node

  ExtElem dual_codeword(size_t h, size_t t) const;
  std::vector<ExtElem> query_elements(int helper) const;
};

RSRepairScheme build_repair_scheme(const RSCode& code, int failed);

// Helper responses: for each surviving node, the traces tr(gamma * f(alpha))
// over its query set, in query order.
struct RSTranscript {
  int failed;
  std::vector<std::vector<uint32_t>> responses;  // per node; empty at failed
  long long total_symbols;
};

RSTranscript rs_make_transcript(const RSCode& code, const RSRepairScheme& scheme,
                                const std::vector<ExtElem>& codeword);
ExtElem rs_repair_node(const RSCode& code, const RSRepairScheme& scheme,
                       const RSTranscript& transcript);
// Simulation convenience: erases codeword[failed] and runs the full
// transcript + reconstruction path.
ExtElem rs_repair_from_codeword(const RSCode& code, const RSRepairScheme& scheme,
                                const std::vector<ExtElem>& codeword);

// Measured bandwidth for one failed node: per-helper dimensions with every
// applicable per-pair bound, and the summed total b_i.
struct PairCheck {
  std::string name;
  long long bound;
  bool pass;
};
struct PerHelperDim {
  int t;
  long long dim;
  std::vector<PairCheck> checks;
};
struct NodeBandwidth {
  int failed;
  std::vector<PerHelperDim> per_helper;
  long long total;  // b_i
  bool pairs_pass;  // every per-pair bound held
};

NodeBandwidth rs_measure_bandwidth(const RSCode& code, const RSRepairScheme& scheme);

}  // namespace mdsrepair
