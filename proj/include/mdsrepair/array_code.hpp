#pragma once

#include <cstdint>
#include <vector>

#include "mdsrepair/bounds.hpp"
#include "mdsrepair/digits.hpp"
#include "mdsrepair/field.hpp"

namespace mdsrepair {

// Optimal-update MDS array code over GF(q): node i applies the scalar
// lambda[i][window(a, i)] at coordinate a, and a codeword satisfies, for
// every coordinate a and power t in [0, r-1],
//   sum_i lambda[i][window(a, i)]^t * c[i][a] == 0.
// The diagonal action is never materialized as a matrix.
struct ArrayCode {
  CodeParams params;
  PrimeField F;
  std::vector<std::vector<uint32_t>> lambda;  // n x s^m, pairwise distinct
  uint64_t seed = 0;
  bool shuffled = false;
};

// Canonical assignment lambda[i][j] = i*s^m + j (requires q >= s^m * n, so
// all entries are distinct by construction); shuffle mode draws a seeded
// permutation of the field instead, for robustness testing.
ArrayCode build_array_code(const CodeParams& p, uint32_t q, uint64_t seed = 0,
                           bool shuffle = false);
ArrayCode array_code_with_lambda(const CodeParams& p, uint32_t q,
                                 std::vector<std::vector<uint32_t>> lambda,
                                 uint64_t seed = 0);

using ArrayWord = std::vector<std::vector<uint32_t>>;  // n rows of l scalars

// Solves the r parity coordinates per position from the k systematic rows.
ArrayWord array_encode(const ArrayCode& code, const ArrayWord& systematic);
bool parity_check(const ArrayCode& code, const ArrayWord& word);

// Rebuilds the whole codeword from any k nodes (the MDS property).
ArrayWord reconstruct_from_k(const ArrayCode& code, const std::vector<int>& nodes,
                             const ArrayWord& symbols);

// The r*k diagonal encoding matrices, each returned as its l diagonal
// scalars: parity u is sum_j diag(out[u][j]) * systematic_j.
std::vector<std::vector<std::vector<uint32_t>>> encoding_matrices(const ArrayCode& code);

// One helper transfer: the sum over `coords` of that helper's symbols,
// weighted in the reconstruction by lambda[helper][lam_index]^t. Far helpers
// aggregate a whole group through one descriptor (empty b); near helpers
// carry one descriptor per pinned tuple b. The weak plan instead ships each
// near coordinate unaggregated (singleton coords).
struct RepairDescriptor {
  int helper;
  std::vector<int> b;  // pinned window digits, high first; empty for far helpers
  std::vector<long long> coords;
  int lam_index;
};

struct RepairGroup {
  long long rep;  // group representative: window at the failed node is zero
  std::vector<RepairDescriptor> descriptors;
};

enum class PlanKind { strong, weak };

struct RepairPlan {
  int failed;
  PlanKind kind;
  std::vector<RepairGroup> groups;  // ascending representatives
  long long per_group_count;        // descriptors per group (equal across groups)
  long long total_symbols;          // per_group_count * group count
};

RepairPlan build_repair_plan(const ArrayCode& code, int failed,
                             PlanKind kind = PlanKind::strong);

// Transcript values aligned one-to-one with the plan's descriptors.
struct ArrayTranscript {
  int failed;
  std::vector<std::vector<uint32_t>> values;  // per group, per descriptor
};

std::vector<uint32_t> helper_respond(const ArrayCode& code, const ArrayWord& word,
                                     const RepairPlan& plan, size_t group_index,
                                     int helper);
ArrayTranscript array_make_transcript(const ArrayCode& code, const ArrayWord& word,
                                      const RepairPlan& plan);

// Per group, solves the s^m x s^m system in the failed node's lambda row
// (rows t in [0, s^m - 1] of the parity equations) and reassembles the node.
std::vector<uint32_t> array_repair_node(const ArrayCode& code, const RepairPlan& plan,
                                        const ArrayTranscript& transcript);

struct ArrayBandwidth {
  long long total;
  long long bound_strong;
  long long bound_weak;
  Frac cutset;
  bool tight;  // total == bound_strong
};

ArrayBandwidth array_measure_bandwidth(const ArrayCode& code, const RepairPlan& plan);

}  // namespace mdsrepair
