#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdsrepair/digits.hpp"
#include "mdsrepair/fraction.hpp"

namespace mdsrepair {

// Closed-form reference values for the Reed-Solomon construction. All are
// exact rationals except the linear-scheme floor, which is irrational by
// nature and reported as a double.
struct RSBounds {
  Frac cutset;            // (n-1) l / (n-k)
  double linear_floor;    // lower bound for any linear repair scheme of an
                          // (n,k,l) MDS code; derived for full-length codes,
                          // reported here as a reference line
  Frac weak_upper;        // (n-1 + 2(m-1)s^m - 2m + 6) l / (n-k); an upper
                          // bound when s^m == n-k
  Frac weak_upper_subpower;       // same numerator over s^m; always an upper bound
  std::optional<Frac> series_upper;  // sharper series-form numerator over s^m;
                                     // well-defined only for m >= 3
  Frac ratio_guarantee;   // (n-k) / s^m, the asymptotic ratio to the cut-set
                          // bound; at most 2 by construction
};

RSBounds rs_bounds(const CodeParams& p, uint32_t q);

// Bandwidth accounting for the array construction; the denominators divide
// l so both upper bounds are integers.
struct ArrayBoundValues {
  Frac cutset;
  long long strong;  // (n-1 + 2 sum_{v=1}^{m-1}(s^v - 1)) l / s^m
  long long weak;    // (n-1 + 2(m-1)s^m - 2m + 2) l / s^m
};

ArrayBoundValues array_bound_values(const CodeParams& p);

// Per-(failed, helper) dimension bounds used by the RS audit. Names are
// stable identifiers that appear in reports.
struct PairBound {
  std::string name;
  long long value;
};

// All bounds applicable to the pair (failed = i, helper = t), i != t.
std::vector<PairBound> pair_dimension_bounds(const CodeParams& p, int i, int t);

// Closed-form rows for the comparison table: published constructions
// evaluated at the given parameters (formula evaluations only).
struct ReferenceRow {
  std::string name;
  std::string bandwidth;
  std::string subpacketization;
  std::string meets_cutset;
};

std::vector<ReferenceRow> reference_rows(const CodeParams& p, uint32_t q);

}  // namespace mdsrepair
