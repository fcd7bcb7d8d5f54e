#pragma once

#include <optional>
#include <vector>

#include "mdsrepair/errors.hpp"

namespace mdsrepair {

// Geometry of the s-ary index bookkeeping: digit strings of length m+n-1
// over radix s cover the coordinate/exponent range [0, l-1], l = s^(m+n-1).
// Indexing is uniformly 0-based: digit position j weights s^j and node i
// reads the m digits at positions i..i+m-1.
struct Radix {
  int s;
  int m;
  int n;
  long long l;

  Radix(int s, int m, int n);
  int width() const { return m + n - 1; }
  long long window_count() const;  // s^m
};

// Digit vector, position j holding the coefficient of s^j.
using DigitVec = std::vector<int>;

DigitVec expand(long long a, const Radix& R);      // OutOfRange off [0, l-1]
long long fold(const DigitVec& d, const Radix& R); // exact inverse of expand

// The integer read from the m digits of a at positions node..node+m-1.
int window(long long a, int node, const Radix& R);

// Replaces the m digits of a at node's window with w, given high digit
// first: w[0] lands at position node+m-1, w[m-1] at position node.
long long substitute(long long a, int node, const std::vector<int>& w, const Radix& R);

// All s^m integers agreeing with a outside node's window, ascending.
std::vector<long long> group_set(long long a, int node, const Radix& R);

// All a in [0, l-1] whose window at node is zero, ascending; size l / s^m.
std::vector<long long> si_set(int node, const Radix& R);

// The subset of group_set(a, failed) a helper at distance 0 < |helper -
// failed| < m aggregates for one fixed tuple b (high digit first, length
// m - |helper - failed|): for a helper above the failed node b pins the top
// digits of the window and the bottom ones range, and symmetrically below.
std::vector<long long> t_set(long long a, int helper, int failed,
                             const std::vector<int>& b, const Radix& R);

// The common window value the helper applies across group_set(a, failed)
// (far helpers, distance >= m) or across t_set(a, helper, failed, b) (near
// helpers). Constancy over the set is asserted, never assumed.
int helper_index(long long a, int helper, int failed, const Radix& R);
int helper_index(long long a, int helper, int failed, const std::vector<int>& b,
                 const Radix& R);

// All radix-s tuples of length d minus one distinguished tuple: 'X' removes
// the all-(s-1) tuple, 'Y' removes the all-zero tuple. Lexicographic order.
std::vector<std::vector<int>> xy_sets(int d, char which, int s);

// Validated parameters shared by both code constructions. Construction
// requires 1 <= k < n and s^m <= n-k (the window must fit the parity count).
struct CodeParams {
  int s, m, n, k, r;
  long long l;
  bool exact_power;  // s^m == r

  CodeParams(int s, int m, int n, int k);
  Radix radix() const { return Radix(s, m, n); }
  long long window_count() const { return radix().window_count(); }
};

}  // namespace mdsrepair
