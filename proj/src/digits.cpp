#include "mdsrepair/digits.hpp"

#include <algorithm>
#include <string>

namespace mdsrepair {
namespace {

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (1LL << 62) / base) throw OutOfRange("radix power overflows");
    out *= base;
  }
  return out;
}

void check_node(int node, const Radix& R) {
  if (node < 0 || node >= R.n) {
    throw OutOfRange("node index " + std::to_string(node) + " outside [0, " +
                     std::to_string(R.n - 1) + "]");
  }
}

void check_coord(long long a, const Radix& R) {
  if (a < 0 || a >= R.l) {
    throw OutOfRange("index " + std::to_string(a) + " outside [0, l-1]");
  }
}

void check_digits(const std::vector<int>& w, size_t expect, const Radix& R) {
  if (w.size() != expect) {
    throw OutOfRange("digit tuple has length " + std::to_string(w.size()) +
                     ", expected " + std::to_string(expect));
  }
  for (int d : w) {
    if (d < 0 || d >= R.s) throw OutOfRange("digit outside [0, s-1]");
  }
}

}  // namespace

Radix::Radix(int s_, int m_, int n_) : s(s_), m(m_), n(n_) {
  if (s < 2) throw DegenerateParams("radix must be at least 2");
  if (m < 1) throw DegenerateParams("window size must be at least 1");
  if (n < 1) throw DegenerateParams("need at least one node");
  l = ipow(s, m + n - 1);
}

long long Radix::window_count() const { return ipow(s, m); }

DigitVec expand(long long a, const Radix& R) {
  check_coord(a, R);
  DigitVec d(R.width());
  for (int j = 0; j < R.width(); ++j) {
    d[j] = static_cast<int>(a % R.s);
    a /= R.s;
  }
  return d;
}

long long fold(const DigitVec& d, const Radix& R) {
  check_digits(d, static_cast<size_t>(R.width()), R);
  long long a = 0;
  for (int j = R.width(); j-- > 0;) a = a * R.s + d[j];
  return a;
}

int window(long long a, int node, const Radix& R) {
  check_coord(a, R);
  check_node(node, R);
  long long scaled = a;
  for (int j = 0; j < node; ++j) scaled /= R.s;
  int out = 0;
  long long weight = 1;
  for (int j = 0; j < R.m; ++j) {
    out += static_cast<int>(scaled % R.s) * static_cast<int>(weight);
    scaled /= R.s;
    weight *= R.s;
  }
  return out;
}

long long substitute(long long a, int node, const std::vector<int>& w, const Radix& R) {
  check_coord(a, R);
  check_node(node, R);
  check_digits(w, static_cast<size_t>(R.m), R);
  DigitVec d = expand(a, R);
  for (int j = 0; j < R.m; ++j) {
    d[node + j] = w[static_cast<size_t>(R.m - 1 - j)];  // w is high digit first
  }
  return fold(d, R);
}

std::vector<long long> group_set(long long a, int node, const Radix& R) {
  long long count = R.window_count();
  std::vector<long long> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<int> w(static_cast<size_t>(R.m), 0);
  for (long long v = 0; v < count; ++v) {
    long long x = v;
    for (int j = R.m; j-- > 0;) {  // digits of v, high first
      w[static_cast<size_t>(R.m - 1 - j)] = static_cast<int>((x / ipow(R.s, j)) % R.s);
    }
    out.push_back(substitute(a, node, w, R));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> si_set(int node, const Radix& R) {
  check_node(node, R);
  std::vector<long long> out;
  out.reserve(static_cast<size_t>(R.l / R.window_count()));
  for (long long a = 0; a < R.l; ++a) {
    if (window(a, node, R) == 0) out.push_back(a);
  }
  return out;
}

std::vector<long long> t_set(long long a, int helper, int failed,
                             const std::vector<int>& b, const Radix& R) {
  check_node(helper, R);
  check_node(failed, R);
  int w = helper > failed ? helper - failed : failed - helper;
  if (w <= 0 || w >= R.m) {
    throw BadDistance("helper distance " + std::to_string(w) + " outside (0, m)");
  }
  check_digits(b, static_cast<size_t>(R.m - w), R);

  std::vector<long long> out;
  long long free_count = ipow(R.s, w);
  std::vector<int> full(static_cast<size_t>(R.m));
  for (long long v = 0; v < free_count; ++v) {
    std::vector<int> d(static_cast<size_t>(w));
    long long x = v;
    for (int j = w; j-- > 0;) {
      d[static_cast<size_t>(w - 1 - j)] = static_cast<int>((x / ipow(R.s, j)) % R.s);
    }
    if (helper > failed) {
      // b pins the top m-w digits of the window, d ranges over the bottom w
      std::copy(b.begin(), b.end(), full.begin());
      std::copy(d.begin(), d.end(), full.begin() + (R.m - w));
    } else {
      // d ranges over the top w digits, b pins the bottom m-w
      std::copy(d.begin(), d.end(), full.begin());
      std::copy(b.begin(), b.end(), full.begin() + w);
    }
    out.push_back(substitute(a, failed, full, R));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int common_window(const std::vector<long long>& coords, int helper, const Radix& R) {
  int value = window(coords.front(), helper, R);
  for (long long c : coords) {
    if (window(c, helper, R) != value) {
      throw NotConstant("helper window varies across the repair group");
    }
  }
  return value;
}

}  // namespace

int helper_index(long long a, int helper, int failed, const Radix& R) {
  check_node(helper, R);
  check_node(failed, R);
  int dist = helper > failed ? helper - failed : failed - helper;
  if (dist < R.m) {
    throw BadDistance("far helper index needs distance >= m; got " + std::to_string(dist));
  }
  return common_window(group_set(a, failed, R), helper, R);
}

int helper_index(long long a, int helper, int failed, const std::vector<int>& b,
                 const Radix& R) {
  return common_window(t_set(a, helper, failed, b, R), helper, R);
}

std::vector<std::vector<int>> xy_sets(int d, char which, int s) {
  if (d < 1) throw OutOfRange("tuple length must be positive");
  if (s < 2) throw DegenerateParams("radix must be at least 2");
  if (which != 'X' && which != 'Y') throw OutOfRange("set selector must be 'X' or 'Y'");
  std::vector<int> excluded(static_cast<size_t>(d), which == 'X' ? s - 1 : 0);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(d), 0);
  for (;;) {
    if (cur != excluded) out.push_back(cur);
    int j = d;
    while (j-- > 0) {
      if (++cur[static_cast<size_t>(j)] < s) break;
      cur[static_cast<size_t>(j)] = 0;
    }
    if (j < 0) break;
  }
  return out;
}

CodeParams::CodeParams(int s_, int m_, int n_, int k_) : s(s_), m(m_), n(n_), k(k_) {
  Radix R(s, m, n);  // validates s, m, n and computes l
  l = R.l;
  if (k < 1 || k >= n) {
    throw DegenerateParams("dimension k must satisfy 1 <= k < n");
  }
  r = n - k;
  long long win = R.window_count();
  if (win > r) {
    throw DegenerateParams("s^m = " + std::to_string(win) +
                           " exceeds the parity count n-k = " + std::to_string(r));
  }
  exact_power = (win == r);
}

}  // namespace mdsrepair
