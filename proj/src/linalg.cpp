#include "mdsrepair/linalg.hpp"

#include <algorithm>
#include <cstring>

namespace mdsrepair {

Mat::Mat(const PrimeField& F, size_t rows, size_t cols)
    : q_(F.q()), rows_(rows), cols_(cols) {
  if (packed()) {
    wpr_ = (cols + 63) / 64;
    bits_.assign(rows * wpr_, 0);
  } else {
    wpr_ = 0;
    vals_.assign(rows * cols, 0);
  }
}

Mat Mat::identity(const PrimeField& F, size_t n) {
  Mat m(F, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

uint32_t Mat::get(size_t r, size_t c) const {
  if (packed()) return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  return vals_[r * cols_ + c];
}

void Mat::set(size_t r, size_t c, uint32_t v) {
  if (packed()) {
    uint64_t& w = bits_[r * wpr_ + (c >> 6)];
    uint64_t bit = uint64_t(1) << (c & 63);
    w = (v & 1u) ? (w | bit) : (w & ~bit);
  } else {
    vals_[r * cols_ + c] = v % q_;
  }
}

void Mat::set_row(size_t r, const std::vector<uint32_t>& v) {
  for (size_t c = 0; c < cols_; ++c) set(r, c, c < v.size() ? v[c] : 0);
}

std::vector<uint32_t> Mat::row(size_t r) const {
  std::vector<uint32_t> out(cols_);
  for (size_t c = 0; c < cols_; ++c) out[c] = get(r, c);
  return out;
}

bool Mat::row_is_zero(size_t r) const {
  if (packed()) {
    for (size_t w = 0; w < wpr_; ++w) {
      if (bits_[r * wpr_ + w]) return false;
    }
    return true;
  }
  for (size_t c = 0; c < cols_; ++c) {
    if (vals_[r * cols_ + c]) return false;
  }
  return true;
}

void Mat::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  if (packed()) {
    for (size_t w = 0; w < wpr_; ++w) std::swap(bits_[a * wpr_ + w], bits_[b * wpr_ + w]);
  } else {
    for (size_t c = 0; c < cols_; ++c) std::swap(vals_[a * cols_ + c], vals_[b * cols_ + c]);
  }
}

void Mat::scale_row(size_t r, uint32_t factor) {
  if (packed()) {
    if (factor % 2 == 0) {
      std::fill_n(bits_.begin() + r * wpr_, wpr_, 0);
    }
    return;
  }
  PrimeField F = field();
  for (size_t c = 0; c < cols_; ++c) {
    uint32_t& v = vals_[r * cols_ + c];
    v = F.mul(v, factor);
  }
}

void Mat::add_scaled_row(size_t dst, size_t src, uint32_t factor) {
  if (packed()) {
    if (factor & 1u) {
      uint64_t* d = bits_.data() + dst * wpr_;
      const uint64_t* s = bits_.data() + src * wpr_;
      for (size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
    }
    return;
  }
  PrimeField F = field();
  factor %= q_;
  if (factor == 0) return;
  uint32_t* d = vals_.data() + dst * cols_;
  const uint32_t* s = vals_.data() + src * cols_;
  for (size_t c = 0; c < cols_; ++c) d[c] = F.add(d[c], F.mul(factor, s[c]));
}

size_t Mat::eliminate() {
  PrimeField F = field();
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t pivot = rows_;
    for (size_t i = r; i < rows_; ++i) {
      if (get(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows_) continue;
    swap_rows(r, pivot);
    uint32_t pv = get(r, c);
    if (pv != 1) scale_row(r, F.inv(pv));
    for (size_t i = r + 1; i < rows_; ++i) {
      uint32_t v = get(i, c);
      if (v) add_scaled_row(i, r, F.neg(v));
    }
    ++r;
  }
  return r;
}

size_t Mat::rank() const {
  Mat copy = *this;
  return copy.eliminate();
}

Mat Mat::transpose() const {
  Mat out(field(), cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      uint32_t v = get(r, c);
      if (v) out.set(c, r, v);
    }
  }
  return out;
}

Mat Mat::mul(const Mat& other) const {
  PrimeField F = field();
  Mat out(F, rows_, other.cols_);
  if (packed() && other.packed()) {
    for (size_t r = 0; r < rows_; ++r) {
      uint64_t* dst = out.bits_.data() + r * out.wpr_;
      for (size_t w = 0; w < wpr_; ++w) {
        uint64_t word = bits_[r * wpr_ + w];
        while (word) {
          int bit = __builtin_ctzll(word);
          word &= word - 1;
          size_t k = w * 64 + static_cast<size_t>(bit);
          const uint64_t* src = other.bits_.data() + k * other.wpr_;
          for (size_t ow = 0; ow < other.wpr_; ++ow) dst[ow] ^= src[ow];
        }
      }
    }
    return out;
  }
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t k = 0; k < cols_; ++k) {
      uint32_t v = get(r, k);
      if (!v) continue;
      for (size_t c = 0; c < other.cols_; ++c) {
        out.set(r, c, F.add(out.get(r, c), F.mul(v, other.get(k, c))));
      }
    }
  }
  return out;
}

std::vector<uint32_t> Mat::combine(const std::vector<uint32_t>& coeffs) const {
  PrimeField F = field();
  if (packed()) {
    std::vector<uint64_t> acc(wpr_, 0);
    for (size_t r = 0; r < rows_ && r < coeffs.size(); ++r) {
      if (coeffs[r] & 1u) {
        const uint64_t* src = bits_.data() + r * wpr_;
        for (size_t w = 0; w < wpr_; ++w) acc[w] ^= src[w];
      }
    }
    std::vector<uint32_t> out(cols_);
    for (size_t c = 0; c < cols_; ++c) out[c] = (acc[c >> 6] >> (c & 63)) & 1u;
    return out;
  }
  std::vector<uint32_t> out(cols_, 0);
  for (size_t r = 0; r < rows_ && r < coeffs.size(); ++r) {
    uint32_t f = coeffs[r] % q_;
    if (!f) continue;
    const uint32_t* src = vals_.data() + r * cols_;
    for (size_t c = 0; c < cols_; ++c) out[c] = F.add(out[c], F.mul(f, src[c]));
  }
  return out;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  PrimeField F = field();
  size_t n = rows_;
  // Gauss-Jordan on [this | I] stored as two matrices sharing row operations.
  Mat a = *this;
  Mat inv = identity(F, n);
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = n;
    for (size_t i = c; i < n; ++i) {
      if (a.get(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) return std::nullopt;
    a.swap_rows(c, pivot);
    inv.swap_rows(c, pivot);
    uint32_t pv = a.get(c, c);
    if (pv != 1) {
      uint32_t f = F.inv(pv);
      a.scale_row(c, f);
      inv.scale_row(c, f);
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      uint32_t v = a.get(i, c);
      if (v) {
        uint32_t f = F.neg(v);
        a.add_scaled_row(i, c, f);
        inv.add_scaled_row(i, c, f);
      }
    }
  }
  return inv;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.q_ != b.q_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.packed()) return a.bits_ == b.bits_;
  return a.vals_ == b.vals_;
}

SpanTracker::SpanTracker(const PrimeField& F, size_t cols) : F_(F), cols_(cols) {
  vwords_ = (cols + 63) / 64;
  cwords_ = (cols + 63) / 64;  // kept count never exceeds cols
}

bool SpanTracker::insert_packed(const std::vector<uint32_t>& v, std::vector<uint32_t>* coeffs) {
  std::vector<uint64_t> x(vwords_, 0);
  for (size_t c = 0; c < cols_ && c < v.size(); ++c) {
    if (v[c] & 1u) x[c >> 6] |= uint64_t(1) << (c & 63);
  }
  std::vector<uint64_t> expr(cwords_, 0);

  for (const Row& row : rows_) {
    if ((x[row.pivot >> 6] >> (row.pivot & 63)) & 1u) {
      for (size_t w = 0; w < vwords_; ++w) x[w] ^= row.vbits[w];
      for (size_t w = 0; w < cwords_; ++w) expr[w] ^= row.cbits[w];
    }
  }

  size_t pivot = cols_;
  for (size_t w = 0; w < vwords_; ++w) {
    if (x[w]) {
      pivot = w * 64 + static_cast<size_t>(__builtin_ctzll(x[w]));
      break;
    }
  }
  if (pivot >= cols_) {
    if (coeffs) {
      coeffs->assign(kept_, 0);
      for (size_t u = 0; u < kept_; ++u) (*coeffs)[u] = (expr[u >> 6] >> (u & 63)) & 1u;
    }
    return false;
  }

  size_t new_index = kept_;
  Row nr;
  nr.pivot = pivot;
  nr.vbits = std::move(x);
  nr.cbits = std::move(expr);
  nr.cbits[new_index >> 6] ^= uint64_t(1) << (new_index & 63);

  for (Row& row : rows_) {
    if ((row.vbits[pivot >> 6] >> (pivot & 63)) & 1u) {
      for (size_t w = 0; w < vwords_; ++w) row.vbits[w] ^= nr.vbits[w];
      for (size_t w = 0; w < cwords_; ++w) row.cbits[w] ^= nr.cbits[w];
    }
  }
  rows_.push_back(std::move(nr));
  ++kept_;
  if (coeffs) {
    coeffs->assign(kept_, 0);
    (*coeffs)[new_index] = 1;
  }
  return true;
}

bool SpanTracker::insert(const std::vector<uint32_t>& v, std::vector<uint32_t>* coeffs) {
  if (packed()) return insert_packed(v, coeffs);
  std::vector<uint32_t> x(cols_, 0);
  for (size_t c = 0; c < cols_ && c < v.size(); ++c) x[c] = v[c] % F_.q();
  std::vector<uint32_t> expr(kept_, 0);

  for (const Row& row : rows_) {
    uint32_t f = x[row.pivot];
    if (!f) continue;
    // x -= f * row.vec ; expr += f * row.comb
    for (size_t c = 0; c < cols_; ++c) x[c] = F_.sub(x[c], F_.mul(f, row.vec[c]));
    for (size_t u = 0; u < row.comb.size(); ++u) {
      expr[u] = F_.add(expr[u], F_.mul(f, row.comb[u]));
    }
  }

  size_t pivot = cols_;
  for (size_t c = 0; c < cols_; ++c) {
    if (x[c]) {
      pivot = c;
      break;
    }
  }
  if (pivot == cols_) {
    if (coeffs) *coeffs = std::move(expr);
    return false;
  }

  // v joins the kept set; normalize the residual into a reduced row whose
  // combination over kept originals is pinv * (e_new - sum f_p * comb_p).
  size_t new_index = kept_;
  uint32_t pinv = F_.inv(x[pivot]);
  Row nr;
  nr.pivot = pivot;
  nr.vec.resize(cols_);
  for (size_t c = 0; c < cols_; ++c) nr.vec[c] = F_.mul(pinv, x[c]);
  nr.comb.assign(new_index + 1, 0);
  for (size_t u = 0; u < expr.size(); ++u) nr.comb[u] = F_.mul(pinv, F_.neg(expr[u]));
  nr.comb[new_index] = pinv;

  // keep the tracker in reduced form: clear the new pivot column everywhere
  for (Row& row : rows_) {
    uint32_t f = row.vec[pivot];
    if (!f) continue;
    for (size_t c = 0; c < cols_; ++c) row.vec[c] = F_.sub(row.vec[c], F_.mul(f, nr.vec[c]));
    row.comb.resize(new_index + 1, 0);
    for (size_t u = 0; u <= new_index; ++u) {
      row.comb[u] = F_.sub(row.comb[u], F_.mul(f, nr.comb[u]));
    }
  }
  rows_.push_back(std::move(nr));
  ++kept_;
  if (coeffs) {
    coeffs->assign(kept_, 0);
    (*coeffs)[new_index] = 1;
  }
  return true;
}

std::vector<uint32_t> solve_dense(const PrimeField& F,
                                  std::vector<std::vector<uint32_t>> A,
                                  std::vector<uint32_t> b) {
  size_t n = A.size();
  if (b.size() != n) throw ShapeMismatch("solve_dense: rhs size");
  for (auto& row : A) {
    if (row.size() != n) throw ShapeMismatch("solve_dense: matrix not square");
  }
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = n;
    for (size_t r = c; r < n; ++r) {
      if (A[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw SingularSystem("singular system");
    std::swap(A[c], A[pivot]);
    std::swap(b[c], b[pivot]);
    uint32_t inv = F.inv(A[c][c]);
    for (size_t j = c; j < n; ++j) A[c][j] = F.mul(A[c][j], inv);
    b[c] = F.mul(b[c], inv);
    for (size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      uint32_t f = A[r][c];
      if (!f) continue;
      for (size_t j = c; j < n; ++j) A[r][j] = F.sub(A[r][j], F.mul(f, A[c][j]));
      b[r] = F.sub(b[r], F.mul(f, b[c]));
    }
  }
  return b;
}

}  // namespace mdsrepair
