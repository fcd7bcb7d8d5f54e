#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdsrepair/field.hpp"

namespace mdsrepair {

// Dense row-major matrix over GF(q). Rows are packed 64 entries per word
// when q == 2, so elimination and row combination run on whole words; any
// other prime keeps one uint32_t per entry. Elimination is deterministic:
// the pivot is always the first row holding a nonzero in the leftmost
// unresolved column.
class Mat {
 public:
  Mat() : q_(2), rows_(0), cols_(0), wpr_(0) {}
  Mat(const PrimeField& F, size_t rows, size_t cols);
  static Mat identity(const PrimeField& F, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t q() const { return q_; }
  bool packed() const { return q_ == 2; }

  uint32_t get(size_t r, size_t c) const;
  void set(size_t r, size_t c, uint32_t v);
  void set_row(size_t r, const std::vector<uint32_t>& v);
  std::vector<uint32_t> row(size_t r) const;
  bool row_is_zero(size_t r) const;

  void swap_rows(size_t a, size_t b);
  void scale_row(size_t r, uint32_t factor);
  // row[dst] += factor * row[src]
  void add_scaled_row(size_t dst, size_t src, uint32_t factor);

  size_t rank() const;                 // runs on a copy
  std::optional<Mat> inverse() const;  // square input; nullopt when singular
  Mat transpose() const;
  Mat mul(const Mat& other) const;
  // coeffs^T * M, i.e. the linear combination of rows weighted by coeffs.
  std::vector<uint32_t> combine(const std::vector<uint32_t>& coeffs) const;

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  PrimeField field() const { return PrimeField(q_); }
  size_t eliminate();  // in-place forward elimination, returns rank

  uint32_t q_;
  size_t rows_, cols_;
  size_t wpr_;                  // words per row (packed layout)
  std::vector<uint64_t> bits_;  // q == 2
  std::vector<uint32_t> vals_;  // q > 2
};

// Incrementally maintained row space over GF(q). Every inserted vector is
// reported either as independent (it joins the kept set) or as a linear
// combination of the vectors kept so far; the combination coefficients are
// returned in keep order. Backs the greedy query selection and the
// expansion-coefficient bookkeeping of the repair schemes.
class SpanTracker {
 public:
  SpanTracker(const PrimeField& F, size_t cols);

  // Returns true when v was independent of the kept set (v is then kept).
  // coeffs, when non-null, receives the expression of v over the kept
  // vectors; for a newly kept vector that is the unit vector on itself.
  bool insert(const std::vector<uint32_t>& v, std::vector<uint32_t>* coeffs);

  size_t kept() const { return kept_; }
  size_t cols() const { return cols_; }

 private:
  struct Row {
    std::vector<uint32_t> vec;    // reduced row, pivot normalized to 1
    std::vector<uint32_t> comb;   // expression of vec over kept originals
    std::vector<uint64_t> vbits;  // packed forms (q == 2)
    std::vector<uint64_t> cbits;
    size_t pivot;
  };

  bool packed() const { return F_.q() == 2; }
  bool insert_packed(const std::vector<uint32_t>& v, std::vector<uint32_t>* coeffs);

  PrimeField F_;
  size_t cols_;
  size_t vwords_ = 0;  // words per reduced row (packed layout)
  size_t cwords_ = 0;  // words per combination row (packed layout)
  size_t kept_ = 0;
  std::vector<Row> rows_;
};

// Solves the square system A x = b over GF(q); throws SingularSystem.
std::vector<uint32_t> solve_dense(const PrimeField& F,
                                  std::vector<std::vector<uint32_t>> A,
                                  std::vector<uint32_t> b);

}  // namespace mdsrepair
