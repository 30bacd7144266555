#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ckzeta/numeric.hpp"

namespace ckzeta {

// Dense matrix over Z, row-major, arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;  // 0 x 0
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix block_diagonal(std::span<const IntMatrix> blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  bool is_zero() const;

  // Elementary row/column operations, used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& f);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& f);

  // Text form: "rows cols" on the first line, then the entries row by row.
  std::string to_text() const;

  // Accepts the text form above or a JSON array of arrays whose entries are
  // integers or decimal strings.  Throws std::invalid_argument.
  static IntMatrix parse(const std::string& input);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

}  // namespace ckzeta
