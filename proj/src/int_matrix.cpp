#include "ckzeta/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace ckzeta {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  std::size_t cols = rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("rows of unequal length");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::block_diagonal(std::span<const IntMatrix> blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  IntMatrix m(r, c);
  std::size_t i0 = 0, j0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m(i0 + i, j0 + j) = b(i, j);
    }
    i0 += b.rows();
    j0 += b.cols();
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("shape mismatch in matrix addition");
  }
  IntMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("shape mismatch in matrix subtraction");
  }
  IntMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) {
    throw std::invalid_argument("shape mismatch in matrix product");
  }
  IntMatrix m(rows_, o.cols_);
  Int t;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        t = aik * o(k, j);
        m(i, j) += t;
      }
    }
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) {
    std::swap((*this)(i, k), (*this)(j, k));
  }
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) {
    std::swap((*this)(k, i), (*this)(k, j));
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Int& f) {
  for (std::size_t k = 0; k < cols_; ++k) {
    (*this)(dst, k) += f * (*this)(src, k);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Int& f) {
  for (std::size_t k = 0; k < rows_; ++k) {
    (*this)(k, dst) += f * (*this)(k, src);
  }
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

namespace {

IntMatrix parse_text_form(const std::string& input) {
  std::istringstream is(input);
  long long rows = -1, cols = -1;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix header must be \"rows cols\"");
  }
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string tok;
  for (long long i = 0; i < rows; ++i) {
    for (long long j = 0; j < cols; ++j) {
      if (!(is >> tok)) {
        throw std::invalid_argument("matrix has fewer entries than declared");
      }
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          parse_int(tok);
    }
  }
  if (is >> tok) {
    throw std::invalid_argument("matrix has more entries than declared");
  }
  return m;
}

IntMatrix parse_json_form(const std::string& input) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw std::invalid_argument("matrix JSON must be an array of arrays");
  }
  std::vector<std::vector<Int>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) {
      throw std::invalid_argument("matrix JSON must be an array of arrays");
    }
    std::vector<Int> r;
    for (const auto& cell : row) {
      if (cell.is_number_integer()) {
        r.emplace_back(static_cast<long>(cell.get<long long>()));
      } else if (cell.is_string()) {
        r.push_back(parse_int(cell.get<std::string>()));
      } else {
        throw std::invalid_argument(
            "matrix entries must be integers or decimal strings");
      }
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return IntMatrix();
  return IntMatrix::from_rows(rows);
}

}  // namespace

IntMatrix IntMatrix::parse(const std::string& input) {
  for (char c : input) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '[') return parse_json_form(input);
    break;
  }
  return parse_text_form(input);
}

}  // namespace ckzeta
