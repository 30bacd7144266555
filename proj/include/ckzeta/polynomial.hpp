#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ckzeta/numeric.hpp"

namespace ckzeta {

// Univariate polynomial over Z, coefficients stored ascending.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<Int> ascending);

  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(std::size_t k) const;
  const std::vector<Int>& coefficients() const { return c_; }

  Int operator()(const Int& x) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const = default;

  // Coefficients in reverse order; maps p(s) to s^deg * p(1/s).
  IntPolynomial reversed() const;

  std::string to_string(const std::string& var = "s") const;

 private:
  std::vector<Int> c_;
};

}  // namespace ckzeta
