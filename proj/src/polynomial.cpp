#include "ckzeta/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ckzeta {

namespace {
const Int kZero = 0;

void trim(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> ascending)
    : c_(std::move(ascending)) {
  trim(c_);
}

IntPolynomial IntPolynomial::constant(Int c) {
  return IntPolynomial(std::vector<Int>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t degree) {
  std::vector<Int> v(degree + 1);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

const Int& IntPolynomial::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

Int IntPolynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc = acc * x + c_[k];
  }
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) - o.coeff(k);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      v[i + j] += c_[i] * o.c_[j];
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> v(c_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = -c_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Int> v(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Int a = c_[k];
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

}  // namespace ckzeta
