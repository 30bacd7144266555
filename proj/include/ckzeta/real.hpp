#pragma once

#include <cstdint>
#include <string>

#include <mpfr.h>

#include "ckzeta/numeric.hpp"

namespace ckzeta {

// Minimum precision for partial-product evaluation.
inline constexpr mpfr_prec_t kMinProductPrecision = 100;

// Floating-point number of fixed binary precision, round-to-nearest
// everywhere.  Binary operations require operands of equal precision so
// results never depend on evaluation order surprises.
class Real {
 public:
  explicit Real(mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real of(const Rat& v, mpfr_prec_t prec);
  static Real of(const Int& v, mpfr_prec_t prec);
  static Real of(std::uint64_t v, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;

  // base^exponent via mpfr_pow.
  static Real power(const Real& base, const Real& exponent);

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  int compare(const Real& o) const { return mpfr_cmp(v_, o.v_); }

  // Scientific notation with the given number of significant digits;
  // deterministic for a fixed value and precision.
  std::string to_string(unsigned sig_digits = 30) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
  mpfr_prec_t prec_;
};

// The rational rendered to sig_digits significant decimal digits
// (scientific notation), computed at 256-bit intermediate precision.
std::string decimal_string(const Rat& r, unsigned sig_digits = 30);

}  // namespace ckzeta
