#pragma once

#include <cstdint>
#include <vector>

#include "ckzeta/polynomial.hpp"
#include "ckzeta/real.hpp"
#include "ckzeta/varieties.hpp"

namespace ckzeta {

// Truncated power series over Q.  The truncation order is part of the
// value: coefficients are tracked for u^0 .. u^order and operations on
// mixed orders truncate to the smaller one.
class PowerSeriesQ {
 public:
  PowerSeriesQ() : c_(1) {}  // zero series known to order 0
  // order = coefficients.size() - 1; the list must be nonempty.
  explicit PowerSeriesQ(std::vector<Rat> coefficients);

  static PowerSeriesQ zero(std::size_t order);
  static PowerSeriesQ one(std::size_t order);
  static PowerSeriesQ from_poly(const IntPolynomial& p, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Rat& coeff(std::size_t k) const;
  const std::vector<Rat>& coefficients() const { return c_; }

  PowerSeriesQ truncate(std::size_t order) const;

  PowerSeriesQ operator+(const PowerSeriesQ& o) const;
  PowerSeriesQ operator-(const PowerSeriesQ& o) const;
  PowerSeriesQ operator*(const PowerSeriesQ& o) const;
  PowerSeriesQ operator-() const;

  // Multiplicative inverse to the same order; constant term must be
  // nonzero.
  PowerSeriesQ inverse() const;

  bool operator==(const PowerSeriesQ& o) const = default;

 private:
  std::vector<Rat> c_;  // ascending, size = order + 1
};

// exp(sum_{m=1..k} counts[m-1] u^m / m), truncated at order k.
PowerSeriesQ zeta_series(const std::vector<Int>& counts);

// Formal logarithm of a series with constant term 1, to the same order.
PowerSeriesQ series_log(const PowerSeriesQ& s);

// P/Q in lowest terms: integer coefficients with trivial common content,
// Q(0) > 0.  When the solved coefficients are integral this means
// Q(0) = 1.
struct RationalFunction {
  IntPolynomial num;
  IntPolynomial den;
};

// Pade-style reconstruction of s as P/Q with deg P <= deg_num and
// deg Q <= deg_den.  The denominator comes from a Hankel linear solve
// with Q(0) = 1; the result must re-expand to s through its full
// truncation order.  Throws underdetermined_error when the order is too
// low or the system has free directions, no_solution_error when the
// system is inconsistent or the re-expansion check fails.
RationalFunction rational_reconstruct(const PowerSeriesQ& s,
                                      std::size_t deg_num,
                                      std::size_t deg_den);

// Local factors at a good prime: Z_p(u) = P1(u) / (P0(u) P2(u)).
struct LocalZeta {
  std::uint64_t p = 0;
  IntPolynomial P0;  // 1 - u
  IntPolynomial P1;  // 1 - a_p u + p u^2
  IntPolynomial P2;  // 1 - p u
};

LocalZeta local_factors(const EllipticCurve& e, std::uint64_t p);

// N_m = p^m + 1 - t_m for m = 1..m_max, where t_0 = 2, t_1 = a_p and
// t_m = a_p t_{m-1} - p t_{m-2}.
std::vector<Int> lefschetz_counts(const LocalZeta& lz, std::size_t m_max);

struct EulerProductPart {
  Rat s;
  std::uint64_t bound = 0;
  mpfr_prec_t precision = 0;
  Real value;
  std::vector<std::uint64_t> skipped;  // bad primes <= bound, ascending

  explicit EulerProductPart(mpfr_prec_t prec)
      : precision(prec), value(prec) {}
};

// prod_{good p <= bound} P1(p^-s)^-1 at the given binary precision,
// factors multiplied in ascending prime order.  P1 has no real zeros, so
// this is defined for every real s.
EulerProductPart euler_l_partial(const EllipticCurve& e, const Rat& s,
                                 std::uint64_t bound,
                                 mpfr_prec_t prec = 128);

struct PartialProducts {
  Rat s;
  std::uint64_t bound = 0;
  mpfr_prec_t precision = 0;
  Real zeta_partial;
  Real l_partial;
  std::vector<std::uint64_t> skipped;

  explicit PartialProducts(mpfr_prec_t prec)
      : precision(prec), zeta_partial(prec), l_partial(prec) {}
};

// Truncated Hasse-Weil products: zeta_partial multiplies the full local
// factors Z_p(p^-s), l_partial the P1 inverses.  s must be positive;
// s = 1 puts a zero of 1 - p^(1-s) in every denominator, which is
// reported as pole_error whenever a good prime is in range.
PartialProducts hasse_weil_partial(const EllipticCurve& e, const Rat& s,
                                   std::uint64_t bound,
                                   mpfr_prec_t prec = 128);

}  // namespace ckzeta
