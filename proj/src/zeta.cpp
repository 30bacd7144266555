#include "ckzeta/zeta.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ckzeta/errors.hpp"

namespace ckzeta {

PowerSeriesQ::PowerSeriesQ(std::vector<Rat> coefficients)
    : c_(std::move(coefficients)) {
  if (c_.empty()) {
    throw std::invalid_argument("a series needs at least its constant term");
  }
}

PowerSeriesQ PowerSeriesQ::zero(std::size_t order) {
  return PowerSeriesQ(std::vector<Rat>(order + 1));
}

PowerSeriesQ PowerSeriesQ::one(std::size_t order) {
  std::vector<Rat> c(order + 1);
  c[0] = 1;
  return PowerSeriesQ(std::move(c));
}

PowerSeriesQ PowerSeriesQ::from_poly(const IntPolynomial& p,
                                     std::size_t order) {
  std::vector<Rat> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = Rat(p.coeff(k));
  return PowerSeriesQ(std::move(c));
}

const Rat& PowerSeriesQ::coeff(std::size_t k) const {
  if (k >= c_.size()) {
    throw std::out_of_range("coefficient beyond the truncation order");
  }
  return c_[k];
}

PowerSeriesQ PowerSeriesQ::truncate(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("cannot extend a truncated series");
  }
  return PowerSeriesQ(std::vector<Rat>(c_.begin(), c_.begin() + order + 1));
}

PowerSeriesQ PowerSeriesQ::operator+(const PowerSeriesQ& o) const {
  std::size_t n = std::min(order(), o.order());
  std::vector<Rat> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = c_[k] + o.c_[k];
  return PowerSeriesQ(std::move(c));
}

PowerSeriesQ PowerSeriesQ::operator-(const PowerSeriesQ& o) const {
  std::size_t n = std::min(order(), o.order());
  std::vector<Rat> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = c_[k] - o.c_[k];
  return PowerSeriesQ(std::move(c));
}

PowerSeriesQ PowerSeriesQ::operator*(const PowerSeriesQ& o) const {
  std::size_t n = std::min(order(), o.order());
  std::vector<Rat> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      c[i + j] += c_[i] * o.c_[j];
    }
  }
  return PowerSeriesQ(std::move(c));
}

PowerSeriesQ PowerSeriesQ::operator-() const {
  std::vector<Rat> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
  return PowerSeriesQ(std::move(c));
}

PowerSeriesQ PowerSeriesQ::inverse() const {
  if (c_[0] == 0) {
    throw domain_error("series with zero constant term has no inverse");
  }
  std::vector<Rat> b(c_.size());
  b[0] = 1 / c_[0];
  for (std::size_t n = 1; n < c_.size(); ++n) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += c_[j] * b[n - j];
    b[n] = -acc / c_[0];
  }
  return PowerSeriesQ(std::move(b));
}

PowerSeriesQ zeta_series(const std::vector<Int>& counts) {
  // exp of sum N_m u^m / m satisfies n e_n = sum_{j=1..n} N_j e_{n-j}.
  std::vector<Rat> e(counts.size() + 1);
  e[0] = 1;
  for (std::size_t n = 1; n < e.size(); ++n) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      acc += Rat(counts[j - 1]) * e[n - j];
    }
    e[n] = acc / Rat(static_cast<unsigned long>(n));
  }
  return PowerSeriesQ(std::move(e));
}

PowerSeriesQ series_log(const PowerSeriesQ& s) {
  if (s.coeff(0) != 1) {
    throw std::invalid_argument("formal log needs constant term 1");
  }
  const auto& e = s.coefficients();
  std::vector<Rat> l(e.size());
  for (std::size_t n = 1; n < e.size(); ++n) {
    Rat acc = 0;
    for (std::size_t j = 1; j < n; ++j) {
      acc += Rat(static_cast<unsigned long>(j)) * l[j] * e[n - j];
    }
    l[n] = e[n] - acc / Rat(static_cast<unsigned long>(n));
  }
  return PowerSeriesQ(std::move(l));
}

namespace {

// Coefficient c_k of the series, with zero beyond the front.
const Rat& at(const std::vector<Rat>& c, std::ptrdiff_t k) {
  static const Rat zero = 0;
  if (k < 0 || static_cast<std::size_t>(k) >= c.size()) return zero;
  return c[static_cast<std::size_t>(k)];
}

}  // namespace

RationalFunction rational_reconstruct(const PowerSeriesQ& s,
                                      std::size_t deg_num,
                                      std::size_t deg_den) {
  const std::size_t L = deg_num, M = deg_den;
  if (s.order() < L + M) {
    throw underdetermined_error(
        "series order " + std::to_string(s.order()) +
        " cannot pin down degrees (" + std::to_string(L) + ", " +
        std::to_string(M) + "); need order >= " + std::to_string(L + M));
  }
  const auto& c = s.coefficients();

  // Solve sum_{j=0..M} q_j c_{n-j} = 0 for n = L+1 .. L+M with q_0 = 1.
  std::vector<std::vector<Rat>> h(M, std::vector<Rat>(M + 1));
  for (std::size_t r = 0; r < M; ++r) {
    std::ptrdiff_t n = static_cast<std::ptrdiff_t>(L + 1 + r);
    for (std::size_t j = 1; j <= M; ++j) {
      h[r][j - 1] = at(c, n - static_cast<std::ptrdiff_t>(j));
    }
    h[r][M] = -at(c, n);
  }

  // Gaussian elimination with exact rank bookkeeping.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < M && rank < M; ++col) {
    std::size_t piv = rank;
    while (piv < M && h[piv][col] == 0) ++piv;
    if (piv == M) continue;
    std::swap(h[rank], h[piv]);
    Rat inv = 1 / h[rank][col];
    for (std::size_t j = col; j <= M; ++j) h[rank][j] *= inv;
    for (std::size_t r = 0; r < M; ++r) {
      if (r == rank || h[r][col] == 0) continue;
      Rat f = h[r][col];
      for (std::size_t j = col; j <= M; ++j) h[r][j] -= f * h[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < M; ++r) {
    if (h[r][M] != 0) {
      throw no_solution_error(
          "no rational function of degrees (" + std::to_string(L) + ", " +
          std::to_string(M) + ") matches the series");
    }
  }
  if (rank < M) {
    throw underdetermined_error(
        "denominator system is rank-deficient at degrees (" +
        std::to_string(L) + ", " + std::to_string(M) + ")");
  }

  std::vector<Rat> q(M + 1);
  q[0] = 1;
  for (std::size_t r = 0; r < M; ++r) q[pivot_col[r] + 1] = h[r][M];

  // Numerator = Q * s up to degree L; past L the product must vanish
  // through the series' full truncation order, or s is not this function.
  std::vector<Rat> prod(s.order() + 1);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    Rat acc = 0;
    for (std::size_t j = 0; j <= M && j <= n; ++j) {
      acc += q[j] * c[n - j];
    }
    prod[n] = acc;
  }
  for (std::size_t n = L + 1; n <= s.order(); ++n) {
    if (prod[n] != 0) {
      throw no_solution_error(
          "re-expansion deviates from the series at u^" + std::to_string(n));
    }
  }

  // Clear denominators and strip content; the denominator keeps a
  // positive constant term.
  Int lcm = 1;
  for (std::size_t k = 0; k <= L && k < prod.size(); ++k) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
            prod[k].get_den().get_mpz_t());
  }
  for (std::size_t j = 0; j <= M; ++j) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q[j].get_den().get_mpz_t());
  }
  std::vector<Int> pnum(L + 1), pden(M + 1);
  for (std::size_t k = 0; k <= L; ++k) {
    Rat v = at(prod, static_cast<std::ptrdiff_t>(k)) * Rat(lcm);
    pnum[k] = v.get_num();  // denominator is 1 after scaling
  }
  for (std::size_t j = 0; j <= M; ++j) {
    Rat v = q[j] * Rat(lcm);
    pden[j] = v.get_num();
  }
  Int content = 0;
  for (const Int& x : pnum) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  for (const Int& x : pden) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content > 1) {
    for (Int& x : pnum) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    for (Int& x : pden) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  if (pden[0] < 0) {
    for (Int& x : pnum) x = -x;
    for (Int& x : pden) x = -x;
  }
  return {IntPolynomial(std::move(pnum)), IntPolynomial(std::move(pden))};
}

LocalZeta local_factors(const EllipticCurve& e, std::uint64_t p) {
  PointCount pc = ec_count(e, p);
  LocalZeta lz;
  lz.p = p;
  lz.P0 = IntPolynomial({1, -1});
  Int pz(static_cast<unsigned long>(p));
  lz.P1 = IntPolynomial({Int(1), Int(-pc.trace), pz});
  lz.P2 = IntPolynomial({Int(1), Int(-pz)});
  return lz;
}

std::vector<Int> lefschetz_counts(const LocalZeta& lz, std::size_t m_max) {
  const Int p = lz.P1.coeff(2);
  const Int a = -lz.P1.coeff(1);
  std::vector<Int> out;
  Int t_prev = 2;  // t_0
  Int t = a;       // t_1
  for (std::size_t m = 1; m <= m_max; ++m) {
    out.push_back(int_pow(p, static_cast<unsigned long>(m)) + 1 - t);
    Int t_next = a * t - p * t_prev;
    t_prev = t;
    t = t_next;
  }
  return out;
}

namespace {

Real eval_poly(const IntPolynomial& poly, const Real& u, mpfr_prec_t prec) {
  Real acc(prec);
  for (int k = poly.degree(); k >= 0; --k) {
    acc = acc * u + Real::of(poly.coeff(static_cast<std::size_t>(k)), prec);
  }
  return acc;
}

void check_precision(mpfr_prec_t prec) {
  if (prec < kMinProductPrecision) {
    throw std::invalid_argument("partial products need >= 100 bits");
  }
}

}  // namespace

EulerProductPart euler_l_partial(const EllipticCurve& e, const Rat& s,
                                 std::uint64_t bound, mpfr_prec_t prec) {
  check_precision(prec);
  EulerProductPart out(prec);
  out.s = s;
  out.bound = bound;
  Real one = Real::of(std::uint64_t{1}, prec);
  out.value = one;
  const Real minus_s = Real::of(Rat(-s), prec);
  for (std::uint64_t p : primes_up_to(bound)) {
    if (!e.good_reduction(p)) {
      out.skipped.push_back(p);
      continue;
    }
    LocalZeta lz = local_factors(e, p);
    Real u = Real::power(Real::of(p, prec), minus_s);
    out.value = out.value / eval_poly(lz.P1, u, prec);
  }
  return out;
}

PartialProducts hasse_weil_partial(const EllipticCurve& e, const Rat& s,
                                   std::uint64_t bound, mpfr_prec_t prec) {
  check_precision(prec);
  if (s <= 0) {
    throw std::invalid_argument("partial products need s > 0");
  }
  if (bound < 2) {
    throw std::invalid_argument("prime bound must be at least 2");
  }
  std::vector<std::uint64_t> good;
  PartialProducts out(prec);
  out.s = s;
  out.bound = bound;
  for (std::uint64_t p : primes_up_to(bound)) {
    if (e.good_reduction(p)) {
      good.push_back(p);
    } else {
      out.skipped.push_back(p);
    }
  }
  if (s == 1 && !good.empty()) {
    throw pole_error(
        "every local factor has a denominator zero of 1 - p^(1-s) at s = 1");
  }
  Real one = Real::of(std::uint64_t{1}, prec);
  out.zeta_partial = one;
  const Real minus_s = Real::of(Rat(-s), prec);
  for (std::uint64_t p : good) {
    LocalZeta lz = local_factors(e, p);
    Real u = Real::power(Real::of(p, prec), minus_s);
    Real den = eval_poly(lz.P0, u, prec) *
               eval_poly(lz.P2, u, prec);
    if (den.is_zero()) {
      throw pole_error("local denominator vanished at p = " +
                       std::to_string(p) + " for the given s");
    }
    out.zeta_partial = out.zeta_partial * (eval_poly(lz.P1, u, prec) / den);
  }
  out.l_partial = euler_l_partial(e, s, bound, prec).value;
  return out;
}

}  // namespace ckzeta
