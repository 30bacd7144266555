#include "ckzeta/real.hpp"

#include <stdexcept>
#include <vector>

namespace ckzeta {

namespace {
void check_prec(mpfr_prec_t prec) {
  if (prec < MPFR_PREC_MIN || prec > MPFR_PREC_MAX) {
    throw std::invalid_argument("unusable floating precision");
  }
}
}  // namespace

Real::Real(mpfr_prec_t prec) : prec_(prec) {
  check_prec(prec);
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) : prec_(o.prec_) {
  mpfr_init2(v_, prec_);
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(v_, prec_);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(const Rat& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const Int& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of(std::uint64_t v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui(r.v_, static_cast<unsigned long>(v), MPFR_RNDN);
  return r;
}

namespace {
void require_same_prec(const Real& a, const Real& b) {
  if (a.precision() != b.precision()) {
    throw std::logic_error("mixed-precision arithmetic is not allowed");
  }
}
}  // namespace

Real Real::operator+(const Real& o) const {
  require_same_prec(*this, o);
  Real r(prec_);
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& o) const {
  require_same_prec(*this, o);
  Real r(prec_);
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& o) const {
  require_same_prec(*this, o);
  Real r(prec_);
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator/(const Real& o) const {
  require_same_prec(*this, o);
  Real r(prec_);
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(prec_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::power(const Real& base, const Real& exponent) {
  require_same_prec(base, exponent);
  Real r(base.prec_);
  mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(unsigned sig_digits) const {
  if (sig_digits == 0) {
    throw std::invalid_argument("need at least one significant digit");
  }
  // %.*Re prints one digit before the point and sig_digits - 1 after.
  int need = mpfr_snprintf(nullptr, 0, "%.*Re",
                           static_cast<int>(sig_digits - 1), v_);
  if (need < 0) throw std::runtime_error("mpfr formatting failed");
  std::vector<char> buf(static_cast<std::size_t>(need) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re",
                static_cast<int>(sig_digits - 1), v_);
  return std::string(buf.data());
}

std::string decimal_string(const Rat& r, unsigned sig_digits) {
  return Real::of(r, 256).to_string(sig_digits);
}

}  // namespace ckzeta
