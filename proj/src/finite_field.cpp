#include "ckzeta/finite_field.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "ckzeta/errors.hpp"

namespace ckzeta {

namespace {

// Polynomials over F_p: ascending coefficient vectors, entries in [0, p).
using Fpx = std::vector<std::uint64_t>;

void ptrim(Fpx& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fpx pmul(const Fpx& a, const Fpx& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fpx c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  ptrim(c);
  return c;
}

// a mod f for monic f.
Fpx pmod(Fpx a, const Fpx& f, std::uint64_t p) {
  ptrim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - df;
    if (lead != 0) {
      for (std::size_t i = 0; i < df; ++i) {
        std::uint64_t t = mul_mod(lead, f[i], p);
        a[shift + i] = (a[shift + i] + p - t) % p;
      }
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

Fpx pmulmod(const Fpx& a, const Fpx& b, const Fpx& f, std::uint64_t p) {
  return pmod(pmul(a, b, p), f, p);
}

// Long division a = q*b + r with b nonzero, deg r < deg b.
void pdivmod(const Fpx& a, const Fpx& b, std::uint64_t p, Fpx& q, Fpx& r) {
  r = a;
  ptrim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  std::uint64_t lead_inv = pow_mod(b.back(), p - 2, p);
  while (r.size() >= b.size()) {
    std::uint64_t coef = mul_mod(r.back(), lead_inv, p);
    std::size_t shift = r.size() - b.size();
    q[shift] = coef;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t t = mul_mod(coef, b[i], p);
      r[shift + i] = (r[shift + i] + p - t) % p;
    }
    ptrim(r);  // the leading term cancels exactly
  }
  ptrim(q);
}

// Divides by the leading coefficient, making the polynomial monic.
Fpx pmonic(Fpx a, std::uint64_t p) {
  ptrim(a);
  if (a.empty() || a.back() == 1) return a;
  std::uint64_t s = pow_mod(a.back(), p - 2, p);
  for (auto& c : a) c = mul_mod(c, s, p);
  return a;
}

Fpx pgcd(Fpx a, Fpx b, std::uint64_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Fpx m = pmonic(b, p);
    Fpx r = pmod(std::move(a), m, p);
    a = std::move(m);
    b = std::move(r);
  }
  return pmonic(a, p);
}

// base^p mod f by square and multiply on the bits of p.
Fpx ppow_p(const Fpx& base, std::uint64_t p, const Fpx& f) {
  Fpx r{1};
  Fpx b = base;
  std::uint64_t e = p;
  while (e > 0) {
    if (e & 1) r = pmulmod(r, b, f, p);
    b = pmulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

// Rabin test: monic f of degree m is irreducible over F_p iff
// t^(p^m) == t (mod f) and gcd(t^(p^(m/l)) - t, f) = 1 for prime l | m.
bool irreducible(const Fpx& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  std::vector<std::size_t> prime_divs;
  std::size_t n = m;
  for (std::size_t l = 2; l * l <= n; ++l) {
    if (n % l == 0) {
      prime_divs.push_back(l);
      while (n % l == 0) n /= l;
    }
  }
  if (n > 1) prime_divs.push_back(n);

  // frob[k] = t^(p^k) mod f
  Fpx t{0, 1};
  std::vector<Fpx> frob(m + 1);
  frob[0] = pmod(t, f, p);
  for (std::size_t k = 1; k <= m; ++k) {
    frob[k] = ppow_p(frob[k - 1], p, f);
  }
  Fpx diff = frob[m];
  // t^(p^m) - t must vanish mod f
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  ptrim(diff);
  if (!diff.empty()) return false;
  for (std::size_t l : prime_divs) {
    Fpx d = frob[m / l];
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    ptrim(d);
    Fpx g = pgcd(d, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

Field Field::prime_field(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic must be prime");
  }
  return Field(p, 1, {0, 1});
}

Field Field::extension(std::uint64_t p, unsigned degree) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic must be prime");
  }
  if (degree < 1) {
    throw std::invalid_argument("extension degree must be at least 1");
  }
  if (degree == 1) return Field(p, 1, {0, 1});
  // Walk candidates t^m + c_{m-1} t^{m-1} + ... + c_0 in increasing order
  // of the encoding sum(c_i p^i); the first irreducible wins.  Density of
  // irreducibles is about 1/m, so the walk stops early.
  Fpx f(degree + 1, 0);
  f[degree] = 1;
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t v = k;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = v % p;
      v /= p;
    }
    if (v != 0) {
      throw std::invalid_argument(
          "no irreducible modulus found in the searchable range");
    }
    if (irreducible(f, p)) {
      return Field(p, degree, Fpx(f));
    }
  }
}

Field Field::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("field spec must look like Fp:5 or Fq:3^2");
  }
  std::string head = spec.substr(0, colon);
  std::string body = spec.substr(colon + 1);
  auto parse_u64 = [](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number in field spec");
    for (char c : s) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed number in field spec: " + s);
      }
    }
    return std::stoull(s);
  };
  if (head == "Fp") {
    return prime_field(parse_u64(body));
  }
  if (head == "Fq") {
    auto caret = body.find('^');
    if (caret == std::string::npos) {
      throw std::invalid_argument("Fq spec must look like Fq:3^2");
    }
    std::uint64_t p = parse_u64(body.substr(0, caret));
    std::uint64_t m = parse_u64(body.substr(caret + 1));
    if (m == 0 || m > 64) {
      throw std::invalid_argument("extension degree out of range");
    }
    return extension(p, static_cast<unsigned>(m));
  }
  throw std::invalid_argument("field spec must start with Fp: or Fq:");
}

Int Field::size() const { return int_pow(Int(static_cast<unsigned long>(p_)), m_); }

std::string Field::spec_string() const {
  std::ostringstream os;
  if (m_ == 1) {
    os << "Fp:" << p_;
  } else {
    os << "Fq:" << p_ << '^' << m_;
  }
  return os.str();
}

FieldElement Field::zero() const {
  return FieldElement(std::vector<std::uint64_t>(m_, 0));
}

FieldElement Field::one() const {
  std::vector<std::uint64_t> c(m_, 0);
  c[0] = 1;
  return FieldElement(std::move(c));
}

FieldElement Field::from_integer(const Int& n) const {
  Int r;
  Int p(static_cast<unsigned long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  std::vector<std::uint64_t> c(m_, 0);
  c[0] = r.get_ui();
  return FieldElement(std::move(c));
}

FieldElement Field::element(const std::vector<Int>& coords) const {
  if (coords.size() > m_) {
    throw std::invalid_argument("too many coordinates for this field");
  }
  Int r;
  Int p(static_cast<unsigned long>(p_));
  std::vector<std::uint64_t> c(m_, 0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    mpz_fdiv_r(r.get_mpz_t(), coords[i].get_mpz_t(), p.get_mpz_t());
    c[i] = r.get_ui();
  }
  return FieldElement(std::move(c));
}

void Field::check_element(const FieldElement& a) const {
  if (a.coords().size() != m_) {
    throw std::invalid_argument("element does not belong to this field");
  }
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<std::uint64_t> c(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    c[i] = (a.coords()[i] + b.coords()[i]) % p_;
  }
  return FieldElement(std::move(c));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<std::uint64_t> c(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    c[i] = (a.coords()[i] + p_ - b.coords()[i]) % p_;
  }
  return FieldElement(std::move(c));
}

FieldElement Field::neg(const FieldElement& a) const {
  check_element(a);
  std::vector<std::uint64_t> c(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    c[i] = a.coords()[i] == 0 ? 0 : p_ - a.coords()[i];
  }
  return FieldElement(std::move(c));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  Fpx r = pmulmod(a.coords(), b.coords(), modulus_, p_);
  r.resize(m_, 0);
  return FieldElement(std::move(r));
}

FieldElement Field::inv(const FieldElement& a) const {
  check_element(a);
  if (is_zero(a)) throw domain_error("inverse of zero");
  if (m_ == 1) {
    return FieldElement({pow_mod(a.coords()[0], p_ - 2, p_)});
  }
  // Extended Euclid in F_p[t]: the invariant s_k * a == r_k holds modulo
  // the field modulus.
  Fpx r0 = modulus_, r1 = a.coords();
  ptrim(r1);
  Fpx s0 = {}, s1 = {1};
  while (!r1.empty()) {
    Fpx q, rem;
    pdivmod(r0, r1, p_, q, rem);
    Fpx s2 = s0;
    Fpx qs = pmul(q, s1, p_);
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      s2[i] = (s2[i] + p_ - qs[i]) % p_;
    }
    ptrim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd, a nonzero constant since the modulus is irreducible.
  std::uint64_t scale = pow_mod(r0[0], p_ - 2, p_);
  for (auto& c : s0) c = mul_mod(c, scale, p_);
  s0 = pmod(std::move(s0), modulus_, p_);
  s0.resize(m_, 0);
  return FieldElement(std::move(s0));
}

FieldElement Field::pow(const FieldElement& a, const Int& e) const {
  check_element(a);
  if (e < 0) throw std::invalid_argument("exponent must be nonnegative");
  FieldElement r = one();
  FieldElement b = a;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
    if (i + 1 < bits) b = mul(b, b);
  }
  return r;
}

bool Field::is_zero(const FieldElement& a) const {
  check_element(a);
  for (auto c : a.coords()) {
    if (c != 0) return false;
  }
  return true;
}

std::uint64_t Field::index_of(const FieldElement& a) const {
  check_element(a);
  std::uint64_t idx = 0;
  for (std::size_t i = m_; i-- > 0;) {
    idx = idx * p_ + a.coords()[i];
  }
  return idx;
}

FieldElement Field::element_at(std::uint64_t index) const {
  std::vector<std::uint64_t> c(m_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  if (index != 0) {
    throw std::invalid_argument("element index out of range");
  }
  return FieldElement(std::move(c));
}

std::string Field::to_string(const FieldElement& a) const {
  check_element(a);
  if (m_ == 1) return std::to_string(a.coords()[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m_; ++i) {
    if (i) os << ',';
    os << a.coords()[i];
  }
  os << ')';
  return os.str();
}

FieldEnumeration enumerate_field(const Field& f, std::uint64_t budget) {
  Int q = f.size();
  if (q > Int(budget)) {
    throw budget_exceeded("field of size " + q.get_str() +
                          " exceeds the enumeration budget " +
                          std::to_string(budget));
  }
  return FieldEnumeration(f, q.get_ui());
}

}  // namespace ckzeta
