#include "ckzeta/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace ckzeta {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  if (n == 1) return 0;
  std::uint64_t r = 1;
  base %= n;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses decide primality for every n < 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i * i <= bound; ++i) {
    if (!sieve[i]) continue;
    for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (sieve[i]) out.push_back(i);
  }
  return out;
}

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("not an integer: \"" + text + "\"");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("not an integer: \"" + text + "\"");
    }
  }
  Int v(text.substr(i));
  return neg ? Int(-v) : v;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rat(parse_int(text));
  std::string head = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.empty()) throw std::invalid_argument("malformed decimal: " + text);
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed decimal: " + text);
    }
  }
  bool neg = !head.empty() && head[0] == '-';
  if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
  if (head.empty()) head = "0";
  Int ipart = parse_int(head);
  Int scale = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
  Int num = ipart * scale + Int(frac);
  if (neg) num = -num;
  Rat r(num, scale);
  r.canonicalize();
  return r;
}

Int int_pow(const Int& base, unsigned long n) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), n);
  return r;
}

}  // namespace ckzeta
