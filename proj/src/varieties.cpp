#include "ckzeta/varieties.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ckzeta/errors.hpp"

namespace ckzeta {

void MultiPoly::add_term(const std::vector<unsigned>& exps, const Int& coeff) {
  if (exps.size() != n_) {
    throw std::invalid_argument("exponent vector length must equal n_vars");
  }
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(exps, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = 0;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    unsigned t = 0;
    for (unsigned e : exps) t += e;
    if (first) {
      d = t;
      first = false;
    } else if (t != d) {
      return false;
    }
  }
  return true;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [exps, c] : terms_) {
    unsigned t = 0;
    for (unsigned e : exps) t += e;
    if (t > d) d = t;
  }
  return d;
}

FieldElement MultiPoly::eval(const Field& f,
                             const std::vector<FieldElement>& point) const {
  if (point.size() != n_) {
    throw std::invalid_argument("point dimension must equal n_vars");
  }
  FieldElement acc = f.zero();
  for (const auto& [exps, c] : terms_) {
    FieldElement t = f.from_integer(c);
    for (std::size_t j = 0; j < n_; ++j) {
      if (exps[j] == 0) continue;
      t = f.mul(t, f.pow(point[j], Int(exps[j])));
    }
    acc = f.add(acc, t);
  }
  return acc;
}

MultiPoly MultiPoly::parse_line(const std::string& line, std::size_t n_vars) {
  MultiPoly poly(n_vars);
  std::istringstream groups(line);
  std::string group;
  bool any = false;
  while (std::getline(groups, group, ';')) {
    std::istringstream is(group);
    std::string tok;
    if (!(is >> tok)) continue;  // empty chunk between separators
    any = true;
    Int coeff = parse_int(tok);
    std::vector<unsigned> exps;
    while (is >> tok) {
      unsigned long e;
      try {
        std::size_t pos = 0;
        e = std::stoul(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (...) {
        throw std::invalid_argument("bad exponent: " + tok);
      }
      exps.push_back(static_cast<unsigned>(e));
    }
    if (exps.size() != n_vars) {
      throw std::invalid_argument(
          "term must carry one exponent per variable: " + group);
    }
    poly.add_term(exps, coeff);
  }
  if (!any) throw std::invalid_argument("empty polynomial line");
  return poly;
}

ProjectiveVariety::ProjectiveVariety(std::size_t n_vars,
                                     std::vector<MultiPoly> polys)
    : n_(n_vars), polys_(std::move(polys)) {
  if (n_ < 2) {
    throw std::invalid_argument("projective space needs at least 2 variables");
  }
  for (const auto& p : polys_) {
    if (p.n_vars() != n_) {
      throw std::invalid_argument("polynomial has wrong variable count");
    }
    if (!p.is_homogeneous()) {
      throw std::invalid_argument("defining polynomials must be homogeneous");
    }
  }
}

ProjectiveVariety ProjectiveVariety::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> poly_lines;
  while (std::getline(is, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    poly_lines.push_back(line);
  }
  if (poly_lines.empty()) {
    throw std::invalid_argument("variety file has no polynomials");
  }
  // Variable count comes from the first term: "coeff e0 e1 ... e_{n-1}".
  std::string head = poly_lines.front().substr(0, poly_lines.front().find(';'));
  std::istringstream probe(head);
  std::string tok;
  long tokens = 0;
  while (probe >> tok) ++tokens;
  if (tokens < 3) {
    throw std::invalid_argument("first polynomial term is too short");
  }
  std::size_t n_vars = static_cast<std::size_t>(tokens - 1);
  std::vector<MultiPoly> polys;
  for (const auto& l : poly_lines) {
    polys.push_back(MultiPoly::parse_line(l, n_vars));
  }
  return ProjectiveVariety(n_vars, std::move(polys));
}

Int count_projective(const ProjectiveVariety& v, const Field& f,
                     std::uint64_t eval_budget) {
  const std::size_t n = v.n_vars();
  const Int q = f.size();
  // Normalized representatives: q^(n-1) + q^(n-2) + ... + 1 of them.
  Int reps = 0;
  for (std::size_t i = 0; i < n; ++i) reps = reps * q + 1;
  Int units = reps * Int(static_cast<unsigned long>(
                        v.polys().empty() ? 1 : v.polys().size()));
  if (units > Int(eval_budget)) {
    throw budget_exceeded("projective enumeration needs " + units.get_str() +
                          " evaluations, budget is " +
                          std::to_string(eval_budget));
  }
  const std::uint64_t qs = q.get_ui();
  Int total = 0;
  std::vector<FieldElement> point(n);
  for (std::size_t lead = 0; lead < n; ++lead) {
    for (std::size_t j = 0; j < lead; ++j) point[j] = f.zero();
    point[lead] = f.one();
    const std::size_t tail = n - lead - 1;
    std::vector<std::uint64_t> digits(tail, 0);
    for (;;) {
      for (std::size_t j = 0; j < tail; ++j) {
        point[lead + 1 + j] = f.element_at(digits[j]);
      }
      bool on_variety = true;
      for (const auto& poly : v.polys()) {
        if (!f.is_zero(poly.eval(f, point))) {
          on_variety = false;
          break;
        }
      }
      if (on_variety) ++total;
      std::size_t k = 0;
      while (k < tail) {
        if (++digits[k] < qs) break;
        digits[k] = 0;
        ++k;
      }
      if (k == tail) break;
    }
  }
  return total;
}

EllipticCurve::EllipticCurve(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {
  disc_ = Int(-16) * (Int(4) * a_ * a_ * a_ + Int(27) * b_ * b_);
  if (disc_ == 0) {
    throw std::invalid_argument("singular curve: discriminant is zero");
  }
}

bool EllipticCurve::good_reduction(std::uint64_t p) const {
  if (!is_prime(p)) {
    throw std::invalid_argument("reduction prime must be prime");
  }
  if (p <= 3) return false;  // short Weierstrass needs characteristic > 3
  Int r;
  Int pm(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), disc_.get_mpz_t(), pm.get_mpz_t());
  return r != 0;
}

EllipticCurve EllipticCurve::parse(const std::string& spec) {
  if (spec.rfind("ec:", 0) != 0) {
    throw std::invalid_argument("curve spec must look like ec:a=0,b=1");
  }
  std::string body = spec.substr(3);
  auto comma = body.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("curve spec must look like ec:a=0,b=1");
  }
  std::string sa = body.substr(0, comma);
  std::string sb = body.substr(comma + 1);
  if (sa.rfind("a=", 0) != 0 || sb.rfind("b=", 0) != 0) {
    throw std::invalid_argument("curve spec must look like ec:a=0,b=1");
  }
  return EllipticCurve(parse_int(sa.substr(2)), parse_int(sb.substr(2)));
}

std::string EllipticCurve::spec_string() const {
  return "ec:a=" + a_.get_str() + ",b=" + b_.get_str();
}

ProjectiveVariety EllipticCurve::homogeneous_model() const {
  // y^2 z - x^3 - a x z^2 - b z^3 in coordinates (x, y, z)
  MultiPoly f(3);
  f.add_term({0, 2, 1}, 1);
  f.add_term({3, 0, 0}, -1);
  f.add_term({1, 0, 2}, -a_);
  f.add_term({0, 0, 3}, -b_);
  return ProjectiveVariety(3, {f});
}

namespace {

void require_good(const EllipticCurve& e, std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("reduction prime must be prime");
  }
  if (p <= 3) {
    throw bad_reduction(
        p, "short Weierstrass model unusable in characteristic " +
               std::to_string(p));
  }
  if (!e.good_reduction(p)) {
    throw bad_reduction(p, "bad reduction: " + std::to_string(p) +
                               " divides the discriminant");
  }
}

std::uint64_t residue(const Int& v, std::uint64_t p) {
  Int r;
  Int pm(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
  return r.get_ui();
}

}  // namespace

PointCount ec_count(const EllipticCurve& e, std::uint64_t p,
                    std::uint64_t budget) {
  require_good(e, p);
  if (p > budget) {
    throw budget_exceeded("prime " + std::to_string(p) +
                          " exceeds the enumeration budget " +
                          std::to_string(budget));
  }
  const std::uint64_t a = residue(e.a(), p);
  const std::uint64_t b = residue(e.b(), p);
  // Tally the values of y^2, then accumulate matches per x.
  std::vector<std::uint32_t> squares(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) {
    ++squares[mul_mod(y, y, p)];
  }
  std::uint64_t affine = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t rhs = (mul_mod(mul_mod(x, x, p), x, p) + mul_mod(a, x, p)) % p;
    rhs = (rhs + b) % p;
    affine += squares[rhs];
  }
  PointCount pc;
  pc.count = Int(static_cast<unsigned long>(affine + 1));
  pc.trace = Int(static_cast<unsigned long>(p)) + 1 - pc.count;
  if (pc.trace * pc.trace > Int(4) * Int(static_cast<unsigned long>(p))) {
    throw std::logic_error("Hasse bound violated; count is wrong");
  }
  return pc;
}

Int ec_count_ext(const EllipticCurve& e, std::uint64_t p, unsigned m,
                 std::uint64_t budget) {
  require_good(e, p);
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  Field f = Field::extension(p, m);
  Int q = f.size();
  if (q > Int(budget)) {
    throw budget_exceeded("field of size " + q.get_str() +
                          " exceeds the enumeration budget " +
                          std::to_string(budget));
  }
  const std::uint64_t qs = q.get_ui();
  const FieldElement ae = f.from_integer(e.a());
  const FieldElement be = f.from_integer(e.b());
  std::vector<std::uint32_t> squares(qs, 0);
  for (std::uint64_t i = 0; i < qs; ++i) {
    FieldElement y = f.element_at(i);
    ++squares[f.index_of(f.mul(y, y))];
  }
  std::uint64_t affine = 0;
  for (std::uint64_t i = 0; i < qs; ++i) {
    FieldElement x = f.element_at(i);
    FieldElement rhs =
        f.add(f.add(f.mul(f.mul(x, x), x), f.mul(ae, x)), be);
    affine += squares[f.index_of(rhs)];
  }
  return Int(static_cast<unsigned long>(affine)) + 1;
}

}  // namespace ckzeta
