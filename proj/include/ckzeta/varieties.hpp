#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ckzeta/finite_field.hpp"
#include "ckzeta/numeric.hpp"

namespace ckzeta {

// Default cap on polynomial evaluations in count_projective.
inline constexpr std::uint64_t kDefaultEvalBudget = 1ull << 24;

// Sparse multivariate polynomial over Z with a fixed variable count.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t n_vars) : n_(n_vars) {}

  std::size_t n_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<unsigned>, Int>& terms() const { return terms_; }

  // Adds coeff * prod x_i^exps[i], merging with an existing term.
  void add_term(const std::vector<unsigned>& exps, const Int& coeff);

  bool is_homogeneous() const;
  unsigned total_degree() const;

  FieldElement eval(const Field& f,
                    const std::vector<FieldElement>& point) const;

  // One term per line token list: "coeff e0 e1 ... e_{n-1}".
  static MultiPoly parse_line(const std::string& line, std::size_t n_vars);

 private:
  std::size_t n_;
  std::map<std::vector<unsigned>, Int> terms_;
};

// Zero locus of homogeneous polynomials in P^{n_vars - 1}.
class ProjectiveVariety {
 public:
  ProjectiveVariety(std::size_t n_vars, std::vector<MultiPoly> polys);

  std::size_t n_vars() const { return n_; }
  const std::vector<MultiPoly>& polys() const { return polys_; }

  // File form: one polynomial per line, each line a list of terms
  // "coeff e0 ... e_{n-1}" separated by ';'.  Blank lines and lines
  // starting with '#' are skipped.
  static ProjectiveVariety parse(const std::string& text);

 private:
  std::size_t n_;
  std::vector<MultiPoly> polys_;
};

// Rational points over f, counted once per point via the scaling with
// first nonzero coordinate 1.
Int count_projective(const ProjectiveVariety& v, const Field& f,
                     std::uint64_t eval_budget = kDefaultEvalBudget);

// y^2 = x^3 + a x + b with nonzero discriminant -16(4a^3 + 27b^2).
class EllipticCurve {
 public:
  EllipticCurve(Int a, Int b);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& discriminant() const { return disc_; }

  // p must be prime.  True when p > 3 and p does not divide the
  // discriminant; the short Weierstrass model is not smooth in
  // characteristic 2 or 3.
  bool good_reduction(std::uint64_t p) const;

  // "ec:a=<int>,b=<int>"
  static EllipticCurve parse(const std::string& spec);
  std::string spec_string() const;

  // y^2 z = x^3 + a x z^2 + b z^3 as a projective cubic in (x, y, z).
  ProjectiveVariety homogeneous_model() const;

 private:
  Int a_, b_, disc_;
};

struct PointCount {
  Int count;  // projective points including the point at infinity
  Int trace;  // p + 1 - count
};

// |E(F_p)| by direct enumeration.  Throws bad_reduction at bad primes and
// budget_exceeded when p exceeds the enumeration budget.
PointCount ec_count(const EllipticCurve& e, std::uint64_t p,
                    std::uint64_t budget = kDefaultEnumerationBudget);

// |E(F_{p^m})| by enumeration of the extension field.
Int ec_count_ext(const EllipticCurve& e, std::uint64_t p, unsigned m,
                 std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace ckzeta
