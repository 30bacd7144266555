#pragma once

#include <map>
#include <string>
#include <vector>

#include "ckzeta/abelian.hpp"
#include "ckzeta/int_matrix.hpp"
#include "ckzeta/numeric.hpp"

namespace ckzeta {

// Divisor with a finite part (integer coefficients on labeled components)
// and exact rational coefficients at a fixed number of infinite places.
class CompactifiedDivisor {
 public:
  // Zero divisor with the given number of infinite places.
  explicit CompactifiedDivisor(std::size_t places)
      : infinite_(places) {}
  CompactifiedDivisor(std::map<std::string, Int> finite,
                      std::vector<Rat> infinite);

  // Zero coefficients are never stored.
  const std::map<std::string, Int>& finite() const { return finite_; }
  const std::vector<Rat>& infinite() const { return infinite_; }
  std::size_t places() const { return infinite_.size(); }

  const Int& finite_coeff(const std::string& label) const;
  bool is_zero() const;

  bool operator==(const CompactifiedDivisor& o) const = default;

 private:
  std::map<std::string, Int> finite_;
  std::vector<Rat> infinite_;
};

// Both summands must carry the same number of infinite places.
CompactifiedDivisor divisor_add(const CompactifiedDivisor& a,
                                const CompactifiedDivisor& b);

CompactifiedDivisor divisor_negate(const CompactifiedDivisor& a);

// The finite divisor of a function together with externally supplied
// values at the infinite places; the defining integrals are data here,
// never computed.
struct PrincipalData {
  std::map<std::string, Int> finite_divisor;
  std::vector<Rat> v_infinity;
};

CompactifiedDivisor principal_divisor(const PrincipalData& pd);

// JSON form {"finite": {label: "int"}, "infinite": ["rational"]}.
std::string divisor_to_json(const CompactifiedDivisor& d);
CompactifiedDivisor divisor_from_json(const std::string& text);

// Truncated presentation of the compactified Picard group: the cokernel
// of 1 - m^t, computed through Hermite reduction followed by the full
// Smith decomposition.  This route shares no code with cuntz::k_theory
// above the elementary row/column operations.
FgAbelianGroup pic_presentation(const IntMatrix& m);

// True iff the Picard presentation of m and k0 of the same matrix are
// isomorphic.  Two independent pipelines evaluate the same formula, so
// false always means an implementation bug.
bool k0_matches_pic(const IntMatrix& m);

}  // namespace ckzeta
