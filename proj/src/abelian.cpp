#include "ckzeta/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ckzeta/linalg.hpp"

namespace ckzeta {

FgAbelianGroup FgAbelianGroup::from_parts(std::size_t free_rank,
                                         std::vector<Int> moduli) {
  for (const Int& d : moduli) {
    if (d <= 0) {
      throw std::invalid_argument("cyclic factor moduli must be positive");
    }
  }
  // (a, b) -> (gcd, lcm) preserves the product and orders by divisibility;
  // one sweep over all pairs yields the invariant factor chain.
  Int g;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      mpz_gcd(g.get_mpz_t(), moduli[i].get_mpz_t(), moduli[j].get_mpz_t());
      if (g == moduli[i]) continue;
      moduli[j] = moduli[i] / g * moduli[j];
      moduli[i] = g;
    }
  }
  std::vector<Int> chain;
  for (Int& d : moduli) {
    if (d > 1) chain.push_back(std::move(d));
  }
  return {free_rank, std::move(chain)};
}

std::optional<Int> FgAbelianGroup::order() const {
  if (free_rank > 0) return std::nullopt;
  Int n = 1;
  for (const Int& d : torsion) n *= d;
  return n;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " (+) ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

FgAbelianGroup cokernel(const IntMatrix& m) {
  if (m.rows() == 0) return FgAbelianGroup::trivial();
  if (m.cols() == 0) return FgAbelianGroup::free_of_rank(m.rows());
  std::vector<Int> factors = invariant_factors(m);
  std::size_t rank = factors.size();
  std::vector<Int> torsion;
  for (Int& d : factors) {
    if (d > 1) torsion.push_back(std::move(d));
  }
  return {m.rows() - rank, std::move(torsion)};
}

std::optional<Int> group_order(const FgAbelianGroup& g) { return g.order(); }

bool is_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return a == b;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Int> moduli = a.torsion;
  moduli.insert(moduli.end(), b.torsion.begin(), b.torsion.end());
  return FgAbelianGroup::from_parts(a.free_rank + b.free_rank,
                                    std::move(moduli));
}

void GroupSequence::append(std::size_t index, FgAbelianGroup g) {
  if (!entries_.empty() && index <= entries_.back().index) {
    throw std::invalid_argument("sequence indices must strictly increase");
  }
  entries_.push_back({index, std::move(g)});
}

StabilizationResult limit_stabilization(const GroupSequence& seq,
                                        std::size_t window) {
  if (window < 2) {
    throw std::invalid_argument("stabilization window must be at least 2");
  }
  if (window > seq.size()) {
    throw std::invalid_argument(
        "stabilization window exceeds sequence length");
  }
  const auto& e = seq.entries();
  const FgAbelianGroup& last = e.back().group;
  for (std::size_t k = e.size() - window; k < e.size(); ++k) {
    if (!(e[k].group == last)) return {false, std::nullopt};
  }
  return {true, last};
}

}  // namespace ckzeta
