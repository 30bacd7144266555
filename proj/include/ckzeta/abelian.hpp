#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ckzeta/int_matrix.hpp"

namespace ckzeta {

// Finitely generated abelian group in canonical form: Z^free_rank plus
// cyclic factors Z/d1 (+) ... (+) Z/dk with 2 <= d1 | d2 | ... | dk.
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup free_of_rank(std::size_t r) { return {r, {}}; }
  // Accepts factors in any order, not necessarily a divisor chain; the
  // result is canonicalized.  Nonpositive moduli are rejected, 1s dropped.
  static FgAbelianGroup from_parts(std::size_t free_rank,
                                   std::vector<Int> moduli);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // nullopt when the group is infinite.
  std::optional<Int> order() const;
  // "0", "Z", "Z^2 (+) Z/2 (+) Z/4", ...
  std::string to_string() const;

  bool operator==(const FgAbelianGroup& o) const = default;
};

// Cokernel Z^rows / (column span of m).  A matrix with zero columns
// presents the free group of rank rows().
FgAbelianGroup cokernel(const IntMatrix& m);

std::optional<Int> group_order(const FgAbelianGroup& g);

// Canonical forms are unique, so isomorphism is field equality.
bool is_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b);

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

// Groups indexed by strictly increasing labels.
class GroupSequence {
 public:
  struct Entry {
    std::size_t index;
    FgAbelianGroup group;
  };

  void append(std::size_t index, FgAbelianGroup g);
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
};

struct StabilizationResult {
  bool stable = false;
  // Set when stable: the common value of the trailing window.
  std::optional<FgAbelianGroup> limit;
};

// The sequence is considered settled when its last `window` entries agree.
// window must be >= 2 and <= the sequence length.
StabilizationResult limit_stabilization(const GroupSequence& seq,
                                        std::size_t window);

}  // namespace ckzeta
