#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ckzeta/abelian.hpp"
#include "ckzeta/int_matrix.hpp"
#include "ckzeta/varieties.hpp"

namespace ckzeta {

// Advisory structural facts about a candidate graph-algebra matrix.
// K-theory below stays total on integer matrices; nothing here gates it.
struct CKValidation {
  bool nonnegative = false;
  // Strongly connected through the pattern of (I + |m|)^(n-1), and not a
  // permutation matrix.
  bool irreducible = false;
  bool permutation = false;
};

CKValidation validate_ck(const IntMatrix& m);

struct KTheoryPair {
  FgAbelianGroup k0;  // Z^n / (1 - m^t) Z^n
  FgAbelianGroup k1;  // free of rank dim ker(1 - m^t)
};

KTheoryPair k_theory(const IntMatrix& m);

// Companion block [[0, -p], [1, a_p]] of s^2 - a_p s + p; the order of
// k0 of this block is |E(F_p)|.
IntMatrix realize_point_count(const EllipticCurve& e, std::uint64_t p);

// Ordered per-prime companion blocks; finite stand-ins for an infinite
// adjacency matrix, assembled block-diagonally.
struct TruncationFamily {
  struct Block {
    std::uint64_t prime = 0;
    Int point_count;
    IntMatrix matrix;
  };
  struct SkippedPrime {
    std::uint64_t prime = 0;
    std::string reason;
  };

  std::string curve_spec;
  std::uint64_t bound = 0;
  std::vector<Block> blocks;          // ascending primes
  std::vector<SkippedPrime> skipped;  // ascending primes

  // Block-diagonal matrix of the first m blocks; m = 0 gives the empty
  // matrix.  m must not exceed blocks.size().
  IntMatrix assembled(std::size_t m) const;
};

// One block per good prime <= prime_bound, skipped primes recorded with
// a reason.  Blocks may be computed on `threads` workers; assembly order
// is by prime regardless.
TruncationFamily build_family(const EllipticCurve& e,
                              std::uint64_t prime_bound,
                              unsigned threads = 1);

// k0 of assembled(m) for m = 1..blocks, indexed by m.  Each cokernel is
// computed from the full assembled matrix, not by summing per-block
// results.
GroupSequence k0_sequence(const TruncationFamily& fam);

struct ScanRow {
  std::uint64_t prime = 0;
  Int point_count;
  Int raw_det;     // det(1 - assembled(m)^t), as a running block product
  Rat normalized;  // prod over blocks so far of det_p / p
  bool zero_flag = false;
};

struct ScanReport {
  std::vector<ScanRow> rows;
};

// Per-truncation determinants of 1 - A_m^t.  raw_det multiplies the
// per-block determinants, which agrees with the determinant of the
// assembled matrix by block-diagonality; the acceptance suite checks the
// two routes against each other.
ScanReport conjecture_scan(const TruncationFamily& fam);

}  // namespace ckzeta
