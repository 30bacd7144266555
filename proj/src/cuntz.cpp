#include "ckzeta/cuntz.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <variant>

#include "ckzeta/linalg.hpp"

namespace ckzeta {

CKValidation validate_ck(const IntMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("validate_ck: matrix must be square");
  }
  const std::size_t n = m.rows();
  CKValidation v;
  v.nonnegative = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0) v.nonnegative = false;
    }
  }

  v.permutation = true;
  for (std::size_t i = 0; i < n && v.permutation; ++i) {
    std::size_t row_ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) == 1) {
        ++row_ones;
      } else if (m(i, j) != 0) {
        v.permutation = false;
      }
    }
    if (row_ones != 1) v.permutation = false;
  }
  for (std::size_t j = 0; j < n && v.permutation; ++j) {
    std::size_t col_ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, j) == 1) ++col_ones;
    }
    if (col_ones != 1) v.permutation = false;
  }

  // Boolean reachability: (I + |m|)^(n-1) must have an all-positive
  // pattern for the transition graph to be strongly connected.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0) reach[i][j] = true;
    }
  }
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!reach[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (reach[k][j]) next[i][j] = true;
        }
      }
    }
    reach = std::move(next);
    // (I + |m|)^(2^step) dominates the needed power once 2^step >= n-1
    if ((std::size_t{1} << step) >= n - 1) break;
  }
  bool all = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!reach[i][j]) all = false;
    }
  }
  v.irreducible = all && !v.permutation;
  return v;
}

namespace {

IntMatrix one_minus_transpose(const IntMatrix& m) {
  return IntMatrix::identity(m.rows()) - m.transpose();
}

}  // namespace

KTheoryPair k_theory(const IntMatrix& m) {
  if (!m.is_square() || m.empty()) {
    throw std::invalid_argument("k_theory: matrix must be square and nonempty");
  }
  IntMatrix w = one_minus_transpose(m);
  KTheoryPair kt;
  kt.k0 = cokernel(w);
  kt.k1 = FgAbelianGroup::free_of_rank(kernel_basis(w).size());
  return kt;
}

IntMatrix realize_point_count(const EllipticCurve& e, std::uint64_t p) {
  PointCount pc = ec_count(e, p);
  IntMatrix m(2, 2);
  m(0, 1) = -Int(static_cast<unsigned long>(p));
  m(1, 0) = 1;
  m(1, 1) = pc.trace;
  return m;
}

IntMatrix TruncationFamily::assembled(std::size_t m) const {
  if (m > blocks.size()) {
    throw std::invalid_argument("truncation index exceeds family size");
  }
  std::vector<IntMatrix> mats;
  mats.reserve(m);
  for (std::size_t i = 0; i < m; ++i) mats.push_back(blocks[i].matrix);
  return IntMatrix::block_diagonal(mats);
}

TruncationFamily build_family(const EllipticCurve& e,
                              std::uint64_t prime_bound, unsigned threads) {
  TruncationFamily fam;
  fam.curve_spec = e.spec_string();
  fam.bound = prime_bound;
  const std::vector<std::uint64_t> primes = primes_up_to(prime_bound);
  using Slot = std::variant<TruncationFamily::Block,
                            TruncationFamily::SkippedPrime>;
  std::vector<std::optional<Slot>> slots(primes.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t p = primes[i];
      if (!e.good_reduction(p)) {
        TruncationFamily::SkippedPrime sk;
        sk.prime = p;
        sk.reason = p <= 3 ? "short Weierstrass model unusable in "
                             "characteristic " +
                                 std::to_string(p)
                           : "bad reduction: prime divides the discriminant";
        slots[i] = Slot(std::move(sk));
        continue;
      }
      PointCount pc = ec_count(e, p);
      TruncationFamily::Block b;
      b.prime = p;
      b.point_count = pc.count;
      b.matrix = realize_point_count(e, p);
      slots[i] = Slot(std::move(b));
    }
  };

  if (threads <= 1 || primes.size() < 2) {
    work(0, primes.size());
  } else {
    const std::size_t nt = std::min<std::size_t>(threads, primes.size());
    std::vector<std::thread> pool;
    const std::size_t chunk = (primes.size() + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
      std::size_t lo = t * chunk;
      std::size_t hi = std::min(primes.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  // Assembly in prime order, independent of who computed what.
  for (auto& slot : slots) {
    if (auto* b = std::get_if<TruncationFamily::Block>(&*slot)) {
      fam.blocks.push_back(std::move(*b));
    } else {
      fam.skipped.push_back(
          std::move(std::get<TruncationFamily::SkippedPrime>(*slot)));
    }
  }
  return fam;
}

GroupSequence k0_sequence(const TruncationFamily& fam) {
  GroupSequence seq;
  for (std::size_t m = 1; m <= fam.blocks.size(); ++m) {
    seq.append(m, k_theory(fam.assembled(m)).k0);
  }
  return seq;
}

ScanReport conjecture_scan(const TruncationFamily& fam) {
  ScanReport report;
  Int det_product = 1;
  Rat normalized = 1;
  for (const auto& b : fam.blocks) {
    if (b.prime == 0) {
      throw std::invalid_argument("scan blocks must carry a prime label");
    }
    Int block_det = determinant(one_minus_transpose(b.matrix));
    det_product *= block_det;
    Rat factor(block_det, Int(static_cast<unsigned long>(b.prime)));
    factor.canonicalize();
    normalized *= factor;
    ScanRow row;
    row.prime = b.prime;
    row.point_count = b.point_count;
    row.raw_det = det_product;
    row.normalized = normalized;
    row.zero_flag = det_product == 0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ckzeta
