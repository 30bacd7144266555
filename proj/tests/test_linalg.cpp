#include <doctest.h>

#include <cstddef>
#include <random>
#include <vector>

#include "ckzeta/int_matrix.hpp"
#include "ckzeta/linalg.hpp"
#include "ckzeta/polynomial.hpp"

using namespace ckzeta;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                        int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Cofactor expansion along the first row; exponential, for cross-checks
// on small matrices only.
Int det_cofactor(const IntMatrix& m) {
  std::size_t n = m.rows();
  REQUIRE(m.cols() == n);
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, cc++) = m(i, k);
      }
    }
    Int term = m(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

bool is_unimodular(const IntMatrix& m) {
  Int d = determinant(m);
  return d == 1 || d == -1;
}

// gcd of all k x k minors, 0 when every minor vanishes.
Int minor_gcd(const IntMatrix& m, std::size_t k) {
  Int g = 0;
  // enumerate k-subsets of rows and columns by odometer
  std::vector<std::size_t> rs(k), cs(k);
  for (std::size_t i = 0; i < k; ++i) rs[i] = i;
  auto advance = [](std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k2 = s.size();
    for (std::size_t i = k2; i-- > 0;) {
      if (s[i] + (k2 - i) < n) {
        ++s[i];
        for (std::size_t j = i + 1; j < k2; ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    for (std::size_t i = 0; i < k; ++i) cs[i] = i;
    do {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      Int d = det_cofactor(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (advance(cs, m.cols()));
  } while (advance(rs, m.rows()));
  return g;
}

}  // namespace

TEST_CASE("smith decomposition properties on random matrices") {
  std::mt19937_64 rng(771001);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int iter = 0; iter < 300; ++iter) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng));
    SmithDecomposition sd = smith_normal_form(a);
    CHECK(sd.U.rows() == a.rows());
    CHECK(sd.V.rows() == a.cols());
    CHECK(sd.U * a * sd.V == sd.D);
    CHECK(is_unimodular(sd.U));
    CHECK(is_unimodular(sd.V));
    Int prev = 0;
    bool seen_zero = false;
    for (std::size_t i = 0; i < sd.D.rows(); ++i)
      for (std::size_t j = 0; j < sd.D.cols(); ++j) {
        if (i != j) {
          CHECK(sd.D(i, j) == 0);
          continue;
        }
        const Int& d = sd.D(i, j);
        CHECK(d >= 0);
        if (d == 0) {
          seen_zero = true;
        } else {
          CHECK_FALSE(seen_zero);  // nonzero entries come first
          if (prev != 0) CHECK(d % prev == 0);
          prev = d;
        }
      }
  }
}

TEST_CASE("smith diagonal matches the minor-gcd invariants") {
  std::mt19937_64 rng(771002);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int iter = 0; iter < 60; ++iter) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -6, 6);
    SmithDecomposition sd = smith_normal_form(a);
    std::size_t n = std::min(a.rows(), a.cols());
    Int running = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      Int g = minor_gcd(a, k);
      // product d_1 ... d_k equals the gcd of the k x k minors
      Int prod = running * sd.D(k - 1, k - 1);
      if (g == 0) {
        CHECK(sd.D(k - 1, k - 1) == 0);
      } else {
        CHECK(prod == g);
        running = prod;
      }
    }
  }
}

TEST_CASE("invariant_factors equals the nonzero smith diagonal") {
  std::mt19937_64 rng(771003);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng));
    SmithDecomposition sd = smith_normal_form(a);
    std::vector<Int> expect;
    for (std::size_t i = 0; i < std::min(sd.D.rows(), sd.D.cols()); ++i)
      if (sd.D(i, i) != 0) expect.push_back(sd.D(i, i));
    CHECK(invariant_factors(a) == expect);
  }
}

TEST_CASE("smith normal form of fixed matrices") {
  {
    IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SmithDecomposition sd = smith_normal_form(a);
    CHECK(sd.D(0, 0) == 2);
    CHECK(sd.D(1, 1) == 2);
    CHECK(sd.D(2, 2) == 156);
  }
  {
    IntMatrix z(2, 3);
    SmithDecomposition sd = smith_normal_form(z);
    CHECK(sd.D.is_zero());
    CHECK(invariant_factors(z).empty());
  }
  CHECK_THROWS_AS(smith_normal_form(IntMatrix()), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(771004);
  std::uniform_int_distribution<std::size_t> dim(0, 5);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t n = dim(rng);
    IntMatrix a = random_matrix(rng, n, n);
    CHECK(determinant(a) == det_cofactor(a));
  }
  CHECK(determinant(IntMatrix()) == 1);
  CHECK(determinant(IntMatrix::identity(7)) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(771005);
  for (int iter = 0; iter < 100; ++iter) {
    IntMatrix a = random_matrix(rng, 4, 4);
    IntMatrix b = random_matrix(rng, 4, 4);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("kernel_basis spans the kernel") {
  std::mt19937_64 rng(771006);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng));
    auto basis = kernel_basis(a);
    // rank from the smith diagonal
    SmithDecomposition sd = smith_normal_form(a);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(sd.D.rows(), sd.D.cols()); ++i)
      if (sd.D(i, i) != 0) ++rank;
    CHECK(basis.size() == a.cols() - rank);
    for (const auto& v : basis) {
      REQUIRE(v.size() == a.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Int dot = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) dot += a(i, j) * v[j];
        CHECK(dot == 0);
      }
      bool nontrivial = false;
      for (const auto& x : v) nontrivial = nontrivial || x != 0;
      CHECK(nontrivial);
    }
  }
}

TEST_CASE("kernel of a forced-singular product is nontrivial") {
  std::mt19937_64 rng(771007);
  for (int iter = 0; iter < 50; ++iter) {
    IntMatrix b = random_matrix(rng, 4, 2);
    IntMatrix c = random_matrix(rng, 2, 4);
    IntMatrix a = b * c;  // rank <= 2
    CHECK(kernel_basis(a).size() >= 2);
  }
}

TEST_CASE("char_poly matches determinant evaluation") {
  std::mt19937_64 rng(771008);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t n = dim(rng);
    IntMatrix a = random_matrix(rng, n, n);
    IntPolynomial cp = char_poly(a);
    CHECK(cp.degree() == static_cast<int>(n));
    for (int s0 = -3; s0 <= 3; ++s0) {
      IntMatrix shifted = a;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= s0;
      CHECK(cp(Int(s0)) == determinant(shifted));  // det(a - s I) at s = s0
    }
    // constant term is det(a), trace sits one below the top
    CHECK(cp.coeff(0) == determinant(a));
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
    Int top = cp.coeff(n);
    Int sub = cp.coeff(n - 1);
    CHECK(top == (n % 2 == 0 ? 1 : -1));
    CHECK(sub == (n % 2 == 0 ? -trace : trace));
  }
}

TEST_CASE("hermite normal form properties") {
  std::mt19937_64 rng(771009);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int iter = 0; iter < 300; ++iter) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng));
    HermiteDecomposition hd = hermite_normal_form(a);
    CHECK(hd.U * a == hd.H);
    CHECK(is_unimodular(hd.U));
    // row-style: pivot columns strictly increase, pivots positive,
    // entries above a pivot lie in [0, pivot)
    std::size_t last_pivot_col = 0;
    bool first = true;
    bool zero_row_seen = false;
    for (std::size_t i = 0; i < hd.H.rows(); ++i) {
      std::size_t j = 0;
      while (j < hd.H.cols() && hd.H(i, j) == 0) ++j;
      if (j == hd.H.cols()) {
        zero_row_seen = true;
        continue;
      }
      CHECK_FALSE(zero_row_seen);  // zero rows trail
      if (!first) CHECK(j > last_pivot_col);
      first = false;
      last_pivot_col = j;
      CHECK(hd.H(i, j) > 0);
      for (std::size_t r = 0; r < i; ++r) {
        CHECK(hd.H(r, j) >= 0);
        CHECK(hd.H(r, j) < hd.H(i, j));
      }
    }
  }
}

TEST_CASE("hermite then smith preserves the invariant factors") {
  std::mt19937_64 rng(771010);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng));
    HermiteDecomposition hd = hermite_normal_form(a);
    CHECK(invariant_factors(hd.H) == invariant_factors(a));
  }
}

TEST_CASE("hermite normal form of a fixed matrix") {
  IntMatrix a = IntMatrix::from_rows({{2, 3, 6, 2}, {5, 6, 1, 6}, {8, 3, 1, 1}});
  HermiteDecomposition hd = hermite_normal_form(a);
  CHECK(hd.U * a == hd.H);
  CHECK(hd.H == IntMatrix::from_rows({{1, 0, 50, -11}, {0, 3, 28, -2}, {0, 0, 61, -13}}));
}
