#include "ckzeta/linalg.hpp"

#include <cassert>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

namespace ckzeta {

namespace {

// Position of a nonzero entry of least absolute value in the submatrix
// starting at (t, t), if any.
std::optional<std::pair<std::size_t, std::size_t>> least_nonzero(
    const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  }
  return best;
}

// Diagonalization loop shared by smith_normal_form and invariant_factors.
// When u and v are nonnull, every row operation on d is mirrored on *u and
// every column operation on *v.
void smith_reduce(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  const std::size_t r = d.rows(), c = d.cols();
  const std::size_t steps = r < c ? r : c;
  Int q;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pos = least_nonzero(d, t);
      if (!pos) return;  // the remaining submatrix is zero
      auto [pi, pj] = *pos;
      d.swap_rows(t, pi);
      if (u) u->swap_rows(t, pi);
      d.swap_cols(t, pj);
      if (v) v->swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        q = d(i, t) / d(t, t);
        if (q != 0) {
          d.add_row_multiple(i, t, -q);
          if (u) u->add_row_multiple(i, t, -q);
        }
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        q = d(t, j) / d(t, t);
        if (q != 0) {
          d.add_col_multiple(j, t, -q);
          if (v) v->add_col_multiple(j, t, -q);
        }
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;  // leftovers are smaller than the pivot; redo

      // Pivot must divide the rest of the submatrix, or the invariant
      // factor chain breaks.  Pulling an offending row up makes the next
      // pivot strictly smaller, so this terminates.
      bool fixed = true;
      for (std::size_t i = t + 1; i < r && fixed; ++i) {
        for (std::size_t j = t + 1; j < c && fixed; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            if (u) u->add_row_multiple(t, i, 1);
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  if (m.empty()) {
    throw std::invalid_argument("smith_normal_form: matrix must be nonempty");
  }
  SmithDecomposition s{IntMatrix::identity(m.rows()), m,
                       IntMatrix::identity(m.cols())};
  smith_reduce(s.D, &s.U, &s.V);
  return s;
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
  std::vector<Int> out;
  if (m.empty()) return out;
  IntMatrix d = m;
  smith_reduce(d, nullptr, nullptr);
  const std::size_t steps = d.rows() < d.cols() ? d.rows() : d.cols();
  for (std::size_t t = 0; t < steps && d(t, t) != 0; ++t) {
    out.push_back(d(t, t));
  }
  return out;
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant: matrix must be square");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  int sign = 1;
  Int prev = 1, t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && w(i, k) == 0) ++i;
      if (i == n) return 0;
      w.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign < 0 ? Int(-w(n - 1, n - 1)) : w(n - 1, n - 1);
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
  if (m.empty()) {
    throw std::invalid_argument("kernel_basis: matrix must be nonempty");
  }
  SmithDecomposition s = smith_normal_form(m);
  const std::size_t steps = m.rows() < m.cols() ? m.rows() : m.cols();
  std::size_t rank = 0;
  while (rank < steps && s.D(rank, rank) != 0) ++rank;
  // m = U^-1 D V^-1, so m x = 0 iff D (V^-1 x) = 0: the kernel is spanned
  // by the columns of V past the rank.
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = rank; j < m.cols(); ++j) {
    std::vector<Int> col(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) col[i] = s.V(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("char_poly: matrix must be square");
  }
  const std::size_t n = m.rows();
  if (n == 0) return IntPolynomial::constant(1);
  // Faddeev-LeVerrier: coefficients of det(s I - m), each trace division
  // is exact over Z.
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMatrix w = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    w = m * w;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += w(i, i);
    Int ck;
    mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -ck;
    for (std::size_t i = 0; i < n; ++i) w(i, i) += c[n - k];
  }
  if (n % 2 == 1) {
    for (Int& x : c) x = -x;  // det(m - s I) = (-1)^n det(s I - m)
  }
  return IntPolynomial(std::move(c));
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  if (m.empty()) {
    throw std::invalid_argument(
        "hermite_normal_form: matrix must be nonempty");
  }
  HermiteDecomposition hd{m, IntMatrix::identity(m.rows())};
  IntMatrix& h = hd.H;
  IntMatrix& u = hd.U;
  const std::size_t r = h.rows(), c = h.cols();
  std::size_t piv = 0;
  Int q;
  for (std::size_t j = 0; j < c && piv < r; ++j) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = piv; i < r; ++i) {
        if (h(i, j) == 0) continue;
        if (best == r || abs(h(i, j)) < abs(h(best, j))) best = i;
      }
      if (best == r) break;
      h.swap_rows(piv, best);
      u.swap_rows(piv, best);
      bool clean = true;
      for (std::size_t i = piv + 1; i < r; ++i) {
        if (h(i, j) == 0) continue;
        q = h(i, j) / h(piv, j);
        if (q != 0) {
          h.add_row_multiple(i, piv, -q);
          u.add_row_multiple(i, piv, -q);
        }
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(piv, j) == 0) continue;  // column has no pivot
    if (h(piv, j) < 0) {
      h.negate_row(piv);
      u.negate_row(piv);
    }
    for (std::size_t i = 0; i < piv; ++i) {
      // Floor division leaves the entry above the pivot in [0, pivot).
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(piv, j).get_mpz_t());
      if (q != 0) {
        h.add_row_multiple(i, piv, -q);
        u.add_row_multiple(i, piv, -q);
      }
    }
    ++piv;
  }
  return hd;
}

}  // namespace ckzeta
