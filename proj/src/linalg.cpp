#include "hypertoric/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "exact_small.hpp"
#include "hypertoric/error.hpp"

namespace hypertoric::linalg {

namespace {

// Column pair update: (c, j) <- (x*c + y*j, u*c + v*j), restricted to rows
// [from, rows) of M.
void combine_columns(IntMatrix& M, std::size_t c, std::size_t j, const Integer& x,
                     const Integer& y, const Integer& u, const Integer& v, std::size_t from = 0) {
  Integer new_c, new_j;
  for (std::size_t i = from; i < M.rows(); ++i) {
    new_c = x * M(i, c) + y * M(i, j);
    new_j = u * M(i, c) + v * M(i, j);
    M(i, c) = std::move(new_c);
    M(i, j) = std::move(new_j);
  }
}

void combine_rows(IntMatrix& M, std::size_t r, std::size_t i, const Integer& x, const Integer& y,
                  const Integer& u, const Integer& v) {
  Integer new_r, new_i;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    new_r = x * M(r, j) + y * M(i, j);
    new_i = u * M(r, j) + v * M(i, j);
    M(r, j) = std::move(new_r);
    M(i, j) = std::move(new_i);
  }
}

// col_j -= q * col_c over rows [from, rows).
void subtract_column_multiple(IntMatrix& M, std::size_t j, std::size_t c, const Integer& q,
                              std::size_t from = 0) {
  for (std::size_t i = from; i < M.rows(); ++i) M(i, j) -= q * M(i, c);
}

void negate_column(IntMatrix& M, std::size_t c) {
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, c) = -M(i, c);
}

struct HermiteWork {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivot_rows;  // pivot_rows[k] = row of the pivot in column k
};

HermiteWork hermite(const IntMatrix& M, bool track) {
  HermiteWork w;
  w.H = M;
  if (track) w.U = IntMatrix::identity(M.cols());
  IntMatrix& H = w.H;
  const std::size_t cols = H.cols();
  std::size_t c = 0;
  Integer g, x, y, u, v, q;
  for (std::size_t i = 0; i < H.rows() && c < cols; ++i) {
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (H(i, j) == 0) continue;
      if (H(i, c) == 0) {
        H.swap_cols(c, j);
        if (track) w.U.swap_cols(c, j);
        continue;
      }
      if (mpz_divisible_p(H(i, j).get_mpz_t(), H(i, c).get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, c).get_mpz_t());
        subtract_column_multiple(H, j, c, q, i);
        if (track) subtract_column_multiple(w.U, j, c, q);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), H(i, c).get_mpz_t(),
                 H(i, j).get_mpz_t());
      mpz_divexact(u.get_mpz_t(), H(i, j).get_mpz_t(), g.get_mpz_t());
      u = -u;
      mpz_divexact(v.get_mpz_t(), H(i, c).get_mpz_t(), g.get_mpz_t());
      combine_columns(H, c, j, x, y, u, v, i);
      if (track) combine_columns(w.U, c, j, x, y, u, v);
    }
    if (H(i, c) == 0) continue;
    if (H(i, c) < 0) {
      negate_column(H, c);
      if (track) negate_column(w.U, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, c).get_mpz_t());
      if (q == 0) continue;
      subtract_column_multiple(H, j, c, q, i);
      if (track) subtract_column_multiple(w.U, j, c, q);
    }
    w.pivot_rows.push_back(i);
    ++c;
  }
  return w;
}

// In-place Smith reduction of S; P and Q are updated when non-null.
void smith_reduce(IntMatrix& S, IntMatrix* P, IntMatrix* Q) {
  const std::size_t rows = S.rows();
  const std::size_t cols = S.cols();
  const std::size_t k = std::min(rows, cols);
  Integer g, x, y, u, v, q;
  for (std::size_t t = 0; t < k; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (S(i, j) == 0) continue;
        if (bi == rows || mpz_cmpabs(S(i, j).get_mpz_t(), S(bi, bj).get_mpz_t()) < 0) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) break;
    S.swap_rows(t, bi);
    if (P) P->swap_rows(t, bi);
    S.swap_cols(t, bj);
    if (Q) Q->swap_cols(t, bj);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        if (mpz_divisible_p(S(i, t).get_mpz_t(), S(t, t).get_mpz_t())) {
          mpz_divexact(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
          combine_rows(S, t, i, 1, 0, -q, 1);
          if (P) combine_rows(*P, t, i, 1, 0, -q, 1);
          continue;
        }
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), S(t, t).get_mpz_t(),
                   S(i, t).get_mpz_t());
        mpz_divexact(u.get_mpz_t(), S(i, t).get_mpz_t(), g.get_mpz_t());
        u = -u;
        mpz_divexact(v.get_mpz_t(), S(t, t).get_mpz_t(), g.get_mpz_t());
        combine_rows(S, t, i, x, y, u, v);
        if (P) combine_rows(*P, t, i, x, y, u, v);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        if (mpz_divisible_p(S(t, j).get_mpz_t(), S(t, t).get_mpz_t())) {
          mpz_divexact(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
          subtract_column_multiple(S, j, t, q);
          if (Q) subtract_column_multiple(*Q, j, t, q);
          continue;
        }
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), S(t, t).get_mpz_t(),
                   S(t, j).get_mpz_t());
        mpz_divexact(u.get_mpz_t(), S(t, j).get_mpz_t(), g.get_mpz_t());
        u = -u;
        mpz_divexact(v.get_mpz_t(), S(t, t).get_mpz_t(), g.get_mpz_t());
        combine_columns(S, t, j, x, y, u, v);
        if (Q) combine_columns(*Q, t, j, x, y, u, v);
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < rows && column_clear; ++i) column_clear = S(i, t) == 0;
      if (!column_clear) continue;

      // Divisibility: pull an offending row into the pivot row and repeat.
      std::size_t offender = rows;
      for (std::size_t i = t + 1; i < rows && offender == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
        }
      }
      if (offender == rows) break;
      combine_rows(S, t, offender, 1, 1, 0, 1);
      if (P) combine_rows(*P, t, offender, 1, 1, 0, 1);
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) S(t, j) = -S(t, j);
      if (P)
        for (std::size_t j = 0; j < P->cols(); ++j) (*P)(t, j) = -(*P)(t, j);
    }
  }
}

template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (!visit(idx)) return false;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t p = pos; p < k; ++p) idx[p] = idx[p - 1] + 1;
  }
}

}  // namespace

HermiteForm hnf_column(const IntMatrix& M) {
  HermiteWork w = hermite(M, true);
  return {std::move(w.H), std::move(w.U)};
}

IntMatrix column_lattice_basis(const IntMatrix& M) {
  HermiteWork w = hermite(M, false);
  std::vector<std::size_t> keep(w.pivot_rows.size());
  std::iota(keep.begin(), keep.end(), 0);
  return w.H.select_columns(keep);
}

SmithForm snf(const IntMatrix& M) {
  SmithForm f{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols())};
  smith_reduce(f.S, &f.P, &f.Q);
  return f;
}

std::vector<Integer> smith_diagonal(const IntMatrix& M) {
  const std::size_t k = std::min(M.rows(), M.cols());
  IntMatrix basis = column_lattice_basis(M);
  smith_reduce(basis, nullptr, nullptr);
  std::vector<Integer> diag(k);
  for (std::size_t i = 0; i < basis.cols(); ++i) diag[i] = basis(i, i);
  return diag;
}

IntMatrix kernel_basis(const IntMatrix& M) {
  HermiteWork w = hermite(M, true);
  const std::size_t r = w.pivot_rows.size();
  std::vector<std::size_t> free_cols;
  for (std::size_t j = r; j < M.cols(); ++j) free_cols.push_back(j);
  IntMatrix K = w.U.select_columns(free_cols);
  IntMatrix canonical = column_lattice_basis(K);
  if (canonical.cols() != K.cols()) return K;  // unreachable: K has full column rank
  return canonical;
}

std::size_t rank(const IntMatrix& M) {
  if (M.empty()) return 0;
  if (auto buf = detail::to_i64_buffer(M)) {
    if (auto res = detail::bareiss_i64(*buf, M.rows(), M.cols())) return res->rank;
  }
  std::vector<Integer> data;
  data.reserve(M.rows() * M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) data.push_back(M(i, j));
  return detail::bareiss_big(std::move(data), M.rows(), M.cols()).rank;
}

Integer determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  if (M.rows() == 0) return 1;
  if (auto buf = detail::to_i64_buffer(M)) {
    if (auto res = detail::bareiss_i64(*buf, M.rows(), M.cols()))
      return Integer(static_cast<long>(res->determinant));
  }
  std::vector<Integer> data;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) data.push_back(M(i, j));
  return detail::bareiss_big(std::move(data), M.rows(), M.cols()).determinant;
}

std::optional<std::vector<std::size_t>> find_bad_minor(const IntMatrix& M) {
  const bool by_columns = M.rows() <= M.cols();
  const std::size_t k = by_columns ? M.rows() : M.cols();
  const std::size_t n = by_columns ? M.cols() : M.rows();
  if (k == 0) return std::nullopt;
  std::optional<std::vector<std::size_t>> bad;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
    IntMatrix sub = by_columns ? M.select_columns(idx) : M.select_rows(idx);
    Integer det = determinant(sub);
    if (mpz_cmpabs_ui(det.get_mpz_t(), 1) > 0) {
      bad = idx;
      return false;
    }
    return true;
  });
  return bad;
}

bool is_unimodular(const IntMatrix& M) {
  if (rank(M) != std::min(M.rows(), M.cols())) return false;
  return !find_bad_minor(M).has_value();
}

std::optional<IntVector> solve_integral(const IntMatrix& M, const IntVector& v) {
  if (v.size() != M.rows()) throw Error(ErrorCode::ShapeMismatch, "right-hand side length mismatch");
  HermiteWork w = hermite(M, true);
  IntVector residual = v;
  IntVector y(M.cols());
  std::size_t row = 0;
  Integer q;
  for (std::size_t k = 0; k < w.pivot_rows.size(); ++k) {
    const std::size_t pr = w.pivot_rows[k];
    for (; row < pr; ++row)
      if (residual[row] != 0) return std::nullopt;
    if (!mpz_divisible_p(residual[pr].get_mpz_t(), w.H(pr, k).get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), residual[pr].get_mpz_t(), w.H(pr, k).get_mpz_t());
    y[k] = q;
    for (std::size_t i = pr; i < M.rows(); ++i) residual[i] -= q * w.H(i, k);
    row = pr + 1;
  }
  for (; row < M.rows(); ++row)
    if (residual[row] != 0) return std::nullopt;
  return w.U * y;
}

AbelianGroup cokernel(const IntMatrix& M) {
  std::vector<Integer> diag = smith_diagonal(M);
  return AbelianGroup::from_diagonal(diag, M.rows() - diag.size());
}

IntMatrix row_lattice_canonical(const IntMatrix& M) {
  return column_lattice_basis(M.transpose()).transpose();
}

}  // namespace hypertoric::linalg
