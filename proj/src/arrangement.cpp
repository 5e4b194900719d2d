#include "hypertoric/arrangement.hpp"

#include <algorithm>

#include "hypertoric/error.hpp"
#include "hypertoric/linalg.hpp"

namespace hypertoric::arrangement {

namespace {

// Sign that makes the first nonzero entry positive.
int normalizing_sign(const IntVector& row) {
  for (const auto& x : row)
    if (x != 0) return sgn(x) < 0 ? -1 : 1;
  return 1;
}

bool proportional(const IntVector& u, const IntVector& v) {
  std::size_t p = 0;
  while (p < u.size() && u[p] == 0) ++p;
  if (p == u.size()) return true;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[p] * v[i] != v[p] * u[i]) return false;
  return true;
}

}  // namespace

std::vector<std::size_t> ParallelData::class_of() const {
  std::vector<std::size_t> out(signs.size());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (std::size_t j : classes[k]) out[j] = k;
  return out;
}

ParallelData parallel_classes(const IntMatrix& B) {
  ParallelData data;
  std::vector<IntVector> reps;
  data.signs.resize(B.rows());
  for (std::size_t j = 0; j < B.rows(); ++j) {
    if (B.row_is_zero(j))
      throw Error(ErrorCode::ZeroBRow, "row " + std::to_string(j + 1) + " of B is zero");
    IntVector row = B.row(j);
    const int sign = normalizing_sign(row);
    if (sign < 0)
      for (auto& x : row) x = -x;
    data.signs[j] = sign;
    std::size_t k = 0;
    for (; k < reps.size(); ++k) {
      if (!proportional(reps[k], row)) continue;
      if (reps[k] != row) {
        throw Error(ErrorCode::NonUnitRatio, "rows " +
                                                 std::to_string(data.classes[k].front() + 1) +
                                                 " and " + std::to_string(j + 1) +
                                                 " of B are proportional with ratio other than +-1");
      }
      break;
    }
    if (k == reps.size()) {
      reps.push_back(row);
      data.classes.emplace_back();
    }
    data.classes[k].push_back(j);
  }
  for (const auto& c : data.classes) data.multiplicities.push_back(c.size());
  data.representatives = IntMatrix::from_rows(reps, B.cols());
  return data;
}

Simplification simplify(const IntMatrix& B) {
  Simplification out;
  out.data = parallel_classes(B);
  out.B_bar = out.data.representatives;
  return out;
}

bool is_simple(const IntMatrix& B) {
  const ParallelData data = parallel_classes(B);
  return data.class_count() == B.rows();
}

std::vector<StratumInfo> strata(const gale::GalePair& pair, std::size_t flat_limit) {
  const matroid::VectorMatroid m(pair.B.transpose());
  const std::size_t k = pair.B.cols();
  std::vector<StratumInfo> out;
  for (auto& flat : matroid::all_flats(m, flat_limit)) {
    StratumInfo info;
    info.stratum_dim = 2 * (k - flat.rank);
    info.multiplicated = flat.elements.size() >= flat.rank + 1;
    if (flat.rank == 1 && flat.elements.size() >= 2)
      info.slice_note = "A_" + std::to_string(flat.elements.size() - 1) + " surface slice";
    info.flat = std::move(flat);
    out.push_back(std::move(info));
  }
  return out;
}

std::optional<std::size_t> sing_codim(const gale::GalePair& pair, std::size_t flat_limit) {
  std::optional<std::size_t> best;
  for (const auto& s : strata(pair, flat_limit)) {
    if (!s.multiplicated) continue;
    const std::size_t codim = 2 * s.flat.rank;
    if (!best || codim < *best) best = codim;
  }
  return best;
}

bool has_isolated_singularities(const gale::GalePair& pair, std::size_t flat_limit) {
  const std::size_t n = pair.B.rows();
  for (const auto& s : strata(pair, flat_limit)) {
    if (s.flat.elements.size() == n) continue;
    if (s.flat.elements.size() != s.flat.rank) return false;
  }
  return true;
}

AffineArrangement affine_offsets(const gale::GalePair& pair, const IntVector& alpha) {
  if (alpha.size() != pair.A.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "alpha has length " + std::to_string(alpha.size()) +
                                              ", expected d = " + std::to_string(pair.A.rows()));
  }
  auto lift = linalg::solve_integral(pair.A, alpha);
  if (!lift) throw Error(ErrorCode::NoIntegralSolution, "A x = alpha has no integral solution");
  return AffineArrangement{pair.B, std::move(*lift)};
}

bool is_generic(const gale::GalePair& pair, const IntVector& alpha, std::size_t flat_limit) {
  const std::size_t d = pair.A.rows();
  if (alpha.size() != d) {
    throw Error(ErrorCode::ShapeMismatch, "alpha has length " + std::to_string(alpha.size()) +
                                              ", expected d = " + std::to_string(d));
  }
  if (d == 0) return true;
  const matroid::VectorMatroid m(pair.A);
  IntMatrix alpha_col = IntMatrix::from_columns({alpha}, d);
  for (const auto& flat : matroid::all_flats(m, flat_limit)) {
    if (flat.rank + 1 != d) continue;
    IntMatrix span = pair.A.select_columns(flat.elements);
    if (linalg::rank(span.hconcat(alpha_col)) == flat.rank) return false;
  }
  return true;
}

}  // namespace hypertoric::arrangement
