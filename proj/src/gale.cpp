#include "hypertoric/gale.hpp"

#include "hypertoric/error.hpp"
#include "hypertoric/linalg.hpp"

namespace hypertoric::gale {

namespace {

std::string one_based(const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(idx[k] + 1);
  }
  return out + "}";
}

std::optional<std::size_t> first_zero_row(const IntMatrix& M) {
  for (std::size_t i = 0; i < M.rows(); ++i)
    if (M.row_is_zero(i)) return i;
  return std::nullopt;
}

}  // namespace

GalePair gale_dual_of_A(const IntMatrix& A) {
  const std::size_t d = A.rows();
  const std::size_t n = A.cols();
  if (linalg::rank(A) != d) {
    throw Error(ErrorCode::RankDeficient, "A has rank " + std::to_string(linalg::rank(A)) +
                                              ", expected " + std::to_string(d));
  }
  if (auto bad = linalg::find_bad_minor(A)) {
    throw Error(ErrorCode::NotUnimodular,
                "minor on columns " + one_based(*bad) + " is " +
                    linalg::determinant(A.select_columns(*bad)).get_str());
  }
  AbelianGroup coker = linalg::cokernel(A);
  if (!coker.is_trivial()) {
    throw Error(ErrorCode::NotSurjective, "Z^d / image(A) is " + coker.to_string());
  }
  if (n == d) throw Error(ErrorCode::ZeroBRow, "n = d, the kernel of A is zero");
  IntMatrix B = linalg::kernel_basis(A);
  if (auto j = first_zero_row(B)) {
    throw Error(ErrorCode::ZeroBRow, "row " + std::to_string(*j + 1) + " of B is zero");
  }
  return GalePair{A, std::move(B)};
}

GalePair gale_dual_of_B(const IntMatrix& B) {
  const std::size_t k = B.cols();
  if (linalg::rank(B) != k) {
    throw Error(ErrorCode::RankDeficient, "B has rank " + std::to_string(linalg::rank(B)) +
                                              ", expected " + std::to_string(k));
  }
  if (k == 0) throw Error(ErrorCode::ZeroBRow, "B has no columns");
  if (auto j = first_zero_row(B)) {
    throw Error(ErrorCode::ZeroBRow, "row " + std::to_string(*j + 1) + " of B is zero");
  }
  if (auto bad = linalg::find_bad_minor(B)) {
    throw Error(ErrorCode::NotUnimodular,
                "minor on rows " + one_based(*bad) + " of B is " +
                    linalg::determinant(B.select_rows(*bad)).get_str());
  }
  IntMatrix A = linalg::kernel_basis(B.transpose()).transpose();
  if (A.rows() == 0) A = IntMatrix(0, B.rows());
  return GalePair{std::move(A), B};
}

std::vector<Diagnostic> verify_gale_pair(const IntMatrix& A, const IntMatrix& B) {
  std::vector<Diagnostic> out;
  if (A.cols() != B.rows()) {
    out.push_back({"ShapeMismatch", "A has " + std::to_string(A.cols()) + " columns, B has " +
                                        std::to_string(B.rows()) + " rows"});
    return out;
  }
  const std::size_t n = A.cols();
  const std::size_t d = A.rows();
  if (!(A * B).is_zero()) out.push_back({"NotComplex", "A * B is not zero"});
  const std::size_t rank_a = linalg::rank(A);
  const std::size_t rank_b = linalg::rank(B);
  if (rank_a != d || rank_b != B.cols()) {
    out.push_back({"RankDeficient", "rank A = " + std::to_string(rank_a) + " of " +
                                        std::to_string(d) + ", rank B = " +
                                        std::to_string(rank_b) + " of " +
                                        std::to_string(B.cols())});
  }
  if (d + B.cols() != n) {
    out.push_back({"NotExact", "d + (n - d) = " + std::to_string(d + B.cols()) +
                                   " but n = " + std::to_string(n)});
  }
  AbelianGroup coker_a = linalg::cokernel(A);
  if (!coker_a.is_trivial())
    out.push_back({"NotSurjective", "Z^d / image(A) is " + coker_a.to_string()});
  if (!linalg::cokernel(B).torsion().empty())
    out.push_back({"NotSaturated", "columns of B span a non-saturated lattice"});
  if (auto bad = linalg::find_bad_minor(A)) {
    out.push_back({"NotUnimodular", "minor on columns " + one_based(*bad)});
  } else if (rank_a != std::min(A.rows(), A.cols())) {
    out.push_back({"NotUnimodular", "A is not of full rank"});
  }
  if (auto j = first_zero_row(B))
    out.push_back({"ZeroBRow", "row " + std::to_string(*j + 1) + " of B is zero"});
  return out;
}

Essential essentialize(const IntMatrix& B) {
  Essential out;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < B.rows(); ++i) {
    if (B.row_is_zero(i)) {
      out.removed.push_back(i);
    } else {
      keep.push_back(i);
    }
  }
  out.B = B.select_rows(keep);
  return out;
}

}  // namespace hypertoric::gale
