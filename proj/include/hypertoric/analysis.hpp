#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypertoric/abelian_group.hpp"
#include "hypertoric/arrangement.hpp"
#include "hypertoric/fungroup.hpp"
#include "hypertoric/gale.hpp"
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/matroid.hpp"

namespace hypertoric {

enum class MatrixKind { A, B };

struct Config {
  std::size_t flat_limit = matroid::kDefaultFlatLimit;
  std::size_t iso_limit = matroid::kDefaultIsoLimit;
  std::uint64_t oracle_bound = fungroup::kDefaultOracleBound;
};

struct HypertoricDatum {
  gale::GalePair pair;
  arrangement::ParallelData parallel;
};

/// Validates either side and builds the datum.
HypertoricDatum make_datum(const IntMatrix& matrix, MatrixKind kind);

struct Block {
  std::vector<std::size_t> columns;  ///< 0-based, input order
  std::size_t n = 0;
  std::size_t d = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

struct DecompositionReport {
  std::size_t p = 0;
  std::vector<std::size_t> loops;
  std::vector<Block> blocks;  ///< ordered by least column

  std::size_t r() const noexcept { return blocks.size(); }
  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

DecompositionReport decompose(const IntMatrix& A);
/// A single block and no loops, or a single loop and nothing else.
bool is_irreducible(const DecompositionReport& dec);
bool is_irreducible(const IntMatrix& A);
/// p(2p - 1) + r.
std::size_t two_form_dim(const DecompositionReport& dec);
std::size_t two_form_dim(const IntMatrix& A);

struct UniversalCoverDatum {
  IntMatrix A_under;  ///< (d - (n - s)) x s
  IntMatrix B_bar;    ///< s x (n - d)
  std::vector<std::size_t> multiplicities;
  AbelianGroup deck;
  Integer gamma_order;
  friend bool operator==(const UniversalCoverDatum&, const UniversalCoverDatum&) = default;
};

UniversalCoverDatum universal_cover(const HypertoricDatum& datum);
UniversalCoverDatum universal_cover(const IntMatrix& A);

struct DiagramCheck {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

/// Builds B0 (e_k -> sum_{j in F_k} eps_j e_j) and the injection i with
/// i(e_t) = A B0 x_t where A_under x_t = e_t, then checks B0 B_bar = B,
/// i A_under = A B0, rank i = rows(A_under) and coker i free of rank n - s.
DiagramCheck verify_simplification_diagram(const IntMatrix& A);
/// Same check against caller-supplied simplification data.
DiagramCheck verify_simplification_diagram(const gale::GalePair& pair, const IntMatrix& B_bar,
                                           const arrangement::ParallelData& data,
                                           const IntMatrix& A_under);

struct MomentTerm {
  Integer coefficient;
  std::size_t variable = 0;  ///< the pair (z_j, w_j), 0-based
};

struct MomentIdeal {
  std::vector<std::vector<MomentTerm>> polynomials;  ///< one per row of A
  /// One polynomial per line, e.g. "z1*w1 + z2*w2 - 2*z3*w3".
  std::string text() const;
};

MomentIdeal moment_ideal(const IntMatrix& A);

/// Matroid isomorphism witness between M(A) and M(A2); nullopt when n
/// differs or none exists.
std::optional<std::vector<std::size_t>> classify_equal(const IntMatrix& A, const IntMatrix& A2,
                                                       std::size_t iso_limit =
                                                           matroid::kDefaultIsoLimit);

struct StratumCount {
  std::size_t dim = 0;
  std::size_t count = 0;
  friend bool operator==(const StratumCount&, const StratumCount&) = default;
};

struct AnalysisReport {
  IntMatrix input;
  MatrixKind kind = MatrixKind::A;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t dim = 0;
  bool smooth = false;
  bool simple = false;
  std::optional<std::size_t> sing_codim;
  bool isolated = false;
  AbelianGroup pi1;
  DecompositionReport decomposition;
  bool irreducible = false;
  std::size_t two_form_dim = 0;
  UniversalCoverDatum cover;
  std::vector<StratumCount> strata_summary;  ///< ascending dim

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const IntMatrix& matrix, MatrixKind kind = MatrixKind::A,
                       const Config& config = {});
AnalysisReport analyze(const HypertoricDatum& datum, const IntMatrix& input, MatrixKind kind,
                       const Config& config = {});

}  // namespace hypertoric
