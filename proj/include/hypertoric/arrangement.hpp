#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypertoric/gale.hpp"
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/matroid.hpp"

namespace hypertoric::arrangement {

/// Rows of B grouped up to sign. Row j of B equals signs[j] times row k of
/// `representatives` when j belongs to classes[k].
struct ParallelData {
  std::vector<std::vector<std::size_t>> classes;  ///< ordered by least index
  std::vector<std::size_t> multiplicities;
  IntMatrix representatives;  ///< s x (n-d), first nonzero entry positive
  std::vector<int> signs;     ///< per row of B, +1 or -1

  std::size_t class_count() const noexcept { return classes.size(); }
  std::vector<std::size_t> class_of() const;  ///< row of B -> class index
};

/// Throws ZeroBRow for a zero row and NonUnitRatio when two rows are
/// proportional with a ratio other than +-1.
ParallelData parallel_classes(const IntMatrix& B);

struct Simplification {
  IntMatrix B_bar;
  ParallelData data;
};

Simplification simplify(const IntMatrix& B);

bool is_simple(const IntMatrix& B);

struct StratumInfo {
  matroid::Flat flat;
  std::size_t stratum_dim = 0;
  bool multiplicated = false;
  std::string slice_note;  ///< "A_k surface slice" on multiplicated rank-1 flats
};

/// One stratum per flat of the row matroid of B, in flat order.
std::vector<StratumInfo> strata(const gale::GalePair& pair,
                                std::size_t flat_limit = matroid::kDefaultFlatLimit);

/// Complex codimension of the singular locus; nullopt when smooth.
std::optional<std::size_t> sing_codim(const gale::GalePair& pair,
                                      std::size_t flat_limit = matroid::kDefaultFlatLimit);

/// Every flat other than the whole ground set has |F| = rank F. Holds
/// vacuously for smooth data.
bool has_isolated_singularities(const gale::GalePair& pair,
                                std::size_t flat_limit = matroid::kDefaultFlatLimit);

/// Hyperplane i is <b_i, x> = -offsets[i].
struct AffineArrangement {
  IntMatrix B;
  IntVector offsets;
};

/// offsets is one integral solution of A x = alpha (witness dependent).
/// Throws NoIntegralSolution or ShapeMismatch.
AffineArrangement affine_offsets(const gale::GalePair& pair, const IntVector& alpha);

/// alpha avoids the span of every rank-(d-1) flat of the column matroid of A.
bool is_generic(const gale::GalePair& pair, const IntVector& alpha,
                std::size_t flat_limit = matroid::kDefaultFlatLimit);

}  // namespace hypertoric::arrangement
