#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "hypertoric/analysis.hpp"

namespace hypertoric::generators {

/// [I_{l-1} | -1]; l >= 1.
IntMatrix atype_A(std::size_t l);
/// [1, ..., 1] of length s >= 2.
IntMatrix minnilp_A(std::size_t s);
/// B with l_k copies of e_k for k < s followed by l_s copies of -(1, ..., 1);
/// s >= 2, every l_k >= 1.
IntMatrix omin_B(const std::vector<std::size_t>& multiplicities);
/// Signed incidence matrix of a connected multigraph on vertices 1..V with
/// the last vertex row removed. Self-loops give zero columns.
IntMatrix graph_A(const std::vector<std::pair<std::size_t, std::size_t>>& edges);

struct Example {
  IntMatrix matrix;
  MatrixKind kind = MatrixKind::A;
  HypertoricDatum datum;
};

/// kind is one of "atype", "minnilp", "omin", "graph". For "graph" the
/// parameters are a flat list of 1-based endpoint pairs. Throws BadParams.
Example generate_example(std::string_view kind, const std::vector<long>& params);

}  // namespace hypertoric::generators
