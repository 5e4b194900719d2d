#include "hypertoric/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypertoric/error.hpp"

namespace hypertoric::generators {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::BadParams, msg); }

std::size_t positive(long x, const char* what) {
  if (x < 1) bad(std::string(what) + " must be positive, got " + std::to_string(x));
  return static_cast<std::size_t>(x);
}

}  // namespace

IntMatrix atype_A(std::size_t l) {
  if (l < 1) bad("atype needs l >= 1");
  IntMatrix A(l - 1, l);
  for (std::size_t i = 0; i + 1 < l; ++i) {
    A(i, i) = 1;
    A(i, l - 1) = -1;
  }
  return A;
}

IntMatrix minnilp_A(std::size_t s) {
  if (s < 2) bad("minnilp needs s >= 2");
  IntMatrix A(1, s);
  for (std::size_t j = 0; j < s; ++j) A(0, j) = 1;
  return A;
}

IntMatrix omin_B(const std::vector<std::size_t>& multiplicities) {
  const std::size_t s = multiplicities.size();
  if (s < 2) bad("omin needs at least two multiplicities");
  if (std::find(multiplicities.begin(), multiplicities.end(), 0) != multiplicities.end())
    bad("omin multiplicities must be positive");
  const std::size_t n = std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
  IntMatrix B(n, s - 1);
  std::size_t row = 0;
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t c = 0; c < multiplicities[k]; ++c, ++row) {
      for (std::size_t j = 0; j + 1 < s; ++j) {
        if (k + 1 == s) {
          B(row, j) = -1;
        } else if (j == k) {
          B(row, j) = 1;
        }
      }
    }
  }
  return B;
}

IntMatrix graph_A(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (edges.empty()) bad("graph needs at least one edge");
  std::size_t v = 0;
  for (auto [a, b] : edges) {
    if (a == 0 || b == 0) bad("graph vertices are numbered from 1");
    v = std::max({v, a, b});
  }
  std::vector<std::size_t> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) parent[find(a - 1)] = find(b - 1);
  for (std::size_t x = 0; x < v; ++x)
    if (find(x) != find(0)) bad("graph is not connected (vertex " + std::to_string(x + 1) + ")");

  IntMatrix A(v - 1, edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    if (a == b) continue;
    if (a < v) A(a - 1, e) += 1;
    if (b < v) A(b - 1, e) -= 1;
  }
  return A;
}

Example generate_example(std::string_view kind, const std::vector<long>& params) {
  Example ex;
  if (kind == "atype") {
    if (params.size() != 1) bad("atype takes one parameter l");
    ex.matrix = atype_A(positive(params[0], "l"));
  } else if (kind == "minnilp") {
    if (params.size() != 1) bad("minnilp takes one parameter s");
    ex.matrix = minnilp_A(positive(params[0], "s"));
  } else if (kind == "omin") {
    std::vector<std::size_t> ls;
    for (long x : params) ls.push_back(positive(x, "multiplicity"));
    ex.matrix = omin_B(ls);
    ex.kind = MatrixKind::B;
  } else if (kind == "graph") {
    if (params.empty() || params.size() % 2 != 0) bad("graph takes an even list of endpoints");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < params.size(); i += 2)
      edges.emplace_back(positive(params[i], "vertex"), positive(params[i + 1], "vertex"));
    ex.matrix = graph_A(edges);
  } else {
    bad("unknown example kind '" + std::string(kind) + "'");
  }
  ex.datum = make_datum(ex.matrix, ex.kind);
  return ex;
}

}  // namespace hypertoric::generators
