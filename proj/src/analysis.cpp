#include "hypertoric/analysis.hpp"

#include <map>

#include "hypertoric/error.hpp"
#include "hypertoric/linalg.hpp"

namespace hypertoric {

HypertoricDatum make_datum(const IntMatrix& matrix, MatrixKind kind) {
  HypertoricDatum datum;
  datum.pair = kind == MatrixKind::A ? gale::gale_dual_of_A(matrix) : gale::gale_dual_of_B(matrix);
  datum.parallel = arrangement::parallel_classes(datum.pair.B);
  return datum;
}

DecompositionReport decompose(const IntMatrix& A) {
  const matroid::VectorMatroid m(A);
  DecompositionReport out;
  for (auto& cls : matroid::components(m)) {
    if (cls.size() == 1 && A.column_is_zero(cls.front())) {
      out.loops.push_back(cls.front());
      continue;
    }
    Block block;
    block.n = cls.size();
    block.d = m.rank_of(cls);
    block.columns = std::move(cls);
    out.blocks.push_back(std::move(block));
  }
  out.p = out.loops.size();
  return out;
}

bool is_irreducible(const DecompositionReport& dec) {
  return (dec.p == 0 && dec.r() == 1) || (dec.p == 1 && dec.r() == 0);
}

bool is_irreducible(const IntMatrix& A) { return is_irreducible(decompose(A)); }

std::size_t two_form_dim(const DecompositionReport& dec) {
  if (dec.p == 0) return dec.r();
  return dec.p * (2 * dec.p - 1) + dec.r();
}

std::size_t two_form_dim(const IntMatrix& A) { return two_form_dim(decompose(A)); }

UniversalCoverDatum universal_cover(const HypertoricDatum& datum) {
  UniversalCoverDatum out;
  out.B_bar = datum.parallel.representatives;
  out.A_under = gale::gale_dual_of_B(out.B_bar).A;
  out.multiplicities = datum.parallel.multiplicities;
  out.deck = fungroup::pi1(datum.parallel);
  out.gamma_order = fungroup::b_tilde(datum.parallel).L;
  return out;
}

UniversalCoverDatum universal_cover(const IntMatrix& A) {
  return universal_cover(make_datum(A, MatrixKind::A));
}

DiagramCheck verify_simplification_diagram(const gale::GalePair& pair, const IntMatrix& B_bar,
                                           const arrangement::ParallelData& data,
                                           const IntMatrix& A_under) {
  DiagramCheck check;
  const std::size_t n = pair.n();
  const std::size_t d = pair.d();
  const std::size_t s = data.class_count();
  auto fail = [&](std::string msg) { check.diagnostics.push_back(std::move(msg)); };

  if (B_bar.rows() != s || B_bar.cols() != pair.B.cols() || A_under.cols() != s) {
    fail("shape mismatch between B_bar, A_under and the parallel classes");
    return check;
  }
  IntMatrix B0(n, s);
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t j : data.classes[k]) B0(j, k) = data.signs[j];
  if (!(B0 * B_bar == pair.B)) fail("B0 * B_bar != B");
  if (!(A_under * B_bar).is_zero()) fail("A_under * B_bar != 0");

  const std::size_t d_under = A_under.rows();
  const IntMatrix AB0 = pair.A * B0;
  IntMatrix i_map(d, d_under);
  for (std::size_t t = 0; t < d_under; ++t) {
    IntVector e(d_under);
    e[t] = 1;
    auto x = linalg::solve_integral(A_under, e);
    if (!x) {
      fail("e_" + std::to_string(t + 1) + " has no integral preimage under A_under");
      continue;
    }
    const IntVector image = AB0 * *x;
    for (std::size_t r = 0; r < d; ++r) i_map(r, t) = image[r];
  }
  if (!(i_map * A_under == AB0)) fail("i * A_under != A * B0");
  if (linalg::rank(i_map) != d_under) fail("i is not injective");
  const AbelianGroup coker = linalg::cokernel(i_map);
  if (!coker.torsion().empty() || coker.free_rank() + s != n)
    fail("coker i is " + coker.to_string() + ", expected Z^" + std::to_string(n - s));
  check.ok = check.diagnostics.empty();
  return check;
}

DiagramCheck verify_simplification_diagram(const IntMatrix& A) {
  const HypertoricDatum datum = make_datum(A, MatrixKind::A);
  const IntMatrix& B_bar = datum.parallel.representatives;
  const IntMatrix A_under = gale::gale_dual_of_B(B_bar).A;
  return verify_simplification_diagram(datum.pair, B_bar, datum.parallel, A_under);
}

std::string MomentIdeal::text() const {
  std::string out;
  for (std::size_t p = 0; p < polynomials.size(); ++p) {
    if (p) out += '\n';
    if (polynomials[p].empty()) {
      out += "0";
      continue;
    }
    bool first = true;
    for (const auto& term : polynomials[p]) {
      const bool negative = sgn(term.coefficient) < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      Integer mag = abs(term.coefficient);
      if (mag != 1) out += mag.get_str() + "*";
      const std::string j = std::to_string(term.variable + 1);
      out += "z" + j + "*w" + j;
    }
  }
  return out;
}

MomentIdeal moment_ideal(const IntMatrix& A) {
  MomentIdeal ideal;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    std::vector<MomentTerm> poly;
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0) poly.push_back({A(i, j), j});
    ideal.polynomials.push_back(std::move(poly));
  }
  return ideal;
}

std::optional<std::vector<std::size_t>> classify_equal(const IntMatrix& A, const IntMatrix& A2,
                                                       std::size_t iso_limit) {
  if (A.cols() != A2.cols()) return std::nullopt;
  return matroid::is_isomorphic(matroid::VectorMatroid(A), matroid::VectorMatroid(A2), iso_limit);
}

AnalysisReport analyze(const HypertoricDatum& datum, const IntMatrix& input, MatrixKind kind,
                       const Config& config) {
  AnalysisReport r;
  r.input = input;
  r.kind = kind;
  r.n = datum.pair.n();
  r.d = datum.pair.d();
  r.dim = 2 * (r.n - r.d);
  r.simple = datum.parallel.class_count() == r.n;

  const auto strata = arrangement::strata(datum.pair, config.flat_limit);
  std::map<std::size_t, std::size_t> per_dim;
  r.isolated = true;
  for (const auto& s : strata) {
    ++per_dim[s.stratum_dim];
    if (s.multiplicated && (!r.sing_codim || 2 * s.flat.rank < *r.sing_codim))
      r.sing_codim = 2 * s.flat.rank;
    if (s.flat.elements.size() != r.n && s.flat.elements.size() != s.flat.rank) r.isolated = false;
  }
  for (const auto& [dim, count] : per_dim) r.strata_summary.push_back({dim, count});
  r.smooth = !r.sing_codim.has_value();

  r.pi1 = fungroup::pi1(datum.parallel);
  r.decomposition = decompose(datum.pair.A);
  r.irreducible = is_irreducible(r.decomposition);
  r.two_form_dim = two_form_dim(r.decomposition);
  r.cover = universal_cover(datum);
  return r;
}

AnalysisReport analyze(const IntMatrix& matrix, MatrixKind kind, const Config& config) {
  return analyze(make_datum(matrix, kind), matrix, kind, config);
}

}  // namespace hypertoric
