#include "hypertoric/fungroup.hpp"

#include "hypertoric/error.hpp"
#include "hypertoric/kernels.hpp"
#include "hypertoric/linalg.hpp"

namespace hypertoric::fungroup {

namespace {

IntMatrix multiplicity_diagonal(const arrangement::ParallelData& data) {
  IntVector diag;
  for (std::size_t l : data.multiplicities) diag.emplace_back(static_cast<unsigned long>(l));
  return IntMatrix::diagonal(diag);
}

}  // namespace

BTilde b_tilde(const arrangement::ParallelData& data) {
  const std::size_t s = data.class_count();
  const IntMatrix bar_t = data.representatives.transpose();
  BTilde out;
  out.L = 1;
  for (std::size_t l : data.multiplicities) out.L *= static_cast<unsigned long>(l);
  out.matrix = IntMatrix(bar_t.rows(), s);
  for (std::size_t k = 0; k < s; ++k) {
    Integer m = out.L / static_cast<unsigned long>(data.multiplicities[k]);
    for (std::size_t i = 0; i < bar_t.rows(); ++i) out.matrix(i, k) = m * bar_t(i, k);
    out.m.push_back(std::move(m));
  }
  return out;
}

AbelianGroup pi1(const arrangement::ParallelData& data) {
  const BTilde bt = b_tilde(data);
  const IntMatrix relations = multiplicity_diagonal(data).hconcat(linalg::kernel_basis(bt.matrix));
  return linalg::cokernel(relations);
}

AbelianGroup pi1(const gale::GalePair& pair) { return pi1(arrangement::parallel_classes(pair.B)); }

AbelianGroup pi1_image_presentation(const arrangement::ParallelData& data) {
  const BTilde bt = b_tilde(data);
  const std::size_t k = bt.matrix.rows();
  IntVector scaled(k, bt.L);
  // Lambda = image(B~^T) + L Z^k; the group is Lambda / L Z^k, whose
  // invariant factors are L / h_i for the Smith diagonal h of a basis of Lambda.
  const IntMatrix lattice =
      linalg::column_lattice_basis(bt.matrix.hconcat(IntMatrix::diagonal(scaled)));
  std::vector<Integer> factors;
  for (const Integer& h : linalg::smith_diagonal(lattice)) factors.push_back(bt.L / h);
  return AbelianGroup::from_diagonal(factors);
}

AbelianGroup pi1_oracle(const arrangement::ParallelData& data, std::uint64_t bound) {
  const BTilde bt = b_tilde(data);
  if (bt.L > bound) {
    throw Error(ErrorCode::OracleBoundExceeded,
                "|Gamma| = " + bt.L.get_str() + " exceeds bound " + std::to_string(bound));
  }
  const auto modulus = static_cast<std::int64_t>(bt.L.get_si());
  const IntMatrix bar_t = data.representatives.transpose();
  std::vector<std::vector<std::int64_t>> reps(bar_t.rows(),
                                              std::vector<std::int64_t>(bar_t.cols()));
  Integer r;
  for (std::size_t i = 0; i < bar_t.rows(); ++i) {
    for (std::size_t j = 0; j < bar_t.cols(); ++j) {
      mpz_fdiv_r(r.get_mpz_t(), bar_t(i, j).get_mpz_t(), bt.L.get_mpz_t());
      reps[i][j] = r.get_si();
    }
  }
  std::vector<std::int64_t> mult(data.multiplicities.begin(), data.multiplicities.end());
  const auto members = kernels::gamma_members(reps, mult, modulus);

  IntMatrix generators(data.class_count(), members.size());
  for (std::size_t c = 0; c < members.size(); ++c)
    for (std::size_t k = 0; k < members[c].size(); ++k)
      generators(k, c) = static_cast<long>(members[c][k]);
  return linalg::cokernel(multiplicity_diagonal(data).hconcat(generators));
}

AbelianGroup pi1_oracle(const gale::GalePair& pair, std::uint64_t bound) {
  return pi1_oracle(arrangement::parallel_classes(pair.B), bound);
}

Integer pi1_order(const gale::GalePair& pair) { return *pi1(pair).order(); }

}  // namespace hypertoric::fungroup
