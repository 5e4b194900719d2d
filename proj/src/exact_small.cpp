#include "exact_small.hpp"

#include <limits>
#include <utility>

namespace hypertoric::detail {

namespace {

constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

std::optional<SmallElimination> bareiss_i64(std::span<std::int64_t> a, std::size_t rows,
                                            std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  std::int64_t prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
      sign = -sign;
    }
    const std::int64_t pivot = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 num = static_cast<__int128>(pivot) * at(i, j) -
                       static_cast<__int128>(lead) * at(r, j);
        num /= prev;
        if (num < kMin || num > kMax) return std::nullopt;
        at(i, j) = static_cast<std::int64_t>(num);
      }
      at(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  SmallElimination out;
  out.rank = r;
  if (rows == cols) out.determinant = (r == rows) ? (rows == 0 ? 1 : sign * prev) : 0;
  return out;
}

BigElimination bareiss_big(std::vector<Integer> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };
  Integer prev = 1;
  Integer num;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        num = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  BigElimination out;
  out.rank = r;
  if (rows == cols) out.determinant = (r == rows) ? (rows == 0 ? Integer(1) : sign * prev) : 0;
  return out;
}

std::optional<std::vector<std::int64_t>> to_i64_buffer(const IntMatrix& M) {
  std::vector<std::int64_t> buf(M.rows() * M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (!fits_int64(M(i, j))) return std::nullopt;
      buf[i * M.cols() + j] = to_int64(M(i, j));
    }
  }
  return buf;
}

}  // namespace hypertoric::detail
