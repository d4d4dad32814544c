#include "pawns/enumeration.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace pawns {
namespace {

constexpr std::size_t kHardCellLimit = 40;

bool run_on_down_diagonal(const BinaryMatrix& mat, std::size_t i, std::size_t j,
                          unsigned k) {
  for (unsigned t = 0; t < k; ++t) {
    if (i + t > mat.rows() || j + t > mat.cols() || !mat.at(i + t, j + t)) {
      return false;
    }
  }
  return true;
}

void check_guard(BoardDims dims, std::size_t guard) {
  if (dims.cells() > guard || dims.cells() > kHardCellLimit) {
    throw GuardExceeded("enumeration of " + std::to_string(dims.rows) + "x" +
                            std::to_string(dims.cols) + " (" +
                            std::to_string(dims.cells()) +
                            " cells) exceeds the guard of " +
                            std::to_string(guard) + " cells",
                        "transfer");
  }
}

// Rows packed as n-bit words with column 1 in the most significant position.
// A pattern that pairs column j with column j+1 lines up after shifting the
// right-hand row left by one.
bool packed_rows_avoid(const std::uint64_t* rows, std::size_t m,
                       const ForbiddenPatternSet& pats) {
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t r = rows[i];
    if (pats.horiz_pair && (r & (r << 1))) return false;
    if (i + 1 < m) {
      const std::uint64_t below = rows[i + 1];
      if (pats.diag_down && (r & (below << 1))) return false;
      if (pats.diag_up && (below & (r << 1))) return false;
      if (pats.vert_pair && (r & below)) return false;
    }
    if (pats.diag_run && i + *pats.diag_run <= m) {
      std::uint64_t acc = r;
      for (unsigned t = 1; t < *pats.diag_run && acc; ++t) acc &= rows[i + t] << t;
      if (acc) return false;
    }
  }
  return true;
}

template <typename Visit>
void scan(BoardDims dims, const ForbiddenPatternSet& pats, std::size_t guard,
          Visit&& visit) {
  pats.validate();
  check_guard(dims, guard);
  const std::size_t m = dims.rows;
  const std::size_t n = dims.cols;
  if (dims.empty()) {
    visit(nullptr);
    return;
  }
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << (m * n);
  std::array<std::uint64_t, kHardCellLimit> rows{};
  for (std::uint64_t x = 0; x < total; ++x) {
    for (std::size_t i = 0; i < m; ++i) rows[i] = (x >> ((m - 1 - i) * n)) & row_mask;
    if (packed_rows_avoid(rows.data(), m, pats)) visit(rows.data());
  }
}

}  // namespace

bool matrix_avoids(const BinaryMatrix& mat, const ForbiddenPatternSet& pats) {
  const std::size_t m = mat.rows();
  const std::size_t n = mat.cols();
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const bool here = mat.at(i, j);
      if (pats.horiz_pair && j < n && here && mat.at(i, j + 1)) return false;
      if (pats.vert_pair && i < m && here && mat.at(i + 1, j)) return false;
      if (pats.diag_down && i < m && j < n && here && mat.at(i + 1, j + 1)) return false;
      if (pats.diag_up && i < m && j < n && mat.at(i + 1, j) && mat.at(i, j + 1)) {
        return false;
      }
      if (pats.diag_run && run_on_down_diagonal(mat, i, j, *pats.diag_run)) return false;
    }
  }
  return true;
}

BigCount count_by_enumeration(BoardDims dims, const ForbiddenPatternSet& pats,
                              std::size_t guard) {
  std::uint64_t count = 0;
  scan(dims, pats, guard, [&count](const std::uint64_t*) { ++count; });
  BigCount out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
  return out;
}

void for_each_legal(BoardDims dims, const ForbiddenPatternSet& pats,
                    const std::function<void(const BinaryMatrix&)>& visit,
                    std::size_t guard) {
  BinaryMatrix mat(dims);
  scan(dims, pats, guard, [&](const std::uint64_t* rows) {
    if (rows != nullptr) {
      for (std::size_t i = 0; i < dims.rows; ++i) {
        for (std::size_t j = 0; j < dims.cols; ++j) {
          mat.set(i + 1, j + 1, (rows[i] >> (dims.cols - 1 - j)) & 1U);
        }
      }
    }
    visit(mat);
  });
}

std::vector<BinaryMatrix> enumerate_legal(BoardDims dims,
                                          const ForbiddenPatternSet& pats,
                                          std::size_t guard) {
  std::vector<BinaryMatrix> out;
  for_each_legal(dims, pats, [&out](const BinaryMatrix& m) { out.push_back(m); },
                 guard);
  return out;
}

}  // namespace pawns
