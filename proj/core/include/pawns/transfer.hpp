#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pawns/board.hpp"

namespace pawns {

/// Largest height for which a dense adjacency is materialized.
inline constexpr std::size_t kDenseTransferGuard = 14;
/// Largest height handled by the implicit (subset-sum) operator.
inline constexpr std::size_t kImplicitTransferGuard = 24;
/// Largest height for a full dense eigendecomposition.
inline constexpr std::size_t kSpectrumGuard = 10;

/// One column of a board. Row 1 is the most significant of the `height`
/// bits, so the integer value is the big-endian reading of the column.
struct ColumnMask {
  std::size_t height = 0;
  std::uint32_t bits = 0;

  /// Parses a top-to-bottom bit string such as "010".
  static ColumnMask from_string(const std::string& s);
  std::string to_string() const;
  bool row(std::size_t i) const { return (bits >> (height - i)) & 1U; }
};

/// True iff column `w` may sit immediately to the right of column `v`.
/// Only the horizontal relation is checked; whether each column is itself
/// admissible (vert_pair) is a separate question, see `column_admissible`.
/// Throws InvalidArgument on height mismatch or on diagonal runs with k > 2.
bool compatible(ColumnMask v, ColumnMask w, const ForbiddenPatternSet& pats);

bool column_admissible(ColumnMask v, const ForbiddenPatternSet& pats);

class TransferMatrix {
 public:
  /// Materializes the adjacency over every admissible mask of `height`.
  TransferMatrix(std::size_t height, ForbiddenPatternSet pats);

  std::size_t height() const noexcept { return height_; }
  const ForbiddenPatternSet& patterns() const noexcept { return pats_; }
  /// Admissible masks in increasing integer order.
  const std::vector<std::uint32_t>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// Entry (a, b) by vertex position.
  bool adjacent(std::size_t a, std::size_t b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  std::size_t row_degree(std::size_t a) const;
  bool is_symmetric() const;

  /// Rows of space-separated 0/1 in vertex order, one row per line.
  std::string to_text() const;

 private:
  std::size_t height_;
  ForbiddenPatternSet pats_;
  std::vector<std::uint32_t> vertices_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

TransferMatrix build_transfer(std::size_t height, const ForbiddenPatternSet& pats,
                              std::size_t guard = kDenseTransferGuard);

/// Number of legal height x columns matrices: the entry sum of T^(columns-1);
/// 1 for an empty board. Each step is a subset-sum transform, O(m 2^m)
/// big-integer additions.
BigCount count_via_transfer(std::size_t height, std::size_t columns,
                            const ForbiddenPatternSet& pats);

/// Counts for columns = 0, 1, ..., max_columns in one sweep.
std::vector<BigCount> count_sequence_via_transfer(std::size_t height,
                                                  std::size_t max_columns,
                                                  const ForbiddenPatternSet& pats);

class NonConverged : public Error {
 public:
  NonConverged(std::size_t max_iter, double last_estimate);
  std::size_t max_iter() const noexcept { return max_iter_; }
  double last_estimate() const noexcept { return last_; }

 private:
  std::size_t max_iter_;
  double last_;
};

struct PowerIterationOptions {
  double tol = 1e-10;
  std::size_t max_iter = 200000;
};

/// Largest eigenvalue of the transfer operator by power iteration from the
/// all-ones vector with max-norm scaling. The zero column is compatible with
/// itself, so the operator is primitive and plain iteration converges.
double dominant_eigenvalue(std::size_t height, const ForbiddenPatternSet& pats,
                           PowerIterationOptions opts = {});

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
};

/// Full eigendecomposition of the dense adjacency. Requires a symmetric
/// transfer relation (M, L and other up/down balanced sets).
Spectrum spectrum_small(std::size_t height, const ForbiddenPatternSet& pats,
                        std::size_t guard = kSpectrumGuard);

}  // namespace pawns
