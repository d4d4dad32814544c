#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pawns {

/// Exact nonnegative count. Backed by GMP; never narrowed to machine width.
using BigCount = mpz_class;

std::string to_decimal(const BigCount& v);

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force or dense routine was asked for an instance above its size
/// guard. `suggestion` names an engine that can handle the request.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, std::string suggestion)
      : Error(what), suggestion_(std::move(suggestion)) {}
  const std::string& suggestion() const noexcept { return suggestion_; }

 private:
  std::string suggestion_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Board and pattern model
// ---------------------------------------------------------------------------

struct BoardDims {
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t cells() const noexcept { return rows * cols; }
  bool empty() const noexcept { return rows == 0 || cols == 0; }
  BoardDims transposed() const noexcept { return {cols, rows}; }
  friend bool operator==(const BoardDims&, const BoardDims&) = default;
};

/// Which placements are forbidden. With row 1 on top:
///   diag_down  : 1 at (i,j) and (i+1,j+1)
///   diag_up    : 1 at (i+1,j) and (i,j+1)
///   horiz_pair : 1 at (i,j) and (i,j+1)
///   vert_pair  : 1 at (i,j) and (i+1,j)
///   diag_run   : k consecutive 1s along a down-right diagonal (k >= 2)
struct ForbiddenPatternSet {
  bool diag_down = false;
  bool diag_up = false;
  bool horiz_pair = false;
  bool vert_pair = false;
  std::optional<unsigned> diag_run;

  /// Nonattacking pawns: both two-cell diagonal words.
  static ForbiddenPatternSet m_set() { return {true, true, false, false, {}}; }
  /// Single down-right diagonal word.
  static ForbiddenPatternSet u_set() { return {true, false, false, false, {}}; }
  /// k consecutive 1s on a down-right diagonal.
  static ForbiddenPatternSet uk_set(unsigned k);
  /// Both diagonals plus horizontal and vertical neighbours.
  static ForbiddenPatternSet l_set() { return {true, true, true, true, {}}; }

  /// Throws InvalidArgument unless at least one pattern is set, k >= 2, and
  /// diag_run is not combined with diag_down.
  void validate() const;

  /// True when the pattern set is invariant under reversing column order
  /// combined with transposition, i.e. the column transfer relation is
  /// symmetric.
  bool symmetric_transfer() const noexcept;

  std::string describe() const;

  friend bool operator==(const ForbiddenPatternSet&,
                         const ForbiddenPatternSet&) = default;
};

/// Row-major 0/1 matrix. Public accessors are 1-based to match board
/// coordinates; row 1 is the top row.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(BoardDims dims);
  BinaryMatrix(BoardDims dims, std::vector<std::uint8_t> cells);

  /// Builds from row strings such as {"101", "000"}.
  static BinaryMatrix from_rows(const std::vector<std::string>& rows);

  const BoardDims& dims() const noexcept { return dims_; }
  std::size_t rows() const noexcept { return dims_.rows; }
  std::size_t cols() const noexcept { return dims_.cols; }

  bool at(std::size_t i, std::size_t j) const { return cells_[index(i, j)] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { cells_[index(i, j)] = v ? 1 : 0; }

  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  BoardDims dims_{};
  std::vector<std::uint8_t> cells_;
};

/// Text format: one line per row of '0'/'1', row 1 first. A trailing newline
/// is optional. Ragged or non-binary input throws ParseError.
BinaryMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BinaryMatrix& mat);

/// A cell position, 1-based.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

}  // namespace pawns
