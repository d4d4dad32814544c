#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pawns/board.hpp"

namespace pawns {

inline constexpr std::size_t kTilingEnumerationGuard = 30;

/// A tiling of a rows x cols board by 1x1 and 2x2 squares, stored as the
/// top-left cells of the 2x2 tiles (sorted row-major). Every other cell is a
/// 1x1 tile.
struct Tiling {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Cell> anchors;

  /// Throws InvalidTiling on an out-of-range or overlapping anchor.
  void validate() const;
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

class IllegalMatrix : public Error {
 public:
  IllegalMatrix(const std::string& what, Cell where) : Error(what), where_(where) {}
  Cell where() const noexcept { return where_; }

 private:
  Cell where_;
};

class InvalidTiling : public Error {
 public:
  InvalidTiling(const std::string& what, Cell where) : Error(what), where_(where) {}
  Cell where() const noexcept { return where_; }

 private:
  Cell where_;
};

/// Adds a zero column on the right and a zero row below, then puts a 2x2
/// tile with its top-left corner on each 1. Throws IllegalMatrix if `mat`
/// contains a forbidden L pattern.
Tiling theta_forward(const BinaryMatrix& mat);

/// Inverse of theta_forward: 1 at each anchor, last row and column dropped.
/// Throws InvalidTiling on a bad layout or an empty board.
BinaryMatrix theta_inverse(const Tiling& t);

/// Number of tilings, by a column-by-column profile dynamic program.
BigCount count_tilings(std::size_t rows, std::size_t cols);

void for_each_tiling(std::size_t rows, std::size_t cols,
                     const std::function<void(const Tiling&)>& visit,
                     std::size_t guard = kTilingEnumerationGuard);
std::vector<Tiling> enumerate_tilings(std::size_t rows, std::size_t cols,
                                      std::size_t guard = kTilingEnumerationGuard);

/// {"rows":R,"cols":C,"anchors":[[r,c],...]}
std::string tiling_to_json(const Tiling& t);
/// Throws ParseError on malformed JSON and InvalidTiling on a bad layout.
Tiling tiling_from_json(std::string_view text);

/// One line per board row; each 2x2 tile is a 2x2 block of one letter,
/// each 1x1 tile is '.'.
std::string render_ascii(const Tiling& t);

}  // namespace pawns
