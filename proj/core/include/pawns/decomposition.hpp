#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pawns/board.hpp"
#include "pawns/recurrence.hpp"

namespace pawns {

inline constexpr std::size_t kIndependentSetGuard = 40;

/// Cells of one colour class with an edge between every pair of cells that
/// touch diagonally. Pawn attacks never leave a colour class.
struct ShapeGraph {
  std::vector<Cell> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices, first < second
};

/// Shape made of the given rows in each column (column 1 first); edges join
/// diagonally adjacent cells.
ShapeGraph shape_from_columns(const std::vector<std::vector<std::size_t>>& rows_per_column);

/// Colour convention: (i, j) is black iff i + j is even.
std::pair<ShapeGraph, ShapeGraph> split_by_color(BoardDims dims);

/// Number of independent sets (the empty set included), by a dynamic
/// program over columns. Edges may only join cells in the same or adjacent
/// columns. Throws GuardExceeded above `guard` vertices.
BigCount count_independent_sets(const ShapeGraph& g,
                                std::size_t guard = kIndependentSetGuard);

struct Observation {
  BigCount black;
  BigCount white;
  bool product_ok = false;  // black * white == transfer-engine count
};

Observation verify_observation(BoardDims dims, std::size_t guard = kIndependentSetGuard);

struct SquareRootCertificate {
  BigCount value;
  BigCount root;
};

std::optional<SquareRootCertificate> perfect_square_root(const BigCount& v);

/// Black and white shape counts for columns 0 .. max_columns.
std::pair<std::vector<BigCount>, std::vector<BigCount>> shape_count_sequences(
    std::size_t rows, std::size_t max_columns);

/// Generating functions for the black and white shape counts of an
/// m-row board, recovered by recurrence fitting on `terms` shape counts.
std::optional<std::pair<LinearRecurrence, LinearRecurrence>> fit_shape_generating_functions(
    std::size_t rows, std::size_t terms, std::size_t max_order);

}  // namespace pawns
