#include "pawns/decomposition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pawns/transfer.hpp"

namespace pawns {
namespace {

constexpr std::size_t kMaxColumnWidth = 20;

struct Slot {
  std::size_t column;    // position in the sorted list of occupied columns
  std::size_t position;  // bit within that column
};

bool diagonal_neighbours(const Cell& a, const Cell& b) {
  const auto dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  const auto dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  return dr == 1 && dc == 1;
}

ShapeGraph graph_on(std::vector<Cell> cells) {
  ShapeGraph g;
  g.vertices = std::move(cells);
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      if (diagonal_neighbours(g.vertices[a], g.vertices[b])) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

}  // namespace

ShapeGraph shape_from_columns(const std::vector<std::vector<std::size_t>>& rows_per_column) {
  std::vector<Cell> cells;
  for (std::size_t j = 0; j < rows_per_column.size(); ++j) {
    for (std::size_t r : rows_per_column[j]) cells.push_back({r, j + 1});
  }
  return graph_on(std::move(cells));
}

std::pair<ShapeGraph, ShapeGraph> split_by_color(BoardDims dims) {
  std::vector<Cell> black, white;
  for (std::size_t j = 1; j <= dims.cols; ++j) {
    for (std::size_t i = 1; i <= dims.rows; ++i) {
      ((i + j) % 2 == 0 ? black : white).push_back({i, j});
    }
  }
  return {graph_on(std::move(black)), graph_on(std::move(white))};
}

BigCount count_independent_sets(const ShapeGraph& g, std::size_t guard) {
  if (g.vertices.size() > guard) {
    throw GuardExceeded("shape with " + std::to_string(g.vertices.size()) +
                            " cells exceeds the independent-set guard of " +
                            std::to_string(guard),
                        "transfer");
  }
  if (g.vertices.empty()) return 1;

  std::map<std::size_t, std::vector<std::size_t>> by_column;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) by_column[g.vertices[v].col].push_back(v);

  std::vector<std::size_t> column_ids;
  std::vector<Slot> slot(g.vertices.size());
  for (const auto& [col, members] : by_column) {
    if (members.size() > kMaxColumnWidth) {
      throw GuardExceeded("column " + std::to_string(col) + " holds more than " +
                              std::to_string(kMaxColumnWidth) + " cells",
                          "transfer");
    }
    for (std::size_t p = 0; p < members.size(); ++p) slot[members[p]] = {column_ids.size(), p};
    column_ids.push_back(col);
  }

  const std::size_t ncols = column_ids.size();
  // Per column: conflicts inside the column, and towards the next column.
  std::vector<std::vector<std::uint32_t>> inner(ncols), forward(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    inner[c].assign(by_column[column_ids[c]].size(), 0);
    forward[c].assign(by_column[column_ids[c]].size(), 0);
  }
  for (auto [a, b] : g.edges) {
    Slot sa = slot[a], sb = slot[b];
    if (sa.column > sb.column) std::swap(sa, sb);
    if (sa.column == sb.column) {
      inner[sa.column][sa.position] |= 1U << sb.position;
      inner[sa.column][sb.position] |= 1U << sa.position;
    } else if (sb.column == sa.column + 1 && column_ids[sb.column] == column_ids[sa.column] + 1) {
      forward[sa.column][sa.position] |= 1U << sb.position;
    } else {
      throw InvalidArgument("shape edge spans non-adjacent columns");
    }
  }

  auto valid = [&inner](std::size_t c, std::uint32_t s) {
    for (std::size_t p = 0; p < inner[c].size(); ++p) {
      if (((s >> p) & 1U) && (inner[c][p] & s)) return false;
    }
    return true;
  };
  auto reach = [&forward](std::size_t c, std::uint32_t s) {
    std::uint32_t r = 0;
    for (std::size_t p = 0; p < forward[c].size(); ++p) {
      if ((s >> p) & 1U) r |= forward[c][p];
    }
    return r;
  };

  std::vector<BigCount> dp(std::size_t{1} << inner[0].size());
  for (std::uint32_t s = 0; s < dp.size(); ++s) dp[s] = valid(0, s) ? 1 : 0;
  for (std::size_t c = 1; c < ncols; ++c) {
    std::vector<BigCount> next(std::size_t{1} << inner[c].size());
    for (std::uint32_t s = 0; s < dp.size(); ++s) {
      if (dp[s] == 0) continue;
      const std::uint32_t blocked = reach(c - 1, s);
      for (std::uint32_t t = 0; t < next.size(); ++t) {
        if ((t & blocked) == 0 && valid(c, t)) next[t] += dp[s];
      }
    }
    dp = std::move(next);
  }
  BigCount total = 0;
  for (const auto& x : dp) total += x;
  return total;
}

Observation verify_observation(BoardDims dims, std::size_t guard) {
  const auto [black, white] = split_by_color(dims);
  Observation obs;
  obs.black = count_independent_sets(black, guard);
  obs.white = count_independent_sets(white, guard);
  obs.product_ok =
      obs.black * obs.white == count_via_transfer(dims.rows, dims.cols, ForbiddenPatternSet::m_set());
  return obs;
}

std::optional<SquareRootCertificate> perfect_square_root(const BigCount& v) {
  if (v < 0) return std::nullopt;
  BigCount root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return SquareRootCertificate{v, root};
}

std::pair<std::vector<BigCount>, std::vector<BigCount>> shape_count_sequences(
    std::size_t rows, std::size_t max_columns) {
  std::vector<BigCount> black, white;
  for (std::size_t n = 0; n <= max_columns; ++n) {
    const auto [b, w] = split_by_color({rows, n});
    const std::size_t guard = std::max(b.vertices.size(), w.vertices.size());
    black.push_back(count_independent_sets(b, guard));
    white.push_back(count_independent_sets(w, guard));
  }
  return {std::move(black), std::move(white)};
}

std::optional<std::pair<LinearRecurrence, LinearRecurrence>> fit_shape_generating_functions(
    std::size_t rows, std::size_t terms, std::size_t max_order) {
  if (terms == 0) return std::nullopt;
  const auto [black, white] = shape_count_sequences(rows, terms - 1);
  auto b = fit_linear_recurrence(black, max_order);
  auto w = fit_linear_recurrence(white, max_order);
  if (!b || !w) return std::nullopt;
  return std::make_pair(std::move(*b), std::move(*w));
}

}  // namespace pawns
