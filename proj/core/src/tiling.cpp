#include "pawns/tiling.hpp"

#include <algorithm>
#include <optional>

#include <nlohmann/json.hpp>

namespace pawns {
namespace {

constexpr std::size_t kMaxProfileRows = 24;

std::string at(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// First 1 that shares an edge or a corner with a later 1, if any.
std::optional<Cell> first_l_conflict(const BinaryMatrix& mat) {
  const std::size_t m = mat.rows(), n = mat.cols();
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (!mat.at(i, j)) continue;
      const bool right = j < n && mat.at(i, j + 1);
      const bool below = i < m && mat.at(i + 1, j);
      const bool below_right = i < m && j < n && mat.at(i + 1, j + 1);
      const bool below_left = i < m && j > 1 && mat.at(i + 1, j - 1);
      if (right || below || below_right || below_left) return Cell{i, j};
    }
  }
  return std::nullopt;
}

// Column-major occupancy grid with 0-based coordinates.
class Grid {
 public:
  Grid(std::size_t rows, std::size_t cols) : rows_(rows), cells_(rows * cols, false) {}
  bool taken(std::size_t r, std::size_t c) const { return cells_[c * rows_ + r]; }
  void mark(std::size_t r, std::size_t c, bool v) { cells_[c * rows_ + r] = v; }
  void mark_square(std::size_t r, std::size_t c, bool v) {
    mark(r, c, v);
    mark(r + 1, c, v);
    mark(r, c + 1, v);
    mark(r + 1, c + 1, v);
  }

 private:
  std::size_t rows_;
  std::vector<bool> cells_;
};

// Adds to next[] every way of completing the current column given the rows
// already covered from the left, recording which rows of the following
// column the new 2x2 tiles cover.
void place_column(std::size_t rows, bool room_right, std::uint32_t covered, std::size_t r,
                  std::uint32_t spill, const BigCount& ways, std::vector<BigCount>& next) {
  while (r < rows && ((covered >> r) & 1U)) ++r;
  if (r >= rows) {
    next[spill] += ways;
    return;
  }
  place_column(rows, room_right, covered, r + 1, spill, ways, next);
  if (room_right && r + 1 < rows && !((covered >> (r + 1)) & 1U)) {
    place_column(rows, room_right, covered, r + 2, spill | (3U << r), ways, next);
  }
}

void search(std::size_t rows, std::size_t cols, std::size_t index, Grid& grid, Tiling& current,
            const std::function<void(const Tiling&)>& visit) {
  while (index < rows * cols && grid.taken(index / cols, index % cols)) ++index;
  if (index == rows * cols) {
    visit(current);
    return;
  }
  const std::size_t r = index / cols, c = index % cols;
  grid.mark(r, c, true);
  search(rows, cols, index + 1, grid, current, visit);
  grid.mark(r, c, false);
  if (r + 1 < rows && c + 1 < cols && !grid.taken(r, c + 1) && !grid.taken(r + 1, c) &&
      !grid.taken(r + 1, c + 1)) {
    grid.mark_square(r, c, true);
    current.anchors.push_back({r + 1, c + 1});
    search(rows, cols, index + 1, grid, current, visit);
    current.anchors.pop_back();
    grid.mark_square(r, c, false);
  }
}

}  // namespace

void Tiling::validate() const {
  Grid grid(rows, cols);
  std::vector<Cell> sorted = anchors;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != anchors) {
    throw InvalidTiling("anchors are not sorted row-major", anchors.empty() ? Cell{} : anchors.front());
  }
  for (const Cell& a : anchors) {
    if (a.row < 1 || a.col < 1 || a.row >= rows || a.col >= cols) {
      throw InvalidTiling("2x2 tile anchored at " + at(a) + " does not fit on a " +
                              std::to_string(rows) + "x" + std::to_string(cols) + " board",
                          a);
    }
    const std::size_t r = a.row - 1, c = a.col - 1;
    if (grid.taken(r, c) || grid.taken(r + 1, c) || grid.taken(r, c + 1) ||
        grid.taken(r + 1, c + 1)) {
      throw InvalidTiling("2x2 tile anchored at " + at(a) + " overlaps another tile", a);
    }
    grid.mark_square(r, c, true);
  }
}

Tiling theta_forward(const BinaryMatrix& mat) {
  if (auto bad = first_l_conflict(mat)) {
    throw IllegalMatrix("matrix is not L-legal: the 1 at " + at(*bad) +
                            " touches another 1",
                        *bad);
  }
  Tiling t{mat.rows() + 1, mat.cols() + 1, {}};
  for (std::size_t i = 1; i <= mat.rows(); ++i) {
    for (std::size_t j = 1; j <= mat.cols(); ++j) {
      if (mat.at(i, j)) t.anchors.push_back({i, j});
    }
  }
  return t;
}

BinaryMatrix theta_inverse(const Tiling& t) {
  if (t.rows == 0 || t.cols == 0) throw InvalidTiling("tiling of an empty board", Cell{});
  t.validate();
  BinaryMatrix mat({t.rows - 1, t.cols - 1});
  for (const Cell& a : t.anchors) mat.set(a.row, a.col, true);
  return mat;
}

BigCount count_tilings(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return 1;
  if (rows > kMaxProfileRows) {
    if (cols <= kMaxProfileRows) return count_tilings(cols, rows);
    throw GuardExceeded("tiling profile of " + std::to_string(rows) + " rows is too wide",
                        "transfer");
  }
  std::vector<BigCount> dp(std::size_t{1} << rows);
  dp[0] = 1;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<BigCount> next(dp.size());
    for (std::uint32_t covered = 0; covered < dp.size(); ++covered) {
      if (dp[covered] != 0) place_column(rows, c + 1 < cols, covered, 0, 0, dp[covered], next);
    }
    dp = std::move(next);
  }
  return dp[0];
}

void for_each_tiling(std::size_t rows, std::size_t cols,
                     const std::function<void(const Tiling&)>& visit, std::size_t guard) {
  if (rows * cols > guard) {
    throw GuardExceeded("enumerating tilings of " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds the guard of " +
                            std::to_string(guard) + " cells",
                        "count_tilings");
  }
  Grid grid(rows, cols);
  Tiling current{rows, cols, {}};
  search(rows, cols, 0, grid, current, visit);
}

std::vector<Tiling> enumerate_tilings(std::size_t rows, std::size_t cols, std::size_t guard) {
  std::vector<Tiling> out;
  for_each_tiling(rows, cols, [&out](const Tiling& t) { out.push_back(t); }, guard);
  return out;
}

std::string tiling_to_json(const Tiling& t) {
  nlohmann::ordered_json j;
  j["rows"] = t.rows;
  j["cols"] = t.cols;
  j["anchors"] = nlohmann::ordered_json::array();
  for (const Cell& a : t.anchors) j["anchors"].push_back({a.row, a.col});
  return j.dump();
}

namespace {

std::size_t natural(const nlohmann::json& v, const char* what) {
  if (!v.is_number_unsigned()) throw ParseError(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

Tiling tiling_from_json(std::string_view text) {
  Tiling t;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw ParseError("tiling JSON must be an object");
    t.rows = natural(j.at("rows"), "rows");
    t.cols = natural(j.at("cols"), "cols");
    for (const auto& a : j.at("anchors")) {
      if (!a.is_array() || a.size() != 2) throw ParseError("anchor must be a [row, col] pair");
      t.anchors.push_back({natural(a[0], "anchor row"), natural(a[1], "anchor column")});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad tiling JSON: ") + e.what());
  }
  t.validate();
  return t;
}

std::string render_ascii(const Tiling& t) {
  t.validate();
  std::vector<std::string> lines(t.rows, std::string(t.cols, '.'));
  for (std::size_t k = 0; k < t.anchors.size(); ++k) {
    const char letter = static_cast<char>('A' + k % 26);
    const std::size_t r = t.anchors[k].row - 1, c = t.anchors[k].col - 1;
    lines[r][c] = lines[r][c + 1] = lines[r + 1][c] = lines[r + 1][c + 1] = letter;
  }
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace pawns
