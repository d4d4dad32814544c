#include "pawns/board.hpp"

namespace pawns {

std::string to_decimal(const BigCount& v) { return v.get_str(10); }

ForbiddenPatternSet ForbiddenPatternSet::uk_set(unsigned k) {
  ForbiddenPatternSet p;
  p.diag_run = k;
  p.validate();
  return p;
}

void ForbiddenPatternSet::validate() const {
  if (!(diag_down || diag_up || horiz_pair || vert_pair || diag_run)) {
    throw InvalidArgument("pattern set is empty");
  }
  if (diag_run) {
    if (*diag_run < 2) {
      throw InvalidArgument("diagonal run length k must be >= 2, got " +
                            std::to_string(*diag_run));
    }
    if (diag_down) {
      throw InvalidArgument("diag_run and diag_down are mutually exclusive");
    }
  }
}

bool ForbiddenPatternSet::symmetric_transfer() const noexcept {
  const bool down = diag_down || (diag_run && *diag_run == 2);
  return down == diag_up;
}

std::string ForbiddenPatternSet::describe() const {
  if (*this == m_set()) return "M";
  if (*this == u_set()) return "U";
  if (*this == l_set()) return "L";
  if (diag_run && !diag_down && !diag_up && !horiz_pair && !vert_pair) {
    return "Uk(" + std::to_string(*diag_run) + ")";
  }
  std::string out = "{";
  auto add = [&out](const char* name) {
    if (out.size() > 1) out += ",";
    out += name;
  };
  if (diag_down) add("diag_down");
  if (diag_up) add("diag_up");
  if (horiz_pair) add("horiz_pair");
  if (vert_pair) add("vert_pair");
  if (diag_run) add(("diag_run=" + std::to_string(*diag_run)).c_str());
  return out + "}";
}

BinaryMatrix::BinaryMatrix(BoardDims dims)
    : dims_(dims), cells_(dims.cells(), 0) {}

BinaryMatrix::BinaryMatrix(BoardDims dims, std::vector<std::uint8_t> cells)
    : dims_(dims), cells_(std::move(cells)) {
  if (cells_.size() != dims_.cells()) {
    throw InvalidArgument("cell vector length does not match dimensions");
  }
  for (auto& c : cells_) c = c ? 1 : 0;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
  std::string text;
  for (const auto& r : rows) text += r + "\n";
  return parse_matrix(text);
}

std::size_t BinaryMatrix::index(std::size_t i, std::size_t j) const {
  if (i < 1 || i > dims_.rows || j < 1 || j > dims_.cols) {
    throw InvalidArgument("cell (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside " +
                          std::to_string(dims_.rows) + "x" +
                          std::to_string(dims_.cols) + " matrix");
  }
  return (i - 1) * dims_.cols + (j - 1);
}

BinaryMatrix parse_matrix(std::string_view text) {
  std::vector<std::uint8_t> cells;
  std::size_t rows = 0;
  std::size_t width = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    if (line.empty()) {
      // Only trailing blank lines are tolerated.
      if (text.find_first_not_of("\r\n", pos) != std::string_view::npos) {
        throw ParseError("blank line inside matrix at row " +
                         std::to_string(rows + 1));
      }
      break;
    }
    if (rows == 0) {
      width = line.size();
    } else if (line.size() != width) {
      throw ParseError("ragged matrix: row " + std::to_string(rows + 1) +
                       " has " + std::to_string(line.size()) +
                       " columns, expected " + std::to_string(width));
    }
    for (std::size_t j = 0; j < line.size(); ++j) {
      const char c = line[j];
      if (c != '0' && c != '1') {
        throw ParseError("non-binary character at row " +
                         std::to_string(rows + 1) + ", column " +
                         std::to_string(j + 1));
      }
      cells.push_back(c == '1' ? 1 : 0);
    }
    ++rows;
  }
  return BinaryMatrix({rows, width}, std::move(cells));
}

std::string format_matrix(const BinaryMatrix& mat) {
  std::string out;
  out.reserve(mat.rows() * (mat.cols() + 1));
  for (std::size_t i = 1; i <= mat.rows(); ++i) {
    for (std::size_t j = 1; j <= mat.cols(); ++j) out += mat.at(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace pawns
