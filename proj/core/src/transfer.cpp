#include "pawns/transfer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

namespace pawns {
namespace {

struct Relation {
  std::size_t height;
  std::uint32_t full;
  bool down;
  bool up;
  bool horiz;
  bool vert;

  // Rows of a left-hand column that conflict with right-hand column w.
  std::uint32_t forbidden_for(std::uint32_t w) const {
    std::uint32_t f = 0;
    if (down) f |= w << 1;
    if (up) f |= w >> 1;
    if (horiz) f |= w;
    return f & full;
  }
  bool admissible(std::uint32_t v) const { return !vert || (v & (v >> 1)) == 0; }
};

Relation relation_for(std::size_t height, const ForbiddenPatternSet& pats) {
  pats.validate();
  if (pats.diag_run && *pats.diag_run > 2) {
    throw InvalidArgument("no transfer construction for diagonal runs with k > 2; "
                          "use the closed formula");
  }
  if (height > 31) throw InvalidArgument("column height above 31 rows");
  const bool down = pats.diag_down || pats.diag_run.has_value();
  return {height,
          height == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << height) - 1),
          down, pats.diag_up, pats.horiz_pair, pats.vert_pair};
}

void check_implicit_guard(std::size_t height) {
  if (height > kImplicitTransferGuard) {
    throw GuardExceeded("transfer operator for height " + std::to_string(height) +
                            " exceeds the guard of " +
                            std::to_string(kImplicitTransferGuard) + " rows",
                        "closed");
  }
}

// Sum over subsets, in place: out[S] = sum of in[v] for v subset of S.
// Bit levels are processed in a fixed order so results are reproducible.
template <typename T>
void subset_sum(std::vector<T>& a, std::size_t height) {
  const std::size_t size = a.size();
  for (std::size_t b = 0; b < height; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) a[s] += a[s ^ bit];
    }
  }
}

// One application of the transfer relation: next[w] = sum of cur[v] over
// admissible v compatible with w on its left.
template <typename T>
void transfer_step(const Relation& rel, std::vector<T>& cur, std::vector<T>& next) {
  subset_sum(cur, rel.height);
  for (std::size_t w = 0; w < cur.size(); ++w) {
    const auto mask = static_cast<std::uint32_t>(w);
    if (rel.admissible(mask)) {
      next[w] = cur[~rel.forbidden_for(mask) & rel.full];
    } else {
      next[w] = 0;
    }
  }
  std::swap(cur, next);
}

}  // namespace

ColumnMask ColumnMask::from_string(const std::string& s) {
  if (s.size() > 31) throw InvalidArgument("column mask longer than 31 rows");
  ColumnMask c{s.size(), 0};
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ParseError("column mask must be 0/1: " + s);
    c.bits = (c.bits << 1) | (ch == '1' ? 1U : 0U);
  }
  return c;
}

std::string ColumnMask::to_string() const {
  std::string s;
  for (std::size_t i = 1; i <= height; ++i) s += row(i) ? '1' : '0';
  return s;
}

bool compatible(ColumnMask v, ColumnMask w, const ForbiddenPatternSet& pats) {
  if (v.height != w.height) {
    throw InvalidArgument("column heights differ: " + std::to_string(v.height) +
                          " vs " + std::to_string(w.height));
  }
  const Relation rel = relation_for(v.height, pats);
  return (v.bits & rel.forbidden_for(w.bits)) == 0;
}

bool column_admissible(ColumnMask v, const ForbiddenPatternSet& pats) {
  return relation_for(v.height, pats).admissible(v.bits);
}

TransferMatrix::TransferMatrix(std::size_t height, ForbiddenPatternSet pats)
    : height_(height), pats_(std::move(pats)) {
  const Relation rel = relation_for(height_, pats_);
  for (std::uint32_t v = 0; v <= rel.full; ++v) {
    if (rel.admissible(v)) vertices_.push_back(v);
    if (v == rel.full) break;
  }
  words_ = (vertices_.size() + 63) / 64;
  bits_.assign(vertices_.size() * words_, 0);
  for (std::size_t a = 0; a < vertices_.size(); ++a) {
    for (std::size_t b = 0; b < vertices_.size(); ++b) {
      if ((vertices_[a] & rel.forbidden_for(vertices_[b])) == 0) {
        bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
  }
}

std::size_t TransferMatrix::row_degree(std::size_t a) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[a * words_ + w]);
  return d;
}

bool TransferMatrix::is_symmetric() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (adjacent(a, b) != adjacent(b, a)) return false;
    }
  }
  return true;
}

std::string TransferMatrix::to_text() const {
  std::string out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (b) out += ' ';
      out += adjacent(a, b) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

TransferMatrix build_transfer(std::size_t height, const ForbiddenPatternSet& pats,
                              std::size_t guard) {
  if (height < 1) throw InvalidArgument("transfer matrix needs height >= 1");
  if (height > guard) {
    throw GuardExceeded("dense transfer matrix for height " + std::to_string(height) +
                            " exceeds the guard of " + std::to_string(guard),
                        "transfer");
  }
  return TransferMatrix(height, pats);
}

std::vector<BigCount> count_sequence_via_transfer(std::size_t height,
                                                  std::size_t max_columns,
                                                  const ForbiddenPatternSet& pats) {
  const Relation rel = relation_for(height, pats);
  std::vector<BigCount> out;
  out.reserve(max_columns + 1);
  out.emplace_back(1);
  if (height == 0) {
    out.resize(max_columns + 1, BigCount(1));
    return out;
  }
  check_implicit_guard(height);
  if (max_columns == 0) return out;

  const std::size_t size = std::size_t{1} << height;
  std::vector<BigCount> cur(size), next(size);
  for (std::size_t v = 0; v < size; ++v) cur[v] = rel.admissible(static_cast<std::uint32_t>(v)) ? 1 : 0;

  auto total = [&cur] {
    BigCount s = 0;
    for (const auto& x : cur) s += x;
    return s;
  };
  out.push_back(total());
  for (std::size_t n = 2; n <= max_columns; ++n) {
    transfer_step(rel, cur, next);
    out.push_back(total());
  }
  return out;
}

BigCount count_via_transfer(std::size_t height, std::size_t columns,
                            const ForbiddenPatternSet& pats) {
  if (columns == 0 || height == 0) {
    relation_for(height, pats);
    return 1;
  }
  return count_sequence_via_transfer(height, columns, pats).back();
}

NonConverged::NonConverged(std::size_t max_iter, double last_estimate)
    : Error("power iteration did not converge within " + std::to_string(max_iter) +
            " iterations (last estimate " + std::to_string(last_estimate) + ")"),
      max_iter_(max_iter),
      last_(last_estimate) {}

double dominant_eigenvalue(std::size_t height, const ForbiddenPatternSet& pats,
                           PowerIterationOptions opts) {
  if (height < 1) throw InvalidArgument("dominant eigenvalue needs height >= 1");
  if (!(opts.tol > 0)) throw InvalidArgument("tolerance must be positive");
  const Relation rel = relation_for(height, pats);
  check_implicit_guard(height);

  const std::size_t size = std::size_t{1} << height;
  std::vector<double> cur(size), next(size);
  for (std::size_t v = 0; v < size; ++v) cur[v] = rel.admissible(static_cast<std::uint32_t>(v)) ? 1.0 : 0.0;

  double previous = 0.0;
  for (std::size_t it = 0; it < opts.max_iter; ++it) {
    transfer_step(rel, cur, next);
    const double estimate = *std::max_element(cur.begin(), cur.end());
    for (auto& x : cur) x /= estimate;
    if (it > 0 && std::abs(estimate - previous) <= opts.tol * estimate) return estimate;
    previous = estimate;
  }
  throw NonConverged(opts.max_iter, previous);
}

Spectrum spectrum_small(std::size_t height, const ForbiddenPatternSet& pats,
                        std::size_t guard) {
  if (height > guard) {
    throw GuardExceeded("full spectrum for height " + std::to_string(height) +
                            " exceeds the guard of " + std::to_string(guard),
                        "eigen without --spectrum");
  }
  const TransferMatrix t = build_transfer(height, pats, guard);
  if (!t.is_symmetric()) {
    throw InvalidArgument("spectrum requires a symmetric transfer relation; " +
                          pats.describe() + " is not");
  }
  const auto k = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd a(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      a(i, j) = t.adjacent(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ? 1.0 : 0.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  Spectrum s;
  s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
  return s;
}

}  // namespace pawns
