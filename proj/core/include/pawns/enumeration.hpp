#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "pawns/board.hpp"

namespace pawns {

/// Default cap on m*n for the 2^(mn) brute-force loop.
inline constexpr std::size_t kEnumerationGuard = 25;

/// True iff no forbidden configuration from `pats` occurs in `mat`.
bool matrix_avoids(const BinaryMatrix& mat, const ForbiddenPatternSet& pats);

/// Exact number of legal matrices by exhaustive enumeration. Empty boards
/// count as 1. Throws GuardExceeded when m*n > guard.
BigCount count_by_enumeration(BoardDims dims, const ForbiddenPatternSet& pats,
                              std::size_t guard = kEnumerationGuard);

/// Visits each legal matrix once, in increasing order of the row-major bit
/// string (cell (1,1) most significant). Same guard as above.
void for_each_legal(BoardDims dims, const ForbiddenPatternSet& pats,
                    const std::function<void(const BinaryMatrix&)>& visit,
                    std::size_t guard = kEnumerationGuard);

std::vector<BinaryMatrix> enumerate_legal(BoardDims dims,
                                          const ForbiddenPatternSet& pats,
                                          std::size_t guard = kEnumerationGuard);

}  // namespace pawns
