#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pawns/board.hpp"

namespace pawns::cli {

enum class Quantity { M, U, L };

struct CountQuery {
  Quantity quantity = Quantity::M;
  std::size_t m = 1;
  std::size_t n = 1;
  unsigned k = 2;  // diagonal run length, U only
};

struct CountResult {
  BigCount value;
  std::string method;  // engine that produced the value
  std::vector<std::string> annotations;
};

/// "M", "L", "U", or "Uk" when k > 2.
std::string quantity_name(const CountQuery& q);

/// Engines that accept the query, in the order auto tries them.
std::vector<std::string> viable_methods(const CountQuery& q);

/// method is auto, oracle, transfer, closed or decomposition. Throws
/// GuardExceeded (with a viable alternative as suggestion) or
/// InvalidArgument when the engine cannot take the query.
CountResult count(const CountQuery& q, const std::string& method);

}  // namespace pawns::cli
