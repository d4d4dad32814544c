#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pawns/board.hpp"

namespace pawns {

/// Dense integer polynomial, coefficients from x^0 upward.
using Polynomial = std::vector<BigCount>;

std::string format_polynomial(const Polynomial& p);

/// Rational generating function numerator / denominator with integer
/// coefficients and denominator constant term 1. The denominator encodes
/// the recurrence s(n) = -sum_{i>=1} den[i] s(n-i).
struct LinearRecurrence {
  Polynomial numerator;
  Polynomial denominator;

  std::size_t order() const noexcept {
    return denominator.empty() ? 0 : denominator.size() - 1;
  }
  /// c_1..c_order with s(n) = sum c_i s(n-i).
  std::vector<BigCount> coefficients() const;
  std::string to_string() const;

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

/// First `count` Taylor coefficients of numerator/denominator.
/// Throws InvalidArgument if the denominator constant term is not 1.
std::vector<BigCount> expand_gf(const LinearRecurrence& rec, std::size_t count);

/// Minimal-order linear recurrence satisfied by the whole of `seq`, found by
/// Berlekamp-Massey over the rationals. Returns nullopt (NoFit) when the
/// minimal order exceeds `max_order`, when the recurrence has non-integer
/// coefficients, or when the sequence is too short (fewer than
/// 2*max_order + 2 terms) to certify a fit of that order.
std::optional<LinearRecurrence> fit_linear_recurrence(const std::vector<BigCount>& seq,
                                                      std::size_t max_order);

}  // namespace pawns
