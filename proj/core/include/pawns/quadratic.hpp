#pragma once

#include <string>

#include <gmpxx.h>

#include "pawns/board.hpp"

namespace pawns {

/// Raised when an exact formula that must yield an integer does not.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

/// Exact element rational + irrational * sqrt(D) of the quadratic field Q(sqrt D).
template <int D>
class QuadraticSurd {
  static_assert(D > 1, "radicand must exceed 1");

 public:
  QuadraticSurd() = default;
  QuadraticSurd(mpq_class rational, mpq_class irrational = 0)
      : a_(std::move(rational)), b_(std::move(irrational)) {
    a_.canonicalize();
    b_.canonicalize();
  }
  static QuadraticSurd root() { return {0, 1}; }

  const mpq_class& rational() const noexcept { return a_; }
  const mpq_class& irrational() const noexcept { return b_; }

  QuadraticSurd conjugate() const { return {a_, -b_}; }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ * y.a_ + D * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  QuadraticSurd pow(unsigned long e) const {
    QuadraticSurd result{1}, base = *this;
    while (e) {
      if (e & 1UL) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// The value as an integer; throws NonIntegerResult if the sqrt(D) part
  /// does not cancel or the rational part has a denominator.
  mpz_class to_integer() const {
    if (b_ != 0 || a_.get_den() != 1) {
      throw NonIntegerResult("value " + a_.get_str() + " + (" + b_.get_str() + ")*sqrt(" +
                             std::to_string(D) + ") is not an integer");
    }
    return a_.get_num();
  }

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

}  // namespace pawns
