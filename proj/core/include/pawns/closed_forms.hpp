#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pawns/board.hpp"
#include "pawns/quadratic.hpp"
#include "pawns/recurrence.hpp"

namespace pawns {

// Fibonacci numbers are indexed F_0 = F_1 = 1 throughout this header, so the
// number of 0/1 strings of length l without two adjacent 1s is F_{l+1}.

BigCount fibonacci(std::size_t i);

/// k-generalized Fibonacci: F_{k,0} = 1, F_{k,i} = 0 for i < 0, and each
/// later term is the sum of the previous k. Throws InvalidArgument if k < 2.
BigCount k_fibonacci(unsigned k, long i);

/// Number of m x n binary matrices avoiding the two-cell down-right diagonal
/// word: F_{s+1}^{|n-m|+1} * (F_0 ... F_s)^2 with s = min(m, n).
BigCount upper_bound_U(std::size_t m, std::size_t n);

/// Same with k consecutive 1s on a diagonal forbidden.
BigCount upper_bound_U_k(std::size_t m, std::size_t n, unsigned k);

/// Explicit radical formulas for M(m, n), m in {1, 2, 3}, evaluated exactly
/// in Q(sqrt 5), Q(sqrt 13) and Q(sqrt 3). Throws NonIntegerResult if the
/// result is not an integer.
BigCount table1_M(std::size_t m, std::size_t n);

/// Exact L(m, n) for m in {1, 2, 3}: F_{n+1}, (2^{n+2} - (-1)^n)/3, and the
/// order-3 recurrence L(n+3) = 2L(n+2) + 3L(n+1) - 2L(n) from 1, 5, 11.
BigCount closed_L(std::size_t m, std::size_t n);

/// Trigonometric eigenvalue form of L(3, n). With `corrected_roots` the two
/// minor roots use sqrt(39)/3 and sqrt(13)/3; otherwise the coefficients
/// 2 sqrt(39)/3 and 2 sqrt(13)/3 are used as printed.
double closed_L3_trig(std::size_t n, bool corrected_roots = true);
/// The three roots used by closed_L3_trig, largest first for corrected roots.
std::vector<double> l3_trig_roots(bool corrected_roots = true);

enum class Provenance {
  printed,    // formula used exactly as published
  reindexed,  // published formula with its Fibonacci index shifted
  corrected,  // published formula is wrong; value comes from a fitted recurrence
};

std::string to_string(Provenance p);

struct PropValue {
  BigCount value;
  Provenance provenance = Provenance::printed;
  /// What the published formula gives, when it was evaluated separately.
  std::optional<BigCount> printed_value;
  std::vector<std::string> annotations;
};

/// M(m, n) for m in {2, ..., 6} from the black/white shape formulas.
PropValue prop_M(std::size_t m, std::size_t n);

/// Generating functions of the one-colour shape counts.
namespace gf {
LinearRecurrence m3_black();       // a(x)
LinearRecurrence m3_white();       // b(x)
LinearRecurrence m4_shape();       // alpha(x), both colours
LinearRecurrence m5_black_printed();
LinearRecurrence m5_white_printed();
LinearRecurrence m5_black();       // fitted, matches transfer counts
LinearRecurrence m5_white();
LinearRecurrence m6_shape();
}  // namespace gf

/// t_n = 5 t_{n-1} - 3 t_{n-2}, t_0 = 1, t_1 = 5, and t_{-1} = 0.
BigCount t_sequence(long n);

/// Product F_1 F_2 ... F_count (values 1, 2, 3, 5, 8, ...).
BigCount fib_product(std::size_t count);

/// Partial product prod_{j=1}^{terms} (1 - ((sqrt 5 - 3)/2)^j).
double estimate_c(std::size_t terms);

/// fib_product(n) * 5^{(n+1)/2} / phi^{(n+1)(n+2)/2}, which tends to c.
double fib_product_normalized(std::size_t n);

/// fib_product(n) * 5^{(n-1)/2} / phi^{n(n-1)/2}, the normalization with the
/// exponents exactly as published. It does not converge (grows like phi^{2n}).
double fib_product_printed_normalization(std::size_t n);

/// Natural logarithm of a positive big integer, in binary64.
double log_big(const BigCount& v);

/// U(m, n)^{1/(mn)} - (1 + sqrt 5)/2.
double golden_ratio_gap(std::size_t m, std::size_t n);

/// Closed-form dominant eigenvalues alpha_1 .. alpha_4 of the M transfer
/// matrices. Throws InvalidArgument outside 1..4.
double alpha_closed(std::size_t m);

/// The nine eigenvalue expressions published for the 16 x 16 matrix T_4,
/// in their published order lambda_1 .. lambda_9.
std::vector<double> m4_published_eigenvalues();

}  // namespace pawns
