#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pawns/enumeration.hpp"
#include "pawns/transfer.hpp"

namespace pawns {
namespace {

const auto kM = ForbiddenPatternSet::m_set();
const auto kU = ForbiddenPatternSet::u_set();
const auto kL = ForbiddenPatternSet::l_set();

constexpr const char* kT2 =
    "1 1 1 1\n"
    "1 1 0 0\n"
    "1 0 1 0\n"
    "1 0 0 0\n";

constexpr const char* kT3 =
    "1 1 1 1 1 1 1 1\n"
    "1 1 0 0 1 1 0 0\n"
    "1 0 1 0 0 0 0 0\n"
    "1 0 0 0 0 0 0 0\n"
    "1 1 0 0 1 1 0 0\n"
    "1 1 0 0 1 1 0 0\n"
    "1 0 0 0 0 0 0 0\n"
    "1 0 0 0 0 0 0 0\n";

ColumnMask col(const char* s) { return ColumnMask::from_string(s); }

TEST(Compatible, PublishedEntries) {
  EXPECT_TRUE(compatible(col("01"), col("01"), kM));
  EXPECT_FALSE(compatible(col("01"), col("10"), kM));
  EXPECT_FALSE(compatible(col("001"), col("001"), kL));
  EXPECT_TRUE(compatible(col("001"), col("001"), kM));
}

TEST(Compatible, ZeroColumnConflictsWithNothing) {
  for (std::uint32_t w = 0; w < 32; ++w) {
    EXPECT_TRUE(compatible({5, 0}, {5, w}, kM));
    EXPECT_TRUE(compatible({5, 0}, {5, w}, kU));
    EXPECT_TRUE(compatible({5, w}, {5, 0}, kM));
  }
}

TEST(Compatible, Errors) {
  EXPECT_THROW(compatible(col("01"), col("010"), kM), InvalidArgument);
  EXPECT_THROW(compatible(col("01"), col("01"), ForbiddenPatternSet::uk_set(3)), InvalidArgument);
  EXPECT_NO_THROW(compatible(col("01"), col("01"), ForbiddenPatternSet::uk_set(2)));
}

TEST(BuildTransfer, ReproducesPublishedMatrices) {
  EXPECT_EQ(build_transfer(2, kM).to_text(), kT2);
  EXPECT_EQ(build_transfer(3, kM).to_text(), kT3);
}

TEST(BuildTransfer, HeightOneIsAllOnes) {
  EXPECT_EQ(build_transfer(1, kM).to_text(), "1 1\n1 1\n");
}

TEST(BuildTransfer, LSetVerticesAndDegrees) {
  const auto t = build_transfer(3, kL);
  EXPECT_EQ(t.vertices(), (std::vector<std::uint32_t>{0b000, 0b001, 0b010, 0b100, 0b101}));
  std::vector<std::size_t> degrees;
  for (std::size_t a = 0; a < t.size(); ++a) degrees.push_back(t.row_degree(a));
  EXPECT_EQ(degrees, (std::vector<std::size_t>{5, 2, 1, 2, 1}));
  EXPECT_TRUE(t.is_symmetric());
}

TEST(BuildTransfer, AgreesWithCompatibleEverywhere) {
  for (const auto& p : {kM, kU, kL}) {
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto t = build_transfer(m, p);
      if (p != kL) EXPECT_EQ(t.size(), std::size_t{1} << m);
      EXPECT_EQ(t.is_symmetric(), p != kU || m == 1);
      for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
          ASSERT_EQ(t.adjacent(a, b), compatible({m, t.vertices()[a]}, {m, t.vertices()[b]}, p));
        }
      }
    }
  }
}

TEST(BuildTransfer, Guards) {
  EXPECT_THROW(build_transfer(0, kM), InvalidArgument);
  EXPECT_THROW(build_transfer(15, kM), GuardExceeded);
  EXPECT_THROW(build_transfer(5, kM, 4), GuardExceeded);
}

TEST(CountViaTransfer, Examples) {
  EXPECT_EQ(count_via_transfer(2, 2, kM), 9);
  EXPECT_EQ(count_via_transfer(3, 2, kM), 25);
  EXPECT_EQ(count_via_transfer(3, 5, kM), 2117);
  EXPECT_EQ(count_via_transfer(3, 3, kL), 35);
  EXPECT_EQ(count_via_transfer(3, 0, kM), 1);
  EXPECT_EQ(count_via_transfer(3, 1, kM), 8);
  EXPECT_EQ(count_via_transfer(3, 1, kL), 5);
  for (std::size_t n = 0; n <= 40; ++n) {
    EXPECT_EQ(count_via_transfer(1, n, kM), BigCount(1) << static_cast<mp_bitcnt_t>(n));
  }
}

TEST(CountViaTransfer, MatchesEntrySumOfDenseMatrix) {
  const auto t = build_transfer(3, kM);
  std::size_t sum = 0;
  for (std::size_t a = 0; a < t.size(); ++a) sum += t.row_degree(a);
  EXPECT_EQ(count_via_transfer(3, 2, kM), static_cast<unsigned long>(sum));
}

TEST(CountViaTransfer, AgreesWithOracle) {
  for (const auto& p : {kM, kU, kL, ForbiddenPatternSet::uk_set(2)}) {
    for (std::size_t m = 1; m <= 8; ++m) {
      for (std::size_t n = 0; m * n <= 16; ++n) {
        EXPECT_EQ(count_via_transfer(m, n, p), count_by_enumeration({m, n}, p))
            << p.describe() << " " << m << "x" << n;
      }
    }
  }
}

TEST(CountViaTransfer, TransposeSymmetry) {
  for (std::size_t m = 1; m <= 8; ++m) {
    for (std::size_t n = m + 1; n <= 8; ++n) {
      EXPECT_EQ(count_via_transfer(m, n, kM), count_via_transfer(n, m, kM));
      EXPECT_EQ(count_via_transfer(m, n, kL), count_via_transfer(n, m, kL));
    }
  }
}

TEST(CountViaTransfer, SequenceMatchesPointwise) {
  const auto seq = count_sequence_via_transfer(4, 10, kM);
  ASSERT_EQ(seq.size(), 11u);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(seq[n], count_via_transfer(4, n, kM));
}

TEST(CountViaTransfer, Guard) {
  EXPECT_THROW(count_via_transfer(25, 3, kM), GuardExceeded);
}

TEST(DominantEigenvalue, PublishedValues) {
  EXPECT_NEAR(dominant_eigenvalue(1, kM), 2.0, 1e-12);
  EXPECT_NEAR(dominant_eigenvalue(2, kM), std::numbers::phi * std::numbers::phi, 1e-8);
  EXPECT_NEAR(dominant_eigenvalue(3, kM), (5 + std::sqrt(13.0)) / 2, 1e-8);
  const double gamma = std::atan(3.0 / 67.0 * std::sqrt(111.0)) / 3.0;
  EXPECT_NEAR(dominant_eigenvalue(4, kM), 8.0 / 3 + 4.0 / 3 * std::sqrt(7.0) * std::cos(gamma), 1e-8);
}

TEST(DominantEigenvalue, MatchesDenseSpectrumAndIncreases) {
  double previous = 0;
  for (std::size_t m = 1; m <= 8; ++m) {
    const double alpha = dominant_eigenvalue(m, kM);
    EXPECT_NEAR(alpha, spectrum_small(m, kM).eigenvalues.front(), 1e-8 * alpha);
    EXPECT_GT(alpha, previous);
    const double root = std::pow(alpha, 1.0 / static_cast<double>(m));
    EXPECT_GT(root, 1.5);
    EXPECT_LE(root, 2.0);
    previous = alpha;
  }
  EXPECT_NEAR(dominant_eigenvalue(3, kL), spectrum_small(3, kL).eigenvalues.front(), 1e-8);
}

TEST(DominantEigenvalue, CountRatioApproachesEigenvalue) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto seq = count_sequence_via_transfer(m, 201, kM);
    const mpq_class ratio(seq[201], seq[200]);
    EXPECT_NEAR(ratio.get_d(), dominant_eigenvalue(m, kM), 1e-6) << m;
  }
}

TEST(DominantEigenvalue, NonConvergedAndBadInput) {
  EXPECT_THROW(dominant_eigenvalue(6, kM, {1e-14, 2}), NonConverged);
  EXPECT_THROW(dominant_eigenvalue(0, kM), InvalidArgument);
  EXPECT_THROW(dominant_eigenvalue(3, kM, {0.0, 10}), InvalidArgument);
}

TEST(SpectrumSmall, SmallCases) {
  const auto s1 = spectrum_small(1, kM);
  ASSERT_EQ(s1.eigenvalues.size(), 2u);
  EXPECT_NEAR(s1.eigenvalues[0], 2.0, 1e-12);
  EXPECT_NEAR(s1.eigenvalues[1], 0.0, 1e-12);
  EXPECT_NEAR(spectrum_small(2, kM).eigenvalues.front(), std::numbers::phi * std::numbers::phi, 1e-12);
}

TEST(SpectrumSmall, HeightFourHasNineNonzeroEigenvalues) {
  const auto s = spectrum_small(4, kM);
  ASSERT_EQ(s.eigenvalues.size(), 16u);
  std::size_t nonzero = 0;
  double trace = 0;
  for (double x : s.eigenvalues) {
    if (std::abs(x) > 1e-9) ++nonzero;
    trace += x;
  }
  EXPECT_EQ(nonzero, 9u);
  // Trace = number of self-compatible columns.
  std::size_t loops = 0;
  const auto t = build_transfer(4, kM);
  for (std::size_t a = 0; a < t.size(); ++a) loops += t.adjacent(a, a);
  EXPECT_NEAR(trace, static_cast<double>(loops), 1e-9);
}

TEST(SpectrumSmall, Errors) {
  EXPECT_THROW(spectrum_small(3, kU), InvalidArgument);
  EXPECT_THROW(spectrum_small(11, kM), GuardExceeded);
}

}  // namespace
}  // namespace pawns
