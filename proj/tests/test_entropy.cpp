#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fountain/entropy.hpp"
#include "oracles.hpp"

using namespace fountain;

TEST(BinaryEntropy, Examples) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.25), 0.8112781244591328, 1e-15);
  EXPECT_THROW(binary_entropy(-0.01), DomainError);
  EXPECT_THROW(binary_entropy(1.01), DomainError);
  EXPECT_THROW(binary_entropy(std::nan("")), DomainError);
}

TEST(BinaryEntropy, DeficitOfNinetyCostsAboutOneBitAtFigureScale) {
  // Near p = 1/2, n (1 - H(1/2 - d/n)) ~ 2 d^2 / (n ln 2).
  const double n = 30204;
  const double diff = n * binary_entropy(15102 / n) - n * binary_entropy((15102 - 90) / n);
  const double taylor = 2 * 90.0 * 90.0 / (n * std::log(2.0));
  EXPECT_NEAR(diff, taylor, 1e-3);
  EXPECT_GT(diff, 0.5);
  EXPECT_LT(diff, 1.5);
}

TEST(EmpiricalCost, Examples) {
  const auto balanced = empirical_cost(BitVector::from_string("10100110"));
  EXPECT_EQ(balanced.ones, 4u);
  EXPECT_DOUBLE_EQ(balanced.p_hat, 0.5);
  EXPECT_DOUBLE_EQ(balanced.total_cost, 8.0);
  EXPECT_EQ(empirical_cost(BitVector(100)).total_cost, 0.0);
  const auto r = empirical_cost(BitVector::from_string("1000"));
  EXPECT_DOUBLE_EQ(r.total_cost, 4 * r.bits_per_symbol);
}

TEST(ZeroProbExact, PublishedRows) {
  EXPECT_EQ(zero_prob_exact(8, 4, 2), Rational(12, 28));
  EXPECT_EQ(zero_prob_exact(8, 4, 8), Rational(1));
  EXPECT_EQ(zero_prob_exact(8, 4, 4), Rational(38, 70));
  EXPECT_NEAR(to_double(zero_prob_exact(8, 4, 2)), 0.42857, 5e-6);
}

TEST(ZeroProbExact, MatchesSubsetEnumeration) {
  for (std::size_t k = 1; k <= 10; ++k)
    for (std::size_t ones = 0; ones <= k; ++ones)
      for (std::size_t d = 1; d <= k; ++d)
        EXPECT_DOUBLE_EQ(to_double(zero_prob_exact(k, ones, d)), oracle::zero_prob(k, ones, d))
            << k << ' ' << ones << ' ' << d;
}

TEST(ZeroProbExact, ParityComplementSumsToOne) {
  for (std::size_t k = 1; k <= 30; k += 3)
    for (std::size_t ones = 0; ones <= k; ++ones)
      for (std::size_t d = 1; d <= k; ++d) {
        BigInt odd = 0;
        for (std::size_t j = 1; j <= d && j <= ones; j += 2) odd += binomial(ones, j) * binomial(k - ones, d - j);
        EXPECT_EQ(zero_prob_exact(k, ones, d) + Rational(odd, binomial(k, d)), Rational(1));
      }
}

TEST(ZeroProbExact, DomainErrors) {
  EXPECT_THROW(zero_prob_exact(8, 4, 0), DomainError);
  EXPECT_THROW(zero_prob_exact(8, 4, 9), DomainError);
  EXPECT_THROW(zero_prob_exact(8, 9, 2), DomainError);
}

TEST(ZeroProbExact, DegreeTwoIsLowestForKEight) {
  const double two = to_double(zero_prob_exact(8, 4, 2));
  for (std::size_t d = 1; d <= 7; ++d) EXPECT_LE(two, to_double(zero_prob_exact(8, 4, d))) << d;
}

TEST(ZeroProbExact, MonteCarloAgreement) {
  Rng rng(12);
  const std::size_t k = 8, samples = 100000;
  const BitVector input = BitVector::from_string("11110000");
  for (std::size_t d = 1; d <= k; ++d) {
    const auto dist = DegreeDistribution::point(k, d);
    std::size_t zeros = 0;
    for (std::size_t s = 0; s < samples; ++s) zeros += !sample_row(dist, rng).dot(input);
    const double p = to_double(zero_prob_exact(k, 4, d));
    const double sigma = std::sqrt(samples * p * (1 - p));
    EXPECT_LE(std::fabs(static_cast<double>(zeros) - samples * p), 3 * sigma + 1e-9) << "degree " << d;
  }
}

TEST(WeightedZeroProb, PublishedAndExactColumns) {
  const auto dist = ideal_soliton(8);
  EXPECT_NEAR(weighted_zero_prob(dist, kPublishedZeroProbK8), 0.47321, 1e-5);
  EXPECT_NEAR(weighted_zero_prob(dist, 8, 4), 0.47440, 1e-5);
  EXPECT_DOUBLE_EQ(weighted_zero_prob(DegreeDistribution::point(8, 8), 8, 4), 1.0);
  EXPECT_DOUBLE_EQ(weighted_zero_prob(DegreeDistribution::point(8, 8), 8, 6), 1.0);
}

TEST(WeightedZeroProb, IsConvexCombination) {
  for (std::size_t k = 2; k <= 20; ++k)
    for (std::size_t ones = 0; ones <= k; ++ones) {
      double lo = 1, hi = 0;
      for (std::size_t d = 1; d <= k; ++d) {
        lo = std::min(lo, to_double(zero_prob_exact(k, ones, d)));
        hi = std::max(hi, to_double(zero_prob_exact(k, ones, d)));
      }
      const double w = weighted_zero_prob(ideal_soliton(k), k, ones);
      EXPECT_GE(w, lo - 1e-12);
      EXPECT_LE(w, hi + 1e-12);
    }
}

TEST(ZeroProbTable, DefaultReport) {
  const auto t = zero_prob_table(8, 4);
  ASSERT_EQ(t.rows.size(), 8u);
  for (const auto& r : t.rows) EXPECT_EQ(r.discrepancy(), r.degree == 4) << r.degree;
  std::ostringstream os;
  write_table(os, t);
  const std::string text = os.str();
  EXPECT_NE(text.find("P_zero_oracle"), std::string::npos);
  EXPECT_NE(text.find("0.54286        0.52857  DISCREPANCY"), std::string::npos) << text;
  EXPECT_NE(text.find("weighted_sum_oracle: 0.47440"), std::string::npos);
  EXPECT_NE(text.find("weighted_sum_paper: 0.47321"), std::string::npos);
  EXPECT_NE(text.find("2       0.50000   0.42857\n"), std::string::npos) << text;
}

TEST(ZeroProbTable, NoOnesMeansAlwaysZero) {
  const auto t = zero_prob_table(8, 0);
  for (const auto& r : t.rows) EXPECT_EQ(r.p_zero, Rational(1));
  EXPECT_FALSE(t.weighted_sum_published);
  EXPECT_NEAR(t.weighted_sum, 1.0, 1e-12);
}

TEST(BinomialAvgEntropy, Examples) {
  EXPECT_EQ(binomial_avg_entropy(1, 0.5), 0.0);
  EXPECT_EQ(binomial_avg_entropy(50, 0.0), 0.0);
  EXPECT_EQ(binomial_avg_entropy(50, 1.0), 0.0);
  // Exact rational summation over C(100, j) / 2^100 gives 0.99274996335799850;
  // H(0.45) = 0.99277445398780830. Close, but not equal.
  const double avg = binomial_avg_entropy(100, 0.5);
  EXPECT_LT(avg, 1.0);
  EXPECT_NEAR(avg, 0.9927499633579985, 1e-13);
  EXPECT_NEAR(sigma_shifted_entropy(100, 0.5), 0.9927744539878083, 1e-13);
  EXPECT_GT(std::fabs(avg - sigma_shifted_entropy(100, 0.5)), 1e-5);
}

TEST(BinomialAvgEntropy, MatchesDirectSummation) {
  // Probabilities by the pmf recurrence in long double.
  for (std::size_t n : {2u, 7u, 40u, 300u}) {
    for (double p : {0.1, 0.5, 0.77}) {
      long double pmf = std::pow(1.0L - p, static_cast<long double>(n));
      long double total = 0;
      for (std::size_t j = 0; j <= n; ++j) {
        total += pmf * binary_entropy(static_cast<double>(j) / n);
        pmf = pmf * (n - j) / (j + 1) * p / (1 - p);
      }
      EXPECT_NEAR(binomial_avg_entropy(n, p), static_cast<double>(total), 1e-12) << n << ' ' << p;
    }
  }
}

TEST(BinomialAvgEntropy, JensenBound) {
  for (std::size_t n : {2u, 10u, 1000u, 30204u})
    for (double p : {0.05, 0.3, 0.5, 0.9}) EXPECT_LT(binomial_avg_entropy(n, p), binary_entropy(p));
}

TEST(SigmaShiftedEntropy, Examples) {
  EXPECT_NEAR(sigma_shifted_entropy(4, 0.5), binary_entropy(0.25), 1e-15);
  EXPECT_NEAR(sigma_shifted_entropy(4, 0.5), 0.8112781244591328, 1e-12);
  EXPECT_EQ(sigma_shifted_entropy(10, 0.0), 0.0);
  // n = 1, p = 1/2: shifted proportion is 0.
  EXPECT_EQ(sigma_shifted_entropy(1, 0.5), 0.0);
  EXPECT_THROW(sigma_shifted_entropy(1, 0.1), DomainError);
  EXPECT_THROW(sigma_shifted_entropy(0, 0.5), DomainError);
}
