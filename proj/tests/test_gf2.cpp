#include <gtest/gtest.h>

#include <sstream>

#include "fountain/gf2.hpp"
#include "fountain/matrixgen.hpp"
#include "oracles.hpp"

using namespace fountain;

namespace {

BitMatrix bidiag4() { return BitMatrix::from_rows({"1100", "0110", "0011", "0001"}); }

}  // namespace

TEST(BitVector, RejectsZeroLength) { EXPECT_THROW(BitVector(0), DomainError); }

TEST(BitVector, StringRoundTripAndCount) {
  const auto v = BitVector::from_string("1011000001");
  EXPECT_EQ(v.size(), 10u);
  EXPECT_EQ(v.count(), 4u);
  EXPECT_TRUE(v[0]);
  EXPECT_FALSE(v[1]);
  EXPECT_EQ(v.to_string(), "1011000001");
  EXPECT_THROW(BitVector::from_string("10x1"), ParseError);
}

TEST(BitVector, WordBoundary) {
  BitVector v(130);
  v.set(63, true);
  v.set(64, true);
  v.set(129, true);
  EXPECT_EQ(v.count(), 3u);
  EXPECT_EQ(*v.first_set(), 63u);
  v.flip(63);
  EXPECT_EQ(*v.first_set(), 64u);
}

TEST(Matmul, IdentityIsNeutral) {
  Rng rng(1);
  for (std::size_t k : {1u, 5u, 64u, 65u}) {
    const auto a = BitMatrix::random(k, k, rng);
    EXPECT_EQ(matmul(BitMatrix::identity(k), a), a);
    EXPECT_EQ(matmul(a, BitMatrix::identity(k)), a);
  }
}

TEST(Matmul, UnipotentTwoByTwoSquaresToIdentity) {
  const auto a = BitMatrix::from_rows({"11", "01"});
  EXPECT_EQ(matmul(a, a), BitMatrix::from_rows({"10", "01"}));
}

TEST(Matmul, BidiagonalTimesInverseIsIdentity) {
  const auto r = bidiag4();
  EXPECT_TRUE(is_identity(matmul(r, invert(r))));
}

TEST(Matmul, DimensionMismatch) {
  EXPECT_THROW(matmul(BitMatrix(2, 3), BitMatrix(2, 3)), DimensionError);
}

TEST(Matmul, AgreesWithNaiveOracle) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto a = BitMatrix::random(9, 13, rng);
    const auto b = BitMatrix::random(13, 70, rng);
    EXPECT_EQ(oracle::to_int(matmul(a, b)), oracle::matmul(oracle::to_int(a), oracle::to_int(b)));
  }
}

TEST(Matmul, Associative) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto a = BitMatrix::random(20, 20, rng);
    const auto b = BitMatrix::random(20, 20, rng);
    const auto c = BitMatrix::random(20, 20, rng);
    EXPECT_EQ(matmul(matmul(a, b), c), matmul(a, matmul(b, c)));
  }
}

TEST(Matvec, Examples) {
  const auto x = BitVector::from_string("1011");
  EXPECT_EQ(matvec(BitMatrix::identity(4), x), x);
  EXPECT_EQ(matvec(bidiag4(), BitVector::from_string("1111")).to_string(), "0001");
  // A degree-8 row over a vector with four ones always gives 0.
  EXPECT_EQ(matvec(BitMatrix::from_rows({"11111111"}), BitVector::from_string("10110100")).to_string(), "0");
  EXPECT_THROW(matvec(bidiag4(), BitVector(5)), DimensionError);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(BitMatrix::identity(7)), 7u);
  EXPECT_EQ(rank(BitMatrix(6, 6)), 0u);
  EXPECT_EQ(rank(BitMatrix::from_rows({"11", "11"})), 1u);
  EXPECT_EQ(rank(BitMatrix::from_rows({"101", "011", "110", "111"})), 3u);  // rectangular
}

TEST(Rank, AgreesWithSpanEnumeration) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + uniform_below(rng, 8);
    const std::size_t cols = 1 + uniform_below(rng, 8);
    auto m = BitMatrix::random(rows, cols, rng);
    // Sparsify some rows so that low ranks are exercised.
    for (std::size_t l = 0; l < rows; ++l)
      if (uniform_below(rng, 3) == 0) m.row(l) = BitVector(cols);
    EXPECT_EQ(rank(m), oracle::span_rank(oracle::to_int(m)));
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(BitMatrix::identity(5)), BitMatrix::identity(5));
  EXPECT_EQ(invert(bidiag4()), BitMatrix::from_rows({"1111", "0111", "0011", "0001"}));
  EXPECT_THROW(invert(BitMatrix::from_rows({"11", "11"})), SingularError);
  EXPECT_THROW(invert(BitMatrix(2, 3)), DimensionError);
}

TEST(Invert, RankKIffInvertible) {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 1 + uniform_below(rng, 10);
    const auto m = BitMatrix::random(k, k, rng);
    bool inverted = true;
    try {
      (void)invert(m);
    } catch (const SingularError&) {
      inverted = false;
    }
    EXPECT_EQ(inverted, rank(m) == k);
  }
}

TEST(Invert, TwoSidedInverseAndRoundTrip) {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + uniform_below(rng, 64);
    const auto r = random_invertible(k, rng);
    const auto inv = invert(r);
    EXPECT_TRUE(is_identity(matmul(r, inv)));
    EXPECT_TRUE(is_identity(matmul(inv, r)));
    const auto x = BitVector::random(k, rng);
    EXPECT_EQ(matvec(inv, matvec(r, x)), x);
  }
}

TEST(Matpow, Examples) {
  Rng rng(2);
  const auto a = BitMatrix::random(6, 6, rng);
  EXPECT_TRUE(is_identity(matpow(a, 0)));
  EXPECT_EQ(matpow(a, 1), a);
  EXPECT_TRUE(is_identity(matpow(BitMatrix::from_rows({"11", "01"}), 2)));
  EXPECT_TRUE(is_identity(matpow(bidiag4(), 4)));
}

TEST(Matpow, MatchesRepeatedMultiplication) {
  const auto r = bidiag4();
  BitMatrix acc = BitMatrix::identity(4);
  for (std::uint64_t e = 0; e < 10; ++e) {
    EXPECT_EQ(matpow(r, e), acc) << "e=" << e;
    acc = matmul(acc, r);
  }
}

TEST(Matpow, ExponentsAdd) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto m = BitMatrix::random(12, 12, rng);
    const auto a = uniform_below(rng, 40);
    const auto b = uniform_below(rng, 40);
    EXPECT_EQ(matpow(m, a + b), matmul(matpow(m, a), matpow(m, b)));
  }
}

TEST(TextFormat, MatrixRoundTripIsByteExact) {
  const std::string text = "4 4\n1100\n0110\n0011\n0001\n";
  const auto m = matrix_from_text(text);
  EXPECT_EQ(m, bidiag4());
  EXPECT_EQ(to_text(m), text);
}

TEST(TextFormat, MalformedMatrices) {
  EXPECT_THROW(matrix_from_text(""), ParseError);
  EXPECT_THROW(matrix_from_text("2\n11\n01\n"), ParseError);
  EXPECT_THROW(matrix_from_text("2 2\n11\n"), ParseError);
  EXPECT_THROW(matrix_from_text("2 2\n11\n012\n"), ParseError);
  EXPECT_THROW(matrix_from_text("2 2\n11\n0a\n"), ParseError);
  EXPECT_THROW(matrix_from_text("0 0\n"), ParseError);
  EXPECT_THROW(matrix_from_text("-1 2\n"), ParseError);
}

TEST(TextFormat, VectorIsLeftmostFirst) {
  std::istringstream is("0001\n");
  const auto v = read_vector(is);
  EXPECT_FALSE(v[0]);
  EXPECT_TRUE(v[3]);
  std::ostringstream os;
  write_vector(os, v);
  EXPECT_EQ(os.str(), "0001\n");
}
