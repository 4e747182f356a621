#pragma once

// Construction of encoding matrices: Ideal Soliton sampling with full-rank
// row rejection, the bidiagonal differencing matrix, and |GL(k, 2)|.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fountain/errors.hpp"
#include "fountain/gf2.hpp"
#include "fountain/random.hpp"

namespace fountain {

using BigInt = boost::multiprecision::cpp_int;

// Probability mass over degrees 1..k. mass()[d - 1] is the probability of degree d.
class DegreeDistribution {
public:
  explicit DegreeDistribution(std::vector<double> mass) : mass_(std::move(mass)) {
    if (mass_.empty()) throw DomainError("degree distribution needs k >= 1");
    long double total = 0;
    for (double p : mass_) {
      if (!(p >= 0.0)) throw DomainError("degree probabilities must be non-negative");
      total += p;
    }
    if (std::fabs(static_cast<double>(total) - 1.0) > 1e-12) {
      throw DomainError("degree probabilities must sum to 1");
    }
    cdf_.resize(mass_.size());
    long double running = 0;
    for (std::size_t i = 0; i < mass_.size(); ++i) {
      running += mass_[i];
      cdf_[i] = static_cast<double>(running);
    }
  }

  // All mass on one degree.
  static DegreeDistribution point(std::size_t k, std::size_t degree) {
    if (degree == 0 || degree > k) throw DomainError("point mass degree must lie in 1..k");
    std::vector<double> mass(k, 0.0);
    mass[degree - 1] = 1.0;
    return DegreeDistribution(std::move(mass));
  }

  std::size_t k() const noexcept { return mass_.size(); }
  double operator()(std::size_t degree) const noexcept { return mass_[degree - 1]; }
  std::span<const double> mass() const noexcept { return mass_; }

  std::size_t sample_degree(Rng& rng) const {
    const double u = uniform_unit(rng);
    for (std::size_t i = 0; i < cdf_.size(); ++i) {
      if (u < cdf_[i] && mass_[i] > 0.0) return i + 1;
    }
    // u landed in rounding slack above the last cdf value.
    for (std::size_t i = mass_.size(); i-- > 0;) {
      if (mass_[i] > 0.0) return i + 1;
    }
    return mass_.size();
  }

private:
  std::vector<double> mass_;
  std::vector<double> cdf_;
};

// rho(1) = 1/k, rho(i) = 1/(i(i-1)) for i = 2..k.
inline DegreeDistribution ideal_soliton(std::size_t k) {
  if (k == 0) throw DomainError("ideal_soliton: k must be >= 1");
  std::vector<double> mass(k);
  mass[0] = 1.0 / static_cast<double>(k);
  for (std::size_t i = 2; i <= k; ++i) {
    mass[i - 1] = 1.0 / (static_cast<double>(i) * static_cast<double>(i - 1));
  }
  return DegreeDistribution(std::move(mass));
}

struct GenConfig {
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::size_t max_row_attempts = 1000;
};

// Draw a degree d, then d distinct positions uniformly (Floyd's algorithm).
inline BitVector sample_row(const DegreeDistribution& dist, Rng& rng) {
  const std::size_t k = dist.k();
  const std::size_t d = dist.sample_degree(rng);
  BitVector row(k);
  for (std::size_t j = k - d; j < k; ++j) {
    const auto t = static_cast<std::size_t>(uniform_below(rng, j + 1));
    row.set(row.get(t) ? j : t, true);
  }
  return row;
}

// Incrementally reduced row basis; each stored vector is keyed by its first set bit.
class RowBasis {
public:
  explicit RowBasis(std::size_t k) : by_pivot_(k) {}

  std::size_t rank() const noexcept { return rank_; }

  // Adds `row` if it is independent of the rows inserted so far.
  bool insert(BitVector row) {
    while (auto p = row.first_set()) {
      if (!by_pivot_[*p]) {
        by_pivot_[*p] = std::move(row);
        ++rank_;
        return true;
      }
      row ^= *by_pivot_[*p];
    }
    return false;
  }

private:
  std::vector<std::optional<BitVector>> by_pivot_;
  std::size_t rank_ = 0;
};

// k x k matrix of rank k. Each row is resampled until it raises the running
// rank; rows therefore follow `dist` conditioned on independence.
inline BitMatrix gen_full_rank(const DegreeDistribution& dist, Rng& rng, std::size_t max_row_attempts = 1000) {
  if (max_row_attempts == 0) throw DomainError("max_row_attempts must be >= 1");
  const std::size_t k = dist.k();
  RowBasis basis(k);
  std::vector<BitVector> rows;
  rows.reserve(k);
  for (std::size_t l = 0; l < k; ++l) {
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < max_row_attempts && !accepted; ++attempt) {
      BitVector candidate = sample_row(dist, rng);
      if (basis.insert(candidate)) {
        rows.push_back(std::move(candidate));
        accepted = true;
      }
    }
    if (!accepted) {
      throw GenerationError("row " + std::to_string(l + 1) + " of " + std::to_string(k) + " found no independent row in " +
                            std::to_string(max_row_attempts) + " attempts");
    }
  }
  return BitMatrix(std::move(rows));
}

inline BitMatrix gen_full_rank(const DegreeDistribution& dist, const GenConfig& cfg) {
  if (cfg.k != dist.k()) throw DimensionError("GenConfig.k does not match the distribution");
  Rng rng(cfg.seed);
  return gen_full_rank(dist, rng, cfg.max_row_attempts);
}

// Uniform over invertible matrices, by rejection on uniform random matrices.
inline BitMatrix random_invertible(std::size_t k, Rng& rng) {
  for (;;) {
    BitMatrix m = BitMatrix::random(k, k, rng);
    if (rank(m) == k) return m;
  }
}

// r(l, l) = 1, r(l, l + 1) = 1 for l < k - 1, zero elsewhere.
inline BitMatrix bidiagonal(std::size_t k) {
  if (k == 0) throw DomainError("bidiagonal: k must be >= 1");
  BitMatrix m(k, k);
  for (std::size_t l = 0; l < k; ++l) {
    m.set(l, l, true);
    if (l + 1 < k) m.set(l, l + 1, true);
  }
  return m;
}

// |GL(k, 2)| = prod_{i=0}^{k-1} (2^k - 2^i)
inline BigInt count_invertible(std::size_t k) {
  BigInt total = 1;
  const BigInt full = BigInt(1) << k;
  for (std::size_t i = 0; i < k; ++i) total *= full - (BigInt(1) << i);
  return total;
}

}  // namespace fountain
