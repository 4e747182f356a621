#pragma once

// Binary entropy, zeroth-order representation cost of bit vectors, and the
// exact probability that an output bit is zero for a given degree.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fountain/errors.hpp"
#include "fountain/gf2.hpp"
#include "fountain/matrixgen.hpp"

namespace fountain {

using Rational = boost::multiprecision::cpp_rational;

// H(p) in bits, with 0 log 0 = 0.
inline double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy: p must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

struct EntropyReport {
  std::size_t n = 0;
  std::size_t ones = 0;
  double p_hat = 0.0;
  double bits_per_symbol = 0.0;
  double total_cost = 0.0;  // n * H(p_hat)
};

inline EntropyReport cost_of_counts(std::size_t n, std::size_t ones) {
  if (n == 0 || ones > n) throw DomainError("cost_of_counts: need 0 <= ones <= n, n >= 1");
  EntropyReport r;
  r.n = n;
  r.ones = ones;
  r.p_hat = static_cast<double>(ones) / static_cast<double>(n);
  r.bits_per_symbol = binary_entropy(r.p_hat);
  r.total_cost = static_cast<double>(n) * r.bits_per_symbol;
  return r;
}

inline EntropyReport empirical_cost(const BitVector& v) { return cost_of_counts(v.size(), v.count()); }

inline BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

// Probability that `degree` distinct positions drawn uniformly from k cover an
// even number of the `ones` set positions:
//   sum_{j even} C(ones, j) C(k - ones, degree - j) / C(k, degree).
inline Rational zero_prob_exact(std::size_t k, std::size_t ones, std::size_t degree) {
  if (k == 0 || degree == 0 || degree > k || ones > k) {
    throw DomainError("zero_prob_exact: need 1 <= degree <= k and 0 <= ones <= k");
  }
  BigInt even = 0;
  for (std::size_t j = 0; j <= degree && j <= ones; j += 2) even += binomial(ones, j) * binomial(k - ones, degree - j);
  return Rational(even, binomial(k, degree));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// sum_i rho(i) * p_zero[i - 1]
inline double weighted_zero_prob(const DegreeDistribution& dist, std::span<const double> p_zero) {
  if (p_zero.size() != dist.k()) throw DimensionError("weighted_zero_prob: one probability per degree required");
  double total = 0.0;
  for (std::size_t d = 1; d <= dist.k(); ++d) total += dist(d) * p_zero[d - 1];
  return total;
}

inline double weighted_zero_prob(const DegreeDistribution& dist, std::size_t k, std::size_t ones) {
  if (dist.k() != k) throw DimensionError("weighted_zero_prob: distribution size differs from k");
  std::vector<double> exact(k);
  for (std::size_t d = 1; d <= k; ++d) exact[d - 1] = to_double(zero_prob_exact(k, ones, d));
  return weighted_zero_prob(dist, exact);
}

// Published zero-output probabilities for k = 8 with four ones, Ideal
// Soliton degrees 1..8. The degree-4 value disagrees with the exact count
// (38/70); it is kept as printed for comparison.
inline constexpr std::array<double, 8> kPublishedZeroProbK8 = {0.5, 0.42857, 0.5, 0.52857, 0.5, 0.42857, 0.5, 1.0};
inline constexpr std::size_t kPublishedK = 8;
inline constexpr std::size_t kPublishedOnes = 4;

struct ZeroProbRow {
  std::size_t degree = 0;
  double rho = 0.0;
  Rational p_zero;
  std::optional<double> published;  // only when a reference column exists

  double p_one() const { return 1.0 - to_double(p_zero); }
  // Published and exact values differ at 5 decimals.
  bool discrepancy() const {
    return published && std::round(*published * 1e5) != std::round(to_double(p_zero) * 1e5);
  }
};

struct ZeroProbTable {
  std::size_t k = 0;
  std::size_t ones = 0;
  std::vector<ZeroProbRow> rows;
  double weighted_sum = 0.0;                      // exact column
  std::optional<double> weighted_sum_published;   // reference column
};

inline ZeroProbTable zero_prob_table(std::size_t k, std::size_t ones) {
  const DegreeDistribution dist = ideal_soliton(k);
  ZeroProbTable t;
  t.k = k;
  t.ones = ones;
  const bool has_reference = k == kPublishedK && ones == kPublishedOnes;
  for (std::size_t d = 1; d <= k; ++d) {
    ZeroProbRow row;
    row.degree = d;
    row.rho = dist(d);
    row.p_zero = zero_prob_exact(k, ones, d);
    if (has_reference) row.published = kPublishedZeroProbK8[d - 1];
    t.rows.push_back(std::move(row));
  }
  t.weighted_sum = weighted_zero_prob(dist, k, ones);
  if (has_reference) t.weighted_sum_published = weighted_zero_prob(dist, kPublishedZeroProbK8);
  return t;
}

// Aligned text: degree, rho, P_zero_oracle, P_zero_paper (blank when equal
// to the oracle at 5 decimals), then both weighted sums.
inline void write_table(std::ostream& os, const ZeroProbTable& t) {
  auto fixed5 = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(5) << v;
    return s.str();
  };
  os << "k=" << t.k << " ones=" << t.ones << '\n';
  os << std::left << std::setw(8) << "degree" << std::setw(10) << "rho" << std::setw(15) << "P_zero_oracle"
     << "P_zero_paper" << '\n';
  for (const auto& r : t.rows) {
    os << std::left << std::setw(8) << r.degree << std::setw(10) << fixed5(r.rho);
    const std::string oracle = fixed5(to_double(r.p_zero));
    if (r.discrepancy()) {
      os << std::setw(15) << oracle << fixed5(*r.published) << "  DISCREPANCY";
    } else {
      os << oracle;
    }
    os << '\n';
  }
  os << "weighted_sum_oracle: " << fixed5(t.weighted_sum) << '\n';
  if (t.weighted_sum_published) os << "weighted_sum_paper: " << fixed5(*t.weighted_sum_published) << '\n';
}

// E[H(J/n)] for J ~ Binomial(n, p); binomial weights evaluated in log space.
inline double binomial_avg_entropy(std::size_t n, double p) {
  if (n == 0) throw DomainError("binomial_avg_entropy: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binomial_avg_entropy: p must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  const double nd = static_cast<double>(n);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double lg_n1 = std::lgamma(nd + 1.0);
  double total = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    const double log_w = lg_n1 - std::lgamma(jd + 1.0) - std::lgamma(nd - jd + 1.0) + jd * log_p + (nd - jd) * log_q;
    total += std::exp(log_w) * binary_entropy(jd / nd);
  }
  return total;
}

// H(p - sigma/n) with sigma = sqrt(n p (1 - p)).
inline double sigma_shifted_entropy(std::size_t n, double p) {
  if (n == 0) throw DomainError("sigma_shifted_entropy: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sigma_shifted_entropy: p must lie in [0, 1]");
  const double nd = static_cast<double>(n);
  const double shifted = (nd * p - std::sqrt(nd * p * (1.0 - p))) / nd;
  if (shifted < 0.0 || shifted > 1.0) throw DomainError("sigma_shifted_entropy: shifted proportion outside [0, 1]");
  return binary_entropy(shifted);
}

}  // namespace fountain
