#pragma once

// The permutation of {0,1}^k induced by an invertible matrix, cycle
// structure, and checks of the group axioms for invertible matrices.
//
// Vector x is numbered j = 1 + sum_m x(m) 2^m (0-based m), so element 0 of
// the vector is the least significant bit and the all-zeros vector is 1.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fountain/errors.hpp"
#include "fountain/gf2.hpp"
#include "fountain/matrixgen.hpp"
#include "fountain/random.hpp"

namespace fountain {

inline constexpr std::size_t kDefaultPermutationCap = 20;

// List representation: image(j) for j = 1..n, values 1-based.
class Permutation {
public:
  explicit Permutation(std::vector<std::uint32_t> list) : list_(std::move(list)) {
    if (!is_bijection(list_)) throw DomainError("permutation list is not a bijection on 1..n");
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::uint32_t> list(n);
    std::iota(list.begin(), list.end(), 1U);
    return Permutation(std::move(list));
  }

  std::size_t size() const noexcept { return list_.size(); }
  std::uint32_t operator()(std::uint32_t j) const noexcept { return list_[j - 1]; }
  const std::vector<std::uint32_t>& list() const noexcept { return list_; }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(list_.size());
    for (std::size_t j = 0; j < list_.size(); ++j) inv[list_[j] - 1] = static_cast<std::uint32_t>(j + 1);
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.list_ < b.list_; }

  static bool is_bijection(const std::vector<std::uint32_t>& list) {
    if (list.empty()) return false;
    std::vector<bool> seen(list.size(), false);
    for (std::uint32_t v : list) {
      if (v == 0 || v > list.size() || seen[v - 1]) return false;
      seen[v - 1] = true;
    }
    return true;
  }

private:
  std::vector<std::uint32_t> list_;
};

// (p o q)(j) = p(q(j))
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DimensionError("compose: permutations act on different sets");
  std::vector<std::uint32_t> out(p.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = p(q.list()[j]);
  return Permutation(std::move(out));
}

inline Permutation induce_permutation(const BitMatrix& r, std::size_t cap = kDefaultPermutationCap) {
  if (!r.square()) throw DimensionError("induce_permutation: matrix is not square");
  const std::size_t k = r.rows();
  if (k > cap) {
    throw CapError("induce_permutation: k = " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  }
  if (k >= 32) throw CapError("induce_permutation: k must be < 32");
  if (rank(r) != k) throw SingularError("induce_permutation: matrix is singular");

  // Column m of R is the image of the m-th unit vector; images of other
  // vectors follow by linearity, one XOR per element.
  std::vector<std::uint32_t> column(k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t m = 0; m < k; ++m) {
      if (r.get(l, m)) column[m] |= 1U << l;
    }
  }
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::uint32_t> image(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    image[j] = image[j & (j - 1)] ^ column[static_cast<std::size_t>(std::countr_zero(j))];
  }
  for (auto& v : image) ++v;
  return Permutation(std::move(image));
}

// Cycles in ascending order of their smallest element, each starting there.
struct CycleDecomposition {
  std::vector<std::vector<std::uint32_t>> cycles;

  std::size_t element_count() const {
    std::size_t total = 0;
    for (const auto& c : cycles) total += c.size();
    return total;
  }

  // lcm of the cycle lengths.
  BigInt order() const {
    BigInt result = 1;
    for (const auto& c : cycles) result = boost::multiprecision::lcm(result, BigInt(c.size()));
    return result;
  }
};

inline CycleDecomposition cycles(const Permutation& p) {
  CycleDecomposition out;
  std::vector<bool> visited(p.size(), false);
  for (std::uint32_t start = 1; start <= p.size(); ++start) {
    if (visited[start - 1]) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t j = start; !visited[j - 1]; j = p(j)) {
      visited[j - 1] = true;
      cycle.push_back(j);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

// "n=<size>" then the space-separated list.
inline void write_permutation(std::ostream& os, const Permutation& p) {
  os << "n=" << p.size() << '\n';
  for (std::size_t j = 0; j < p.size(); ++j) os << (j ? " " : "") << p.list()[j];
  os << '\n';
}

// One "(a b c)" per line.
inline void write_cycles(std::ostream& os, const CycleDecomposition& d) {
  for (const auto& c : d.cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ")\n";
  }
}

// ---------------------------------------------------------------------------
// Group structure.

enum class GroupCheckMode { exhaustive, sampled };

struct GroupReport {
  std::size_t k = 0;
  GroupCheckMode mode = GroupCheckMode::sampled;
  std::size_t element_count = 0;  // exhaustive only
  BigInt expected_count = 0;      // |GL(k, 2)|
  std::size_t closure_checks = 0;
  std::size_t identity_checks = 0;
  std::size_t inverse_checks = 0;
  std::size_t associativity_checks = 0;
};

inline constexpr std::size_t kMaxExhaustiveGroupK = 4;

namespace detail {

// Matrices with k <= 4 packed into 16 bits: row l occupies bits [l*k, l*k + k).
class SmallMatrices {
public:
  explicit SmallMatrices(std::size_t k) : k_(k), row_mask_((1U << k) - 1) {}

  std::uint32_t row(std::uint32_t m, std::size_t l) const noexcept { return (m >> (l * k_)) & row_mask_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t out = 0;
    for (std::size_t l = 0; l < k_; ++l) {
      std::uint32_t acc = 0;
      const std::uint32_t ra = row(a, l);
      for (std::size_t j = 0; j < k_; ++j) {
        if ((ra >> j) & 1U) acc ^= row(b, j);
      }
      out |= acc << (l * k_);
    }
    return out;
  }

  std::uint32_t identity() const noexcept {
    std::uint32_t out = 0;
    for (std::size_t l = 0; l < k_; ++l) out |= 1U << (l * k_ + l);
    return out;
  }

  BitMatrix unpack(std::uint32_t m) const {
    BitMatrix out(k_, k_);
    for (std::size_t l = 0; l < k_; ++l) {
      for (std::size_t j = 0; j < k_; ++j) out.set(l, j, (row(m, l) >> j) & 1U);
    }
    return out;
  }

  std::uint32_t pack(const BitMatrix& m) const {
    std::uint32_t out = 0;
    for (std::size_t l = 0; l < k_; ++l) {
      for (std::size_t j = 0; j < k_; ++j) {
        if (m.get(l, j)) out |= 1U << (l * k_ + j);
      }
    }
    return out;
  }

  std::uint32_t universe() const noexcept { return 1U << (k_ * k_); }

private:
  std::size_t k_;
  std::uint32_t row_mask_;
};

inline std::string describe(const BitMatrix& m) {
  std::string s;
  for (std::size_t l = 0; l < m.rows(); ++l) s += (l ? "/" : "") + m.row(l).to_string();
  return s;
}

}  // namespace detail

// Every invertible k x k matrix (k <= 4), in increasing packed order.
inline std::vector<BitMatrix> enumerate_invertible(std::size_t k) {
  if (k == 0 || k > kMaxExhaustiveGroupK) throw DomainError("enumerate_invertible: k must lie in 1..4");
  const detail::SmallMatrices small(k);
  std::vector<BitMatrix> out;
  for (std::uint32_t m = 0; m < small.universe(); ++m) {
    BitMatrix candidate = small.unpack(m);
    if (rank(candidate) == k) out.push_back(std::move(candidate));
  }
  return out;
}

// Closure, identity and inverse over every element (and every pair for
// closure); associativity over all triples for k <= 2, sampled otherwise.
inline GroupReport verify_group_exhaustive(std::size_t k, std::size_t associativity_samples, Rng& rng) {
  if (k == 0 || k > kMaxExhaustiveGroupK) throw DomainError("exhaustive group check needs 1 <= k <= 4");
  const detail::SmallMatrices small(k);
  GroupReport report;
  report.k = k;
  report.mode = GroupCheckMode::exhaustive;
  report.expected_count = count_invertible(k);

  std::vector<std::uint32_t> elements;
  std::vector<bool> member(small.universe(), false);
  for (const auto& m : enumerate_invertible(k)) {
    const auto packed = small.pack(m);
    elements.push_back(packed);
    member[packed] = true;
  }
  report.element_count = elements.size();
  if (BigInt(elements.size()) != report.expected_count) {
    throw GroupAxiomError("order", std::to_string(elements.size()) + " invertible matrices, expected " +
                                       report.expected_count.str());
  }

  const auto id = small.identity();
  for (auto a : elements) {
    if (small.mul(id, a) != a || small.mul(a, id) != a) {
      throw GroupAxiomError("identity", detail::describe(small.unpack(a)));
    }
    ++report.identity_checks;
  }
  for (auto a : elements) {
    const BitMatrix dense = small.unpack(a);
    const auto inv = small.pack(invert(dense));
    if (!member[inv] || small.mul(a, inv) != id || small.mul(inv, a) != id) {
      throw GroupAxiomError("inverse", detail::describe(dense));
    }
    ++report.inverse_checks;
  }
  for (auto a : elements) {
    for (auto b : elements) {
      if (!member[small.mul(a, b)]) {
        throw GroupAxiomError("closure", detail::describe(small.unpack(a)) + " * " + detail::describe(small.unpack(b)));
      }
      ++report.closure_checks;
    }
  }

  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (small.mul(small.mul(a, b), c) != small.mul(a, small.mul(b, c))) {
      throw GroupAxiomError("associativity", detail::describe(small.unpack(a)) + ", " +
                                                detail::describe(small.unpack(b)) + ", " +
                                                detail::describe(small.unpack(c)));
    }
    ++report.associativity_checks;
  };
  if (k <= 2) {
    for (auto a : elements)
      for (auto b : elements)
        for (auto c : elements) check_triple(a, b, c);
  } else {
    const auto n = elements.size();
    for (std::size_t s = 0; s < associativity_samples; ++s) {
      check_triple(elements[uniform_below(rng, n)], elements[uniform_below(rng, n)], elements[uniform_below(rng, n)]);
    }
  }
  return report;
}

// Each sample draws a uniform triple of invertible matrices and checks all four axioms on it.
inline GroupReport verify_group_sampled(std::size_t k, std::size_t samples, Rng& rng) {
  if (k == 0) throw DomainError("verify_group: k must be >= 1");
  GroupReport report;
  report.k = k;
  report.mode = GroupCheckMode::sampled;
  report.expected_count = count_invertible(k);
  const BitMatrix id = BitMatrix::identity(k);

  for (std::size_t s = 0; s < samples; ++s) {
    const BitMatrix a = random_invertible(k, rng);
    const BitMatrix b = random_invertible(k, rng);
    const BitMatrix c = random_invertible(k, rng);

    const BitMatrix ab = matmul(a, b);
    if (rank(ab) != k) throw GroupAxiomError("closure", detail::describe(a) + " * " + detail::describe(b));
    ++report.closure_checks;

    if (matmul(id, a) != a || matmul(a, id) != a) throw GroupAxiomError("identity", detail::describe(a));
    ++report.identity_checks;

    const BitMatrix inv = invert(a);
    if (!is_identity(matmul(a, inv)) || !is_identity(matmul(inv, a))) {
      throw GroupAxiomError("inverse", detail::describe(a));
    }
    ++report.inverse_checks;

    if (matmul(ab, c) != matmul(a, matmul(b, c))) {
      throw GroupAxiomError("associativity",
                            detail::describe(a) + ", " + detail::describe(b) + ", " + detail::describe(c));
    }
    ++report.associativity_checks;
  }
  return report;
}

inline GroupReport verify_group(std::size_t k, std::size_t samples, Rng& rng, GroupCheckMode mode) {
  return mode == GroupCheckMode::exhaustive ? verify_group_exhaustive(k, samples, rng)
                                            : verify_group_sampled(k, samples, rng);
}

struct CoverageReport {
  std::size_t k = 0;
  std::size_t induced = 0;     // distinct permutations induced by invertible matrices
  BigInt invertible = 0;       // |GL(k, 2)|
  BigInt all_permutations = 0; // (2^k)!
  bool strictly_fewer = false;
};

inline BigInt factorial(std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

inline CoverageReport permutation_coverage(std::size_t k) {
  if (k == 0 || k > kMaxExhaustiveGroupK) throw DomainError("permutation_coverage: k must lie in 1..4");
  std::set<Permutation> distinct;
  for (const auto& m : enumerate_invertible(k)) distinct.insert(induce_permutation(m));

  CoverageReport report;
  report.k = k;
  report.induced = distinct.size();
  report.invertible = count_invertible(k);
  report.all_permutations = factorial(std::uint64_t{1} << k);
  report.strictly_fewer = BigInt(report.induced) < report.all_permutations;
  if (k >= 2 && !report.strictly_fewer) {
    throw GroupAxiomError("coverage", "invertible matrices induced every permutation at k = " + std::to_string(k));
  }
  return report;
}

}  // namespace fountain
