#pragma once

// Dense bit-packed linear algebra over GF(2).
//
// Indices are 0-based in the API; position 0 corresponds to the first
// (leftmost) character of the text formats.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fountain/errors.hpp"
#include "fountain/random.hpp"

namespace fountain {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitVector {
public:
  explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {
    if (len == 0) throw DomainError("BitVector length must be >= 1");
  }

  static BitVector from_string(std::string_view bits) {
    if (bits.empty()) throw ParseError("empty bit string");
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i, true);
      } else if (bits[i] != '0') {
        throw ParseError("invalid bit character '" + std::string(1, bits[i]) + "'");
      }
    }
    return v;
  }

  // Bit m of `value` becomes element m (element 0 is the least significant).
  static BitVector from_index(std::uint64_t value, std::size_t len) {
    BitVector v(len);
    for (std::size_t m = 0; m < len && m < kWordBits; ++m) v.set(m, (value >> m) & 1U);
    return v;
  }

  static BitVector random(std::size_t len, Rng& rng) {
    BitVector v(len);
    for (auto& w : v.words_) w = rng();
    v.clear_tail();
    return v;
  }

  std::size_t size() const noexcept { return len_; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const noexcept { return get(i); }

  void set(std::size_t i, bool value) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }

  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  // Index of the first set bit, or nullopt when all zero.
  std::optional<std::size_t> first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
  }

  // Parity of the number of positions where both vectors are 1.
  bool dot(const BitVector& other) const {
    require_same_size(other);
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  BitVector& operator^=(const BitVector& other) {
    require_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  // Lexicographic on the packed words; only useful as a strict weak order for containers.
  friend bool operator<(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return a.words_ < b.words_;
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

private:
  void require_same_size(const BitVector& other) const {
    if (other.len_ != len_) {
      throw DimensionError("bit vector lengths differ: " + std::to_string(len_) + " vs " +
                           std::to_string(other.len_));
    }
  }

  void clear_tail() noexcept {
    if (const std::size_t r = len_ % kWordBits; r != 0) words_.back() &= (Word{1} << r) - 1;
  }

  std::size_t len_;
  std::vector<Word> words_;
};

// Row-major matrix; each row is a packed BitVector.
class BitMatrix {
public:
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be >= 1");
    rows_.assign(rows, BitVector(cols));
  }

  explicit BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DomainError("matrix must have at least one row");
    cols_ = rows_.front().size();
    for (const auto& r : rows_) {
      if (r.size() != cols_) throw DimensionError("rows of unequal length");
    }
  }

  static BitMatrix identity(std::size_t k) {
    BitMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i, true);
    return m;
  }

  // Row strings, e.g. {"11", "01"}.
  static BitMatrix from_rows(const std::vector<std::string>& rows) {
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
    return BitMatrix(std::move(parsed));
  }

  static BitMatrix random(std::size_t rows, std::size_t cols, Rng& rng) {
    std::vector<BitVector> r;
    r.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) r.push_back(BitVector::random(cols, rng));
    return BitMatrix(std::move(r));
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_.size() == cols_; }

  bool get(std::size_t l, std::size_t m) const noexcept { return rows_[l].get(m); }
  void set(std::size_t l, std::size_t m, bool value) noexcept { rows_[l].set(m, value); }

  const BitVector& row(std::size_t l) const noexcept { return rows_[l]; }
  BitVector& row(std::size_t l) noexcept { return rows_[l]; }

  BitVector column(std::size_t m) const {
    BitVector c(rows());
    for (std::size_t l = 0; l < rows(); ++l) c.set(l, get(l, m));
    return c;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
  std::vector<BitVector> rows_;
  std::size_t cols_ = 0;
};

inline bool is_identity(const BitMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t l = 0; l < m.rows(); ++l) {
    const auto first = m.row(l).first_set();
    if (!first || *first != l || m.row(l).count() != 1) return false;
  }
  return true;
}

// result(l, m) = XOR_j a(l, j) b(j, m)
inline BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t l = 0; l < a.rows(); ++l) {
    const auto& words = a.row(l).words();
    auto& dst = out.row(l);
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (Word bits = words[w]; bits != 0; bits &= bits - 1) {
        dst ^= b.row(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }
  return out;
}

// y(l) = XOR_m r(l, m) x(m)
inline BitVector matvec(const BitMatrix& r, const BitVector& x) {
  if (r.cols() != x.size()) {
    throw DimensionError("matvec: matrix has " + std::to_string(r.cols()) + " columns, vector has " +
                         std::to_string(x.size()) + " entries");
  }
  BitVector y(r.rows());
  for (std::size_t l = 0; l < r.rows(); ++l) y.set(l, r.row(l).dot(x));
  return y;
}

// Row rank by Gaussian elimination; rectangular input allowed.
inline std::size_t rank(BitMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(m.row(r), m.row(pivot));
    for (std::size_t l = r + 1; l < m.rows(); ++l) {
      if (m.get(l, c)) m.row(l) ^= m.row(r);
    }
    ++r;
  }
  return r;
}

// Gauss-Jordan on [m | I].
inline BitMatrix invert(const BitMatrix& input) {
  if (!input.square()) throw DimensionError("invert: matrix is not square");
  const std::size_t k = input.rows();
  BitMatrix m = input;
  BitMatrix inv = BitMatrix::identity(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && !m.get(pivot, c)) ++pivot;
    if (pivot == k) throw SingularError("invert: matrix is singular (rank < " + std::to_string(k) + ")");
    if (pivot != c) {
      std::swap(m.row(c), m.row(pivot));
      std::swap(inv.row(c), inv.row(pivot));
    }
    for (std::size_t l = 0; l < k; ++l) {
      if (l != c && m.get(l, c)) {
        m.row(l) ^= m.row(c);
        inv.row(l) ^= inv.row(c);
      }
    }
  }
  return inv;
}

inline BitMatrix matpow(const BitMatrix& m, std::uint64_t e) {
  if (!m.square()) throw DimensionError("matpow: matrix is not square");
  BitMatrix result = BitMatrix::identity(m.rows());
  BitMatrix base = m;
  while (e != 0) {
    if (e & 1U) result = matmul(result, base);
    e >>= 1;
    if (e != 0) base = matmul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text formats.
//
// Matrix: "<rows> <cols>\n" followed by one line of '0'/'1' per row.
// Vector: a single line of '0'/'1'.

inline void write_matrix(std::ostream& os, const BitMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t l = 0; l < m.rows(); ++l) os << m.row(l).to_string() << '\n';
}

inline std::string to_text(const BitMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

namespace detail {

inline std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

inline std::size_t parse_dim(const std::string& token) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("invalid matrix dimension '" + token + "'");
  }
  std::size_t value = 0;
  for (char c : token) {
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > (std::size_t{1} << 32)) throw ParseError("matrix dimension too large");
  }
  return value;
}

}  // namespace detail

inline BitMatrix read_matrix(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("missing matrix header");
  header = detail::chomp(header);
  const auto space = header.find(' ');
  if (space == std::string::npos) throw ParseError("matrix header must be '<rows> <cols>'");
  const std::size_t rows = detail::parse_dim(header.substr(0, space));
  const std::size_t cols = detail::parse_dim(header.substr(space + 1));
  if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be >= 1");

  std::vector<BitVector> parsed;
  parsed.reserve(rows);
  std::string line;
  for (std::size_t l = 0; l < rows; ++l) {
    if (!std::getline(is, line)) throw ParseError("matrix has fewer rows than declared");
    line = detail::chomp(line);
    if (line.size() != cols) {
      throw ParseError("row " + std::to_string(l + 1) + " has " + std::to_string(line.size()) +
                       " characters, expected " + std::to_string(cols));
    }
    parsed.push_back(BitVector::from_string(line));
  }
  return BitMatrix(std::move(parsed));
}

inline BitMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

inline void write_vector(std::ostream& os, const BitVector& v) { os << v.to_string() << '\n'; }

inline BitVector read_vector(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing vector line");
  return BitVector::from_string(detail::chomp(line));
}

}  // namespace fountain
