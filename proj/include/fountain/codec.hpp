#pragma once

// y = R x encoding, x = R^-1 y decoding, and decoding by cycling the
// encoder (R^(order-1) y).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

#include "fountain/errors.hpp"
#include "fountain/gf2.hpp"

namespace fountain {

inline BitVector encode(const BitMatrix& r, const BitVector& x) { return matvec(r, x); }

inline BitVector decode(const BitMatrix& r, const BitVector& y) {
  if (r.cols() != y.size()) throw DimensionError("decode: vector length does not match matrix");
  return matvec(invert(r), y);
}

// Encoding by the bidiagonal matrix without materializing it:
// y(l) = x(l) ^ x(l + 1), y(k - 1) = x(k - 1).
inline BitVector encode_bidiagonal(const BitVector& x) {
  BitVector y(x.size());
  for (std::size_t l = 0; l + 1 < x.size(); ++l) y.set(l, x.get(l) != x.get(l + 1));
  y.set(x.size() - 1, x.get(x.size() - 1));
  return y;
}

// Holds an encoding matrix and computes its inverse once, on first decode.
// Safe to share across threads after construction.
class Codec {
public:
  explicit Codec(BitMatrix r) : state_(std::make_shared<State>(std::move(r))) {
    if (!state_->matrix.square()) throw DimensionError("encoding matrix must be square");
  }

  const BitMatrix& matrix() const noexcept { return state_->matrix; }
  std::size_t k() const noexcept { return state_->matrix.rows(); }

  BitVector encode(const BitVector& x) const { return matvec(state_->matrix, x); }

  BitVector decode(const BitVector& y) const { return matvec(inverse(), y); }

  // Throws SingularError for a rank-deficient matrix (every call).
  const BitMatrix& inverse() const {
    std::call_once(state_->once, [s = state_.get()] { s->inverse = std::make_unique<BitMatrix>(invert(s->matrix)); });
    return *state_->inverse;
  }

private:
  struct State {
    explicit State(BitMatrix r) : matrix(std::move(r)) {}
    BitMatrix matrix;
    std::once_flag once;
    std::unique_ptr<BitMatrix> inverse;
  };
  std::shared_ptr<State> state_;
};

// Smallest e >= 1 with r^e = I, by iterated multiplication.
inline std::uint64_t matrix_order(const BitMatrix& r, std::uint64_t cap) {
  if (!r.square()) throw DimensionError("matrix_order: matrix is not square");
  if (cap == 0) throw DomainError("matrix_order: cap must be >= 1");
  if (rank(r) != r.rows()) throw SingularError("matrix_order: matrix is singular");
  BitMatrix power = r;
  for (std::uint64_t e = 1;; ++e) {
    if (is_identity(power)) return e;
    if (e == cap) throw OrderCapError("matrix order exceeds cap " + std::to_string(cap));
    power = matmul(power, r);
  }
}

// Recovers x from y = R x as R^(order-1) y. With `verify`, checks R x = y.
inline BitVector cycle_decode(const BitMatrix& r, const BitVector& y, std::uint64_t order, bool verify = false) {
  if (order == 0) throw DomainError("cycle_decode: order must be >= 1");
  BitVector x = matvec(matpow(r, order - 1), y);
  if (verify && matvec(r, x) != y) {
    throw VerifyError("cycle_decode: order " + std::to_string(order) + " does not return to the input");
  }
  return x;
}

}  // namespace fountain
