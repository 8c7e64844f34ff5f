#include "sgraph/linalg.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sgraph {

IntMatrix adjacency_matrix(const SignedGraph& g) {
  IntMatrix a = IntMatrix::Zero(g.order(), g.order());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = to_int(e.sign);
    a(e.v, e.u) = to_int(e.sign);
  }
  return a;
}

namespace {

template <typename Scalar>
Scalar abs_of(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Fraction-free elimination (Bareiss). After step k every entry of the
// trailing block is a (k+1)x(k+1) minor of the pivoted input, so the division
// by the previous pivot is exact and entries never leave the integers.
// Full pivoting by maximal absolute value, ties broken at the lowest
// (row, col) in row-major order, keeps the pivot order deterministic.
template <typename Scalar, typename Wide>
int bareiss_rank(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  const Eigen::Index steps = std::min(rows, cols);

  Scalar prev = Scalar(1);
  int rank = 0;
  for (Eigen::Index k = 0; k < steps; ++k) {
    Eigen::Index pr = -1, pc = -1;
    Scalar best = Scalar(0);
    for (Eigen::Index i = k; i < rows; ++i) {
      for (Eigen::Index j = k; j < cols; ++j) {
        Scalar a = abs_of(m(i, j));
        if (a > best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;  // trailing block is zero
    if (pr != k) m.row(k).swap(m.row(pr));
    if (pc != k) m.col(k).swap(m.col(pc));

    for (Eigen::Index i = k + 1; i < rows; ++i) {
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        Wide num = Wide(m(k, k)) * Wide(m(i, j)) - Wide(m(i, k)) * Wide(m(k, j));
        assert(num % Wide(prev) == 0);
        num /= Wide(prev);
        m(i, j) = static_cast<Scalar>(num);
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
    ++rank;
  }
  return rank;
}

}  // namespace

namespace detail {

int bareiss_rank_int64(IntMatrix m) { return bareiss_rank<std::int64_t, __int128>(m); }

int bareiss_rank_big(BigIntMatrix m) { return bareiss_rank<BigInt, BigInt>(m); }

bool int64_elimination_safe(const IntMatrix& m) {
  // Minors are bounded by the product of the nonzero row 2-norms. Keeping
  // that product under 2^61 leaves room for the __int128 cross products.
  long double log2_bound = 0.0L;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    long double s = 0.0L;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      long double x = static_cast<long double>(m(i, j));
      s += x * x;
    }
    if (s > 1.0L) log2_bound += std::log2(s) / 2.0L;
    if (log2_bound > 61.0L) return false;
  }
  return true;
}

}  // namespace detail

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

int rank_mod_p(const IntMatrix& m, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  if (p > 2147483647) throw std::invalid_argument("modulus too large");

  IntMatrix w(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) w(i, j) = ((m(i, j) % p) + p) % p;

  auto mod_pow = [p](std::int64_t base, std::int64_t exp) {
    std::int64_t acc = 1;
    base %= p;
    while (exp > 0) {
      if (exp & 1) acc = acc * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return acc;
  };

  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < w.cols() && row < w.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < w.rows(); ++i) {
      if (w(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) w.row(row).swap(w.row(pivot));
    const std::int64_t inv = mod_pow(w(row, col), p - 2);
    for (Eigen::Index i = row + 1; i < w.rows(); ++i) {
      if (w(i, col) == 0) continue;
      const std::int64_t f = w(i, col) * inv % p;
      for (Eigen::Index j = col; j < w.cols(); ++j)
        w(i, j) = ((w(i, j) - f * w(row, j)) % p + p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

int nullity(const SignedGraph& g) { return g.order() - rank_exact(adjacency_matrix(g)); }

}  // namespace sgraph
