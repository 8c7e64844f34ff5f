#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <type_traits>

#include "sgraph/graph.hpp"

namespace sgraph {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using BigInt = boost::multiprecision::cpp_int;
using BigIntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

/// Signed adjacency matrix: entry (i, j) is +1/-1 for a Plus/Minus edge
/// {i, j} and 0 otherwise. Symmetric with a zero diagonal.
IntMatrix adjacency_matrix(const SignedGraph& g);

namespace detail {

int bareiss_rank_int64(IntMatrix m);
int bareiss_rank_big(BigIntMatrix m);

/// True when fraction-free elimination on m cannot overflow 64 bits: every
/// intermediate entry is a minor of m, so the Hadamard bound on the nonzero
/// row norms caps their magnitude.
bool int64_elimination_safe(const IntMatrix& m);

}  // namespace detail

/// Rank over the rationals, computed exactly by fraction-free (division-exact)
/// elimination with full pivoting. Accepts any dense integer expression.
/// Intermediates grow like subdeterminants; elimination runs in 64-bit words
/// while the Hadamard bound permits and in arbitrary precision otherwise.
template <typename Derived>
int rank_exact(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, BigInt>) {
    return detail::bareiss_rank_big(m);
  } else {
    static_assert(std::is_integral_v<Scalar>, "rank_exact expects an integer matrix");
    IntMatrix work = m.template cast<std::int64_t>();
    if (detail::int64_elimination_safe(work)) return detail::bareiss_rank_int64(std::move(work));
    return detail::bareiss_rank_big(work.template cast<BigInt>());
  }
}

/// Rank over the field with p elements (p prime). Independent of the exact
/// elimination path above; max over a few odd primes almost surely equals
/// rank_exact, which makes it a cheap cross-check oracle.
int rank_mod_p(const IntMatrix& m, std::int64_t p);

/// Multiplicity of the zero eigenvalue: n - rank of the adjacency matrix.
int nullity(const SignedGraph& g);

}  // namespace sgraph
