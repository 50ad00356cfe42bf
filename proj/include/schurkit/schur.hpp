#ifndef SCHURKIT_SCHUR_HPP
#define SCHURKIT_SCHUR_HPP

#include "schurkit/chern_poly.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/twist_series.hpp"

#include <bit>
#include <map>
#include <optional>
#include <vector>

namespace schurkit {

// Schur polynomial s_lambda = det[c_{lambda_j - j + k}] over the nonzero
// parts of lambda, with c_0 = 1 and c_i = 0 outside [0, rank]. Requires
// every part <= rank.
ChernPoly schur_poly(const Partition& lambda, int rank);

// Coefficients a_lambda with P = sum a_lambda s_lambda, lambda running over
// partitions of deg(P) with parts <= rank(P). Unitriangular elimination in
// lexicographically increasing partition order. Requires P homogeneous.
// Only nonzero coefficients are returned.
std::map<Partition, Rational> schur_decompose(const ChernPoly& P);

// Fulton-Lazarsfeld test: P != 0 and every Schur coefficient >= 0.
bool is_numerically_positive(const ChernPoly& P);

// c_k of the formally twisted bundle: sum_i binom(rank-i, k-i) c_i delta^{k-i}.
// Zero series for k outside [0, rank]; the unit series for k = 0.
TwistSeries twisted_chern(int k, int rank);

// Jacobi-Trudi determinant with twisted Chern entries; the delta^0
// coefficient is schur_poly(lambda, rank).
TwistSeries twisted_schur(const Partition& lambda, int rank);

// delta^i coefficient of twisted_schur; zero for i > |lambda|.
ChernPoly derived_schur(const Partition& lambda, int i, int rank);

// Verifies, as an exact polynomial identity obtained by composing two
// formal twists, that the i-th derived Schur class of a twisted bundle is
// sum_{k>=i} binom(k,i) * (k-th derived class) * delta^{k-i}. When a
// delta value is supplied the substituted series are compared as well.
bool derived_twist_identity_check(const Partition& lambda, int rank, int i,
                                  const std::optional<Rational>& delta_value = std::nullopt);

// Degree-k component of the inverse of 1 - c_1 + c_2 - ... + (-1)^r c_r.
// Coincides with schur_poly((1,...,1), rank).
ChernPoly segre_poly(int k, int rank);

// Determinant over a commutative ring by dynamic programming on column
// subsets; R needs +, *, scale(R, Rational). Used for every Jacobi-Trudi
// style expansion in the library.
template <typename R>
R ring_determinant(const std::vector<std::vector<R>>& m, const R& zero, const R& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return one;
    std::vector<R> cur(std::size_t(1) << n, zero);
    cur[0] = one;
    for (int row = 0; row < n; ++row) {
        std::vector<R> next(std::size_t(1) << n, zero);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != row)
                continue;
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j))
                    continue;
                // parity of inversions added by assigning this row to column j
                int inversions = std::popcount(mask >> (j + 1));
                R term = cur[mask] * m[row][j];
                if (inversions & 1)
                    term = scale(term, Rational(-1));
                unsigned to = mask | (1u << j);
                next[to] = next[to] + term;
            }
        }
        cur = std::move(next);
    }
    return cur[(std::size_t(1) << n) - 1];
}

} // namespace schurkit

#endif
