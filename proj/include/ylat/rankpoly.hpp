#ifndef YLAT_RANKPOLY_HPP
#define YLAT_RANKPOLY_HPP

#include <cstddef>

#include "ylat/bigint.hpp"
#include "ylat/partition.hpp"
#include "ylat/ypoly.hpp"

namespace ylat {

// Rank generating polynomials P_{mu,lambda}(y) = sum over nu in [mu, lambda]
// of y^{|nu|}.
//
// Evaluation is recursive.  If mu_r == lambda_r for some row r below the last,
// the interval factors into the rows above and below r and the polynomial is
// the product of the two pieces.  Otherwise the smallest r with
// lambda_r > lambda_{r+1} and mu_r < lambda_r splits the interval in two
// (lemma_sum_split) and the polynomial is the sum.  The base case is
// P_{lambda,lambda} = y^{|lambda|}.
//
// Both rank_gen_poly and interval_count memoize on the (mu, lambda) pair in
// process-wide tables guarded by a reader/writer lock.  All functions here
// are safe to call concurrently; results never depend on which thread filled
// a memo entry.

/// Throws PreconditionError when mu is not contained in lambda.
YPoly rank_gen_poly(const Partition& mu, const Partition& lambda);
inline YPoly rank_gen_poly(const Partition& lambda) { return rank_gen_poly(Partition{}, lambda); }

/// The y-binomial [n+k choose k]_y, computed as an exact quotient of
/// products of (1 - y^j).
YPoly gaussian_poly(int n, int k);

/// #[mu, lambda], i.e. P_{mu,lambda}(1), by the same recursion over plain
/// integers with its own memo.
BigInt interval_count(const Partition& mu, const Partition& lambda);
inline BigInt interval_count(const Partition& lambda) { return interval_count(Partition{}, lambda); }

/// P_lambda(y^2).
YPoly poincare_poly(const Partition& lambda);

struct MemoStats {
    std::size_t poly_entries = 0;
    std::size_t count_entries = 0;
};
MemoStats rankpoly_memo_stats();
void clear_rankpoly_memos();

}  // namespace ylat

#endif  // YLAT_RANKPOLY_HPP
