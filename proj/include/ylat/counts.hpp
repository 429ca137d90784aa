#ifndef YLAT_COUNTS_HPP
#define YLAT_COUNTS_HPP

#include <cstddef>
#include <vector>

#include "ylat/bigint.hpp"
#include "ylat/partition.hpp"

namespace ylat {

/// Number of partitions with exactly k parts and rank n.
BigInt c_kn(std::size_t k, long n);

/// C^m_{k,n}: sum of #[0, lambda] over lambda with k parts and
/// |lambda| + m lambda_1 = n.  m = 0 gives C_{k,n}.  The partitions are
/// split across worker_count() threads.
BigInt C_kn(std::size_t k, long n, int m = 0);

/// C_{k,n} / c_{k,n}.  Throws InvalidArgument when c_{k,n} = 0.
BigRational A_kn(std::size_t k, long n);

/// (C_{1,n} + ... + C_{k,n}) / (c_{1,n} + ... + c_{k,n}); requires n >= 1.
BigRational A_le_kn(std::size_t k, long n);

/// prod 1/lambda_i
BigRational reciprocal_product(const Partition& lambda);

/// B(k, m) from B(0, m) = 1 and
///   B(k, m) = sum_{r=1..k} B(k-r, r+m) B(r-1, m) / ((m+k)(m+r)).
/// Memoized process-wide under a mutex.
BigRational b_recursive(std::size_t k, int m);

/// (1/(m+k)_k) * sum over lambda in I_{k,m} of prod 1/lambda_i; 1 for k = 0.
BigRational b_direct(std::size_t k, int m);

/// G_k = ((k-1)!/(2k-1)!) * sum over lambda in I_k of prod 1/lambda_i.
BigRational g_k(std::size_t k);

/// k!(k-1)!/(2k-1)! * B(k, 0): the same constant through the B recursion.
BigRational g_k_from_b(std::size_t k);

struct ConvergenceRow {
    long n;
    BigInt c;            // c_{k,n}
    BigInt C;            // C_{k,n}
    BigRational A;       // A_{k,n}
    BigRational ratio;   // A_{k,n} / (G_k n^k)
};

/// One row per n with c_{k,n} > 0, in the order given.
std::vector<ConvergenceRow> convergence_table(std::size_t k, const std::vector<long>& n_values);

/// Worker threads for the parallel sums: YL_THREADS if set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
unsigned worker_count();

}  // namespace ylat

#endif  // YLAT_COUNTS_HPP
