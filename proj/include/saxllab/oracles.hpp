#pragma once

// Brute-force reference computations. None of these share code paths with
// the recursions they are used to check.

#include <map>
#include <vector>

#include <gmpxx.h>

#include "saxllab/partition.hpp"

namespace saxllab::oracle {

/// Value of the Young permutation character 1 induced from S_lambda at a
/// permutation of cycle type alpha: the number of ways to distribute the
/// cycles of alpha into blocks of sizes lambda_1, lambda_2, ...
mpz_class young_permutation_value(const Partition& lambda, const Partition& alpha);

/// Number of semistandard tableaux of shape mu and content lambda, by filling
/// the diagram cell by cell.
mpz_class kostka_number(const Partition& mu, const Partition& lambda);

/// Full table [lambda](alpha) for S_n obtained by inverting the unitriangular
/// system phi^lambda = sum_mu K_{mu,lambda} [mu]. Practical for n <= 8.
std::map<std::pair<Partition, Partition>, mpz_class> kostka_inversion_table(int n);

/// Degree of the spin character <lambda>(+-): 2^{floor((n-l)/2)} n! / prod lambda_i!
/// * prod_{i<j} (lambda_i - lambda_j) / (lambda_i + lambda_j).
mpz_class spin_degree(const Partition& lambda);

/// Hook length formula evaluated as a product over cells.
mpz_class hook_degree(const Partition& lambda);

/// d_k(m) by running over all subsets of {1..k}.
std::vector<mpz_class> dk_by_subsets(int k);

/// Strict partitions of n by recursion over the largest part.
std::vector<Partition> strict_partitions(int n);

/// Glaisher map by merging equal pairs of parts until all parts are distinct.
Partition glaisher_by_merging(const Partition& odd_parts);

/// Inverse Glaisher map by halving even parts until all parts are odd.
Partition glaisher_by_splitting(const Partition& distinct_parts);

} // namespace saxllab::oracle
