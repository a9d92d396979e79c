#pragma once

#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "saxllab/exact_value.hpp"
#include "saxllab/memo_store.hpp"
#include "saxllab/partition.hpp"
#include "saxllab/sign.hpp"

namespace saxllab {

/// Ordinary characters of S_n are integer valued.
using CharValue = mpz_class;
using CharMemo = MemoStore<CharValue>;

/// Process-wide memo table for Murnaghan-Nakayama subproblems.
CharMemo& default_mn_memo();

/// Calls f(remaining_parts, sign) for every rim hook of length r in lambda.
/// The remaining parts are a valid (weakly decreasing, positive) sequence.
void for_each_rim_hook(std::span<const int> lambda, int r,
                       const std::function<void(const std::vector<int>&, int)>& f);

/// [lambda](alpha) by the Murnaghan-Nakayama rule, stripping the parts of alpha
/// from largest to smallest and memoizing every (shape, remaining cycle type)
/// subproblem. Throws std::invalid_argument if |lambda| != |alpha|.
CharValue mn_value(const Partition& lambda, const Partition& alpha, CharMemo& memo = default_mn_memo());

/// Same value as mn_value, but the top-level pair itself is not stored.
/// Meant for sweeps that visit each (lambda, alpha) exactly once.
CharValue mn_value_transient(const Partition& lambda, const Partition& alpha,
                             CharMemo& memo = default_mn_memo());

/// Degree of [lambda] by the hook length formula.
mpz_class char_degree(const Partition& lambda);

/// Value of chi_hook = sum_j [n-j, 1^j] at alpha: 2^{l(alpha)-1} on O(n), else 0.
CharValue hook_sum_value(const Partition& alpha);

/// Closed-form value of the basic spin character <n>_(+-) on the designated
/// class C_alpha^+. `choice` only matters for n even at alpha = (n).
ExactValue basic_spin_value(int n, const Partition& alpha, Sign choice = Sign::plus);

/// [n-j, j](rho_k) = d_k(j) - d_k(j-1), n = k(k+1)/2. Throws std::out_of_range
/// unless 0 <= j <= n/2.
CharValue two_part_value(int k, int j);

} // namespace saxllab
