#pragma once

#include <functional>
#include <span>
#include <vector>

#include "saxllab/exact_value.hpp"
#include "saxllab/group.hpp"
#include "saxllab/memo_store.hpp"
#include "saxllab/ordinary_chars.hpp"
#include "saxllab/partition.hpp"

namespace saxllab {

using SpinMemo = MemoStore<CharValue>;

SpinMemo& default_morris_memo();

/// Calls f(remaining_parts, leg_length) for every r-bar of the strict partition
/// lambda: a part lowered by r, a part equal to r removed, or two parts
/// summing to r removed.
void for_each_bar(std::span<const int> lambda, int r,
                  const std::function<void(const std::vector<int>&, int)>& f);

/// Integer value of <lambda>_(+-) on the designated class C_alpha^+, alpha in O(n)
/// (both associates agree there). Bar-removal recursion on the largest part of
/// alpha, with a factor 2 whenever an even lambda loses a bar and becomes odd.
/// Throws std::invalid_argument unless lambda in D(n) and alpha in O(n).
CharValue morris_value(const Partition& lambda, const Partition& alpha, SpinMemo& memo = default_morris_memo());

/// <lambda>_+ on C_lambda^+ for lambda in D-: i^{(n-m+1)/2} sqrt(prod_j l_j / 2).
ExactValue spin_diagonal_value(const Partition& lambda);

/// Value of a spin character of S~_n on a class of S~_n. Zero on non-split
/// classes and on D- classes other than the label's own type; C^- values are
/// the negatives of C^+ values.
ExactValue spin_value(const CharLabel& label, const ClassLabel& cls);

/// <lambda> for lambda in D+, <lambda>_+ + <lambda>_- for lambda in D-, as a
/// class function on S~_n.
ClassFunction hat(const Partition& lambda);

/// <lambda>_+ <-> <lambda>_-; self-associate labels are fixed.
CharLabel associate(const CharLabel& label);

} // namespace saxllab
