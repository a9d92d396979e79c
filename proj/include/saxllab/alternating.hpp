#pragma once

#include <cstddef>
#include <vector>

#include "saxllab/exact_value.hpp"
#include "saxllab/group.hpp"
#include "saxllab/partition.hpp"

namespace saxllab {

/// Value of an A_n character {mu} or {mu}+- on an A_n (or A~_n) class.
///
/// Off the split pair of type h(mu) a self-conjugate {mu}+- is [mu]/2; on it
/// {mu}+ takes (e +- sqrt(e prod h_j)) / 2 at the a+/a- class, where
/// e = (-1)^{(n-k)/2} and h = h(mu) has k parts. {mu}- is the swap.
ExactValue an_char_value(const CharLabel& label, const ClassLabel& cls);

/// The difference <<lambda>>+ - <<lambda>>- on an A~_n class, lambda in D+.
/// Supported on the classes of type lambda only, where it is
/// +-i^{(n-m)/2} sqrt(prod lambda_j), m = l(lambda); the sign flips with the
/// central element and, for lambda in D cap O, between the two A_n classes.
ExactValue delta_value(const Partition& lambda, const ClassLabel& cls);

/// Value of <<lambda>> (lambda in D-) or <<lambda>>+- (lambda in D+) on an
/// A~_n class.
ExactValue atilde_spin_value(const CharLabel& label, const ClassLabel& cls);

/// A pair of classes separated by only a few irreducible characters.
struct CriticalPair {
    std::size_t x = 0;
    std::size_t y = 0;
    std::vector<std::size_t> members; // rows chi with chi(x) != chi(y)
    /// Exactly two members with chi_1(x) - chi_1(y) = chi_2(y) - chi_2(x).
    bool detecting = false;
};

/// Class pairs (x < y) on which between 1 and max_members characters differ.
/// When `rows` is non-null only those rows of the table are considered, and
/// `members` holds indices into the full table.
std::vector<CriticalPair> find_critical_pairs(const CharacterTable& table, std::size_t max_members = 2,
                                              const std::vector<std::size_t>* rows = nullptr);

} // namespace saxllab
