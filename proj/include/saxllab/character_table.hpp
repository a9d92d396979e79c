#pragma once

#include <cstddef>
#include <vector>

#include "saxllab/exact_value.hpp"
#include "saxllab/group.hpp"

namespace saxllab {

/// Irreducible characters of the group, ordinary (non-faithful) ones first.
///
/// S_n: [lambda]. S~_n: [lambda], then <lambda> (D+) or <lambda>+- (D-).
/// A_n: {mu} for each pair mu != mu' (named by the larger of the two), {mu}+-
/// for self-conjugate mu. A~_n: the A_n list, then <<lambda>> (D-) or
/// <<lambda>>+- (D+).
std::vector<CharLabel> irreducible_labels(const GroupContext& ctx);

/// Value of a character on the class with the given index. Ordinary labels
/// are accepted on every group (inflated/restricted); spin labels on S~_n and
/// A~_n (restricted); alternating labels on A_n and A~_n; A~_n spin labels on
/// A~_n only. Throws std::invalid_argument otherwise.
ExactValue character_value(const GroupContext& ctx, const CharLabel& label, std::size_t class_index);

ClassFunction class_function(const ContextPtr& ctx, const CharLabel& label);

CharacterTable character_table(const ContextPtr& ctx);

} // namespace saxllab
