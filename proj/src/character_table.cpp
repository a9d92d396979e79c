#include "saxllab/character_table.hpp"

#include <stdexcept>

#include "saxllab/alternating.hpp"
#include "saxllab/ordinary_chars.hpp"
#include "saxllab/spin_chars.hpp"

namespace saxllab {

std::vector<CharLabel> irreducible_labels(const GroupContext& ctx)
{
    const int n = ctx.n();
    std::vector<CharLabel> out;
    const bool alternating = ctx.kind() == GroupKind::alternating || ctx.kind() == GroupKind::alternating_double_cover;
    if (!alternating) {
        for (const Partition& lambda : partitions(n))
            out.push_back(CharLabel::ordinary(lambda));
    } else {
        for (const Partition& mu : partitions(n)) {
            Partition conj = conjugate(mu);
            if (conj == mu) {
                out.push_back(CharLabel::alternating(mu, Sign::plus));
                out.push_back(CharLabel::alternating(mu, Sign::minus));
            } else if (mu > conj) {
                out.push_back(CharLabel::alternating(mu));
            }
        }
    }
    if (ctx.kind() == GroupKind::double_cover) {
        for (const Partition& lambda : partitions(n, PartitionFilter::distinct)) {
            if (in_distinct_plus(lambda)) {
                out.push_back(CharLabel::spin(lambda));
            } else {
                out.push_back(CharLabel::spin(lambda, Sign::plus));
                out.push_back(CharLabel::spin(lambda, Sign::minus));
            }
        }
    } else if (ctx.kind() == GroupKind::alternating_double_cover) {
        for (const Partition& lambda : partitions(n, PartitionFilter::distinct)) {
            if (in_distinct_minus(lambda)) {
                out.push_back(CharLabel::alternating_spin(lambda));
            } else {
                out.push_back(CharLabel::alternating_spin(lambda, Sign::plus));
                out.push_back(CharLabel::alternating_spin(lambda, Sign::minus));
            }
        }
    }
    return out;
}

ExactValue character_value(const GroupContext& ctx, const CharLabel& label, std::size_t class_index)
{
    const ClassLabel& cls = ctx.label(class_index);
    if (label.shape.size() != ctx.n())
        throw std::invalid_argument("character " + label.str() + " does not belong to " + ctx.name());
    auto unsupported = [&]() {
        return std::invalid_argument("character " + label.str() + " is not defined on " + ctx.name());
    };
    switch (label.family) {
    case CharFamily::ordinary:
        return ExactValue(mn_value(label.shape, cls.type));
    case CharFamily::spin:
        if (ctx.kind() == GroupKind::double_cover)
            return spin_value(label, cls);
        if (ctx.kind() == GroupKind::alternating_double_cover) {
            // image of an A~_n class in S~_n: same type and central sign if it splits there
            ClassLabel image{cls.type, splits_in_double_cover(cls.type) ? cls.z_sign : 0, 0};
            return spin_value(label, image);
        }
        throw unsupported();
    case CharFamily::alternating:
        if (ctx.kind() == GroupKind::alternating || ctx.kind() == GroupKind::alternating_double_cover)
            return an_char_value(label, cls);
        throw unsupported();
    case CharFamily::alternating_spin:
        if (ctx.kind() == GroupKind::alternating_double_cover)
            return atilde_spin_value(label, cls);
        throw unsupported();
    }
    throw unsupported();
}

ClassFunction class_function(const ContextPtr& ctx, const CharLabel& label)
{
    std::vector<ExactValue> values(ctx->class_count());
    for (std::size_t c = 0; c < values.size(); ++c)
        values[c] = character_value(*ctx, label, c);
    return ClassFunction(ctx, std::move(values));
}

CharacterTable character_table(const ContextPtr& ctx)
{
    CharacterTable table{ctx, irreducible_labels(*ctx), {}};
    table.rows.reserve(table.labels.size());
    for (const CharLabel& label : table.labels)
        table.rows.push_back(class_function(ctx, label));
    return table;
}

} // namespace saxllab
