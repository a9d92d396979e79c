#include "saxllab/group.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace saxllab {

std::string_view group_name(GroupKind kind)
{
    switch (kind) {
    case GroupKind::symmetric: return "S";
    case GroupKind::double_cover: return "Stilde";
    case GroupKind::alternating: return "A";
    case GroupKind::alternating_double_cover: return "Atilde";
    }
    return "?";
}

GroupKind parse_group_kind(std::string_view name)
{
    if (name == "S")
        return GroupKind::symmetric;
    if (name == "Stilde")
        return GroupKind::double_cover;
    if (name == "A")
        return GroupKind::alternating;
    if (name == "Atilde")
        return GroupKind::alternating_double_cover;
    throw std::invalid_argument("unknown group '" + std::string(name) + "' (expected S, Stilde, A, Atilde)");
}

std::string ClassLabel::str() const
{
    std::string out = type.str();
    if (an_sign != 0)
        out += an_sign > 0 ? ":a+" : ":a-";
    if (z_sign != 0)
        out += z_sign > 0 ? ":z+" : ":z-";
    return out;
}

bool splits_in_double_cover(const Partition& alpha)
{
    return in_odd(alpha) || in_distinct_minus(alpha);
}

bool splits_in_alternating(const Partition& alpha)
{
    return alpha.size() >= 2 && alpha.has_odd_parts_only() && alpha.has_distinct_parts();
}

bool splits_in_alternating_double_cover(const Partition& alpha)
{
    return in_odd(alpha) || in_distinct_plus(alpha);
}

GroupContext::GroupContext(GroupKind kind, int n) : kind_(kind), n_(n)
{
    const bool alternating = kind == GroupKind::alternating || kind == GroupKind::alternating_double_cover;
    if (n < (alternating ? 2 : (kind == GroupKind::symmetric ? 0 : 1)))
        throw std::invalid_argument("group " + std::string(group_name(kind)) + "_" + std::to_string(n)
                                    + " is not supported");
    const mpz_class nfact = factorial(n);
    for (const Partition& alpha : partitions(n)) {
        const mpz_class base = nfact / centralizer_order(alpha);
        switch (kind) {
        case GroupKind::symmetric:
            classes_.push_back({{alpha, 0, 0}, base});
            break;
        case GroupKind::double_cover:
            if (splits_in_double_cover(alpha)) {
                classes_.push_back({{alpha, +1, 0}, base});
                classes_.push_back({{alpha, -1, 0}, base});
            } else {
                classes_.push_back({{alpha, 0, 0}, 2 * base});
            }
            break;
        case GroupKind::alternating:
            if ((n - alpha.length()) % 2 != 0)
                break;
            if (splits_in_alternating(alpha)) {
                classes_.push_back({{alpha, 0, +1}, base / 2});
                classes_.push_back({{alpha, 0, -1}, base / 2});
            } else {
                classes_.push_back({{alpha, 0, 0}, base});
            }
            break;
        case GroupKind::alternating_double_cover: {
            if ((n - alpha.length()) % 2 != 0)
                break;
            const bool an_split = splits_in_alternating(alpha);
            const bool z_split = splits_in_alternating_double_cover(alpha);
            const std::vector<int> an_signs = an_split ? std::vector<int>{+1, -1} : std::vector<int>{0};
            const std::vector<int> z_signs = z_split ? std::vector<int>{+1, -1} : std::vector<int>{0};
            mpz_class size = an_split ? base / 2 : base;
            if (!z_split)
                size *= 2;
            for (int a : an_signs)
                for (int z : z_signs)
                    classes_.push_back({{alpha, z, a}, size});
            break;
        }
        }
    }
    switch (kind) {
    case GroupKind::symmetric: order_ = nfact; break;
    case GroupKind::double_cover: order_ = 2 * nfact; break;
    case GroupKind::alternating: order_ = nfact / 2; break;
    case GroupKind::alternating_double_cover: order_ = nfact; break;
    }
}

std::shared_ptr<const GroupContext> GroupContext::get(GroupKind kind, int n)
{
    static std::mutex mutex;
    static std::map<std::pair<GroupKind, int>, std::shared_ptr<const GroupContext>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{kind, n}];
    if (!slot)
        slot = std::make_shared<const GroupContext>(kind, n);
    return slot;
}

std::optional<std::size_t> GroupContext::index_of(const ClassLabel& label) const
{
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].label == label)
            return i;
    return std::nullopt;
}

std::string GroupContext::name() const { return std::string(group_name(kind_)) + "_" + std::to_string(n_); }

// ---------------------------------------------------------------------------

std::string CharLabel::str() const
{
    std::string open;
    std::string close;
    switch (family) {
    case CharFamily::ordinary: open = "["; close = "]"; break;
    case CharFamily::spin: open = "<"; close = ">"; break;
    case CharFamily::alternating: open = "{"; close = "}"; break;
    case CharFamily::alternating_spin: open = "<<"; close = ">>"; break;
    }
    std::string out = open + shape.str() + close;
    if (sign)
        out += to_char(*sign);
    return out;
}

CharLabel CharLabel::parse(std::string_view text)
{
    auto fail = [&text]() {
        return std::invalid_argument("malformed character label: '" + std::string(text) + "'");
    };
    std::optional<Sign> sign;
    if (!text.empty() && (text.back() == '+' || text.back() == '-')) {
        sign = text.back() == '+' ? Sign::plus : Sign::minus;
        text.remove_suffix(1);
    }
    CharFamily family;
    std::string_view inner;
    if (text.starts_with("<<") && text.ends_with(">>") && text.size() >= 4) {
        family = CharFamily::alternating_spin;
        inner = text.substr(2, text.size() - 4);
    } else if (text.starts_with("<") && text.ends_with(">") && text.size() >= 2) {
        family = CharFamily::spin;
        inner = text.substr(1, text.size() - 2);
    } else if (text.starts_with("{") && text.ends_with("}") && text.size() >= 2) {
        family = CharFamily::alternating;
        inner = text.substr(1, text.size() - 2);
    } else if (text.starts_with("[") && text.ends_with("]") && text.size() >= 2) {
        family = CharFamily::ordinary;
        inner = text.substr(1, text.size() - 2);
    } else {
        throw fail();
    }
    Partition shape = Partition::parse(inner);
    CharLabel label;
    switch (family) {
    case CharFamily::ordinary:
        if (sign)
            throw fail();
        return ordinary(shape);
    case CharFamily::spin: label = spin(shape, sign.value_or(Sign::plus)); break;
    case CharFamily::alternating: label = alternating(shape, sign.value_or(Sign::plus)); break;
    case CharFamily::alternating_spin: label = alternating_spin(shape, sign.value_or(Sign::plus)); break;
    }
    if (label.sign.has_value() != sign.has_value())
        throw std::invalid_argument("character label '" + std::string(text)
                                    + (sign ? "' takes no sign" : "' needs a + or - sign"));
    return label;
}

CharLabel CharLabel::ordinary(Partition shape) { return {CharFamily::ordinary, std::move(shape), std::nullopt}; }

CharLabel CharLabel::spin(Partition shape, Sign sign)
{
    if (!shape.has_distinct_parts())
        throw std::invalid_argument("spin characters are labelled by strict partitions, got " + shape.str());
    bool paired = in_distinct_minus(shape);
    return {CharFamily::spin, std::move(shape), paired ? std::optional<Sign>(sign) : std::nullopt};
}

CharLabel CharLabel::alternating(Partition shape, Sign sign)
{
    Partition conj = conjugate(shape);
    if (conj == shape)
        return {CharFamily::alternating, std::move(shape), sign};
    // {mu} = {mu'}; keep whichever comes first in enumeration order.
    return {CharFamily::alternating, std::max(shape, conj), std::nullopt};
}

CharLabel CharLabel::alternating_spin(Partition shape, Sign sign)
{
    if (!shape.has_distinct_parts())
        throw std::invalid_argument("spin characters are labelled by strict partitions, got " + shape.str());
    bool paired = in_distinct_plus(shape);
    return {CharFamily::alternating_spin, std::move(shape), paired ? std::optional<Sign>(sign) : std::nullopt};
}

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(ContextPtr ctx, std::vector<ExactValue> values)
    : ctx_(std::move(ctx)), values_(std::move(values))
{
    if (!ctx_ || values_.size() != ctx_->class_count())
        throw std::invalid_argument("class function does not match its context");
}

ClassFunction ClassFunction::zero(ContextPtr ctx)
{
    std::vector<ExactValue> values(ctx->class_count());
    return ClassFunction(std::move(ctx), std::move(values));
}

void ClassFunction::require_same_context(const ClassFunction& other) const
{
    if (ctx_ != other.ctx_)
        throw std::invalid_argument("class functions live on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other)
{
    require_same_context(other);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other)
{
    require_same_context(other);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] -= other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const mpq_class& scalar)
{
    for (auto& v : values_)
        v *= scalar;
    return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b)
{
    a.require_same_context(b);
    std::vector<ExactValue> values(a.values_.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = a.values_[i] * b.values_[i];
    return ClassFunction(a.ctx_, std::move(values));
}

bool operator==(const ClassFunction& a, const ClassFunction& b)
{
    return a.ctx_ == b.ctx_ && a.values_ == b.values_;
}

ClassFunction ClassFunction::conj() const
{
    ClassFunction out = *this;
    for (auto& v : out.values_)
        v = v.conj();
    return out;
}

} // namespace saxllab
