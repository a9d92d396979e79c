#include "saxllab/spin_chars.hpp"

#include <algorithm>
#include <stdexcept>

#include "saxllab/character_table.hpp"

namespace saxllab {

SpinMemo& default_morris_memo()
{
    static SpinMemo memo;
    return memo;
}

namespace {

bool odd_excess(std::span<const int> parts)
{
    long n = 0;
    for (int p : parts)
        n += p;
    return (n - static_cast<long>(parts.size())) % 2 != 0;
}

template <class F>
void visit_bars(std::span<const int> lambda, int r, std::vector<int>& out, F&& f)
{
    const int l = static_cast<int>(lambda.size());
    auto at = [&lambda](int i) { return lambda[static_cast<std::size_t>(i)]; };
    for (int i = 0; i < l; ++i) {
        const int v = at(i) - r;
        out.clear();
        if (v > 0) {
            int j = i + 1;
            while (j < l && at(j) > v)
                ++j;
            if (j < l && at(j) == v)
                continue;
            for (int q = 0; q < l; ++q) {
                if (q == j)
                    out.push_back(v);
                if (q != i)
                    out.push_back(at(q));
            }
            if (j == l)
                out.push_back(v);
            f(out, j - i - 1);
        } else if (v == 0) {
            for (int q = 0; q < l; ++q)
                if (q != i)
                    out.push_back(at(q));
            f(out, l - 1 - i);
        } else {
            const int partner = -v;
            int j = i + 1;
            while (j < l && at(j) > partner)
                ++j;
            if (j == l || at(j) != partner)
                continue;
            for (int q = 0; q < l; ++q)
                if (q != i && q != j)
                    out.push_back(at(q));
            f(out, (j - i - 1) + partner);
        }
    }
}

CharValue morris_rec(std::span<const int> lambda, std::span<const int> alpha, SpinMemo& memo)
{
    if (alpha.empty())
        return lambda.empty() ? 1 : 0;
    MemoKey key = memo_key(lambda, alpha);
    if (auto hit = memo.find(key))
        return *hit;

    const bool lambda_even = !odd_excess(lambda);
    CharValue total = 0;
    std::vector<int> scratch;
    auto rest = alpha.subspan(1);
    visit_bars(lambda, alpha.front(), scratch, [&](const std::vector<int>& mu, int leg) {
        CharValue v = morris_rec(mu, rest, memo);
        if (lambda_even && odd_excess(mu))
            v *= 2;
        if (leg % 2 == 0)
            total += v;
        else
            total -= v;
    });
    memo.insert(key, total);
    return total;
}

} // namespace

void for_each_bar(std::span<const int> lambda, int r,
                  const std::function<void(const std::vector<int>&, int)>& f)
{
    std::vector<int> scratch;
    visit_bars(lambda, r, scratch, f);
}

CharValue morris_value(const Partition& lambda, const Partition& alpha, SpinMemo& memo)
{
    if (!lambda.has_distinct_parts())
        throw std::invalid_argument("spin character label " + lambda.str() + " is not strict");
    if (!alpha.has_odd_parts_only())
        throw std::invalid_argument("class " + alpha.str() + " is not in O(n)");
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("spin value needs |lambda| = |alpha|");
    return morris_rec(lambda.parts(), alpha.parts(), memo);
}

ExactValue spin_diagonal_value(const Partition& lambda)
{
    if (!in_distinct_minus(lambda))
        throw std::invalid_argument("diagonal spin value needs lambda in D-, got " + lambda.str());
    mpz_class product = 1;
    for (int part : lambda)
        product *= part;
    const int n = lambda.size();
    const int m = lambda.length();
    return ExactValue::monomial(1, (n - m + 1) / 2, product / 2);
}

ExactValue spin_value(const CharLabel& label, const ClassLabel& cls)
{
    if (label.family != CharFamily::spin)
        throw std::invalid_argument("spin_value needs a spin label, got " + label.str());
    if (cls.type.size() != label.shape.size())
        throw std::invalid_argument("class " + cls.str() + " does not belong to S~_"
                                    + std::to_string(label.shape.size()));
    if (cls.z_sign == 0)
        return {};
    if (cls.type.has_odd_parts_only())
        return ExactValue(mpz_class(morris_value(label.shape, cls.type) * cls.z_sign));
    if (cls.type != label.shape)
        return {};
    int sign = cls.z_sign * (label.sign.value_or(Sign::plus) == Sign::plus ? 1 : -1);
    return spin_diagonal_value(label.shape) * mpq_class(sign);
}

ClassFunction hat(const Partition& lambda)
{
    auto ctx = GroupContext::get(GroupKind::double_cover, lambda.size());
    if (in_distinct_plus(lambda))
        return class_function(ctx, CharLabel::spin(lambda));
    return class_function(ctx, CharLabel::spin(lambda, Sign::plus))
           + class_function(ctx, CharLabel::spin(lambda, Sign::minus));
}

CharLabel associate(const CharLabel& label)
{
    if (label.family != CharFamily::spin)
        throw std::invalid_argument("associate is defined for spin labels, got " + label.str());
    CharLabel out = label;
    if (out.sign)
        out.sign = flip(*out.sign);
    return out;
}

} // namespace saxllab
