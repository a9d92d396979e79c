#include "saxllab/ordinary_chars.hpp"

#include <algorithm>
#include <stdexcept>

#include "rim_hooks.hpp"

namespace saxllab {

CharMemo& default_mn_memo()
{
    static CharMemo memo;
    return memo;
}

void for_each_rim_hook(std::span<const int> lambda, int r,
                       const std::function<void(const std::vector<int>&, int)>& f)
{
    detail::RimHookScratch scratch;
    detail::visit_rim_hooks(lambda, r, scratch, f);
}

namespace {

CharValue mn_rec(std::span<const int> lambda, std::span<const int> alpha, CharMemo& memo, bool store)
{
    if (alpha.empty())
        return lambda.empty() ? 1 : 0;
    // Trivial and sign characters.
    if (lambda.size() == 1)
        return 1;
    if (lambda.front() == 1) {
        long odd_moves = 0;
        for (int a : alpha)
            odd_moves += a - 1;
        return (odd_moves % 2 == 0) ? 1 : -1;
    }

    MemoKey key;
    if (store) {
        key = memo_key(lambda, alpha);
        if (auto hit = memo.find(key))
            return *hit;
    }

    CharValue total = 0;
    detail::RimHookScratch scratch;
    auto rest = alpha.subspan(1);
    detail::visit_rim_hooks(lambda, alpha.front(), scratch,
                            [&](const std::vector<int>& smaller, int sign) {
                                CharValue v = mn_rec(smaller, rest, memo, true);
                                if (sign > 0)
                                    total += v;
                                else
                                    total -= v;
                            });
    if (store)
        memo.insert(key, total);
    return total;
}

void require_same_size(const Partition& lambda, const Partition& alpha)
{
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("character value needs |lambda| = |alpha|, got " + lambda.str()
                                    + " and " + alpha.str());
}

} // namespace

CharValue mn_value(const Partition& lambda, const Partition& alpha, CharMemo& memo)
{
    require_same_size(lambda, alpha);
    return mn_rec(lambda.parts(), alpha.parts(), memo, true);
}

CharValue mn_value_transient(const Partition& lambda, const Partition& alpha, CharMemo& memo)
{
    require_same_size(lambda, alpha);
    return mn_rec(lambda.parts(), alpha.parts(), memo, false);
}

mpz_class char_degree(const Partition& lambda)
{
    Partition conj = conjugate(lambda);
    mpz_class hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

CharValue hook_sum_value(const Partition& alpha)
{
    if (alpha.empty() || !alpha.has_odd_parts_only())
        return 0;
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(alpha.length() - 1));
    return v;
}

ExactValue basic_spin_value(int n, const Partition& alpha, Sign choice)
{
    if (n < 1)
        throw std::invalid_argument("basic spin character needs n >= 1");
    if (alpha.size() != n)
        throw std::invalid_argument("class " + alpha.str() + " is not a partition of " + std::to_string(n));
    if (alpha.has_odd_parts_only()) {
        int exponent = (n % 2 == 1) ? (alpha.length() - 1) / 2 : (alpha.length() - 2) / 2;
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
        return ExactValue(v);
    }
    if (n % 2 == 0 && alpha.length() == 1) {
        int k = n / 2;
        return ExactValue::monomial(to_int(choice), k, k);
    }
    return {};
}

CharValue two_part_value(int k, int j)
{
    if (k < 1)
        throw std::out_of_range("two_part_value needs k >= 1");
    int n = k * (k + 1) / 2;
    if (j < 0 || 2 * j > n)
        throw std::out_of_range("two_part_value needs 0 <= j <= n/2, got j = " + std::to_string(j));
    auto d = strict_bounded_counts(k);
    CharValue v = d[static_cast<std::size_t>(j)];
    if (j > 0)
        v -= d[static_cast<std::size_t>(j - 1)];
    return v;
}

} // namespace saxllab
