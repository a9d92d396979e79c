#include "saxllab/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace saxllab::oracle {

mpz_class young_permutation_value(const Partition& lambda, const Partition& alpha)
{
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("size mismatch");
    std::vector<int> caps(lambda.begin(), lambda.end());
    const std::vector<int>& cycles = alpha.vec();
    std::function<mpz_class(std::size_t)> place = [&](std::size_t i) -> mpz_class {
        if (i == cycles.size())
            return 1;
        mpz_class ways = 0;
        for (int& cap : caps) {
            if (cap < cycles[i])
                continue;
            cap -= cycles[i];
            ways += place(i + 1);
            cap += cycles[i];
        }
        return ways;
    };
    return place(0);
}

mpz_class kostka_number(const Partition& mu, const Partition& lambda)
{
    if (mu.size() != lambda.size())
        throw std::invalid_argument("size mismatch");
    const int rows = mu.length();
    const int letters = lambda.length();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(mu[r]), 0);
    std::vector<int> left(lambda.begin(), lambda.end());

    std::function<mpz_class(int, int)> fill = [&](int r, int c) -> mpz_class {
        if (r == rows)
            return 1;
        if (c == mu[r])
            return fill(r + 1, 0);
        auto& row = t[static_cast<std::size_t>(r)];
        int lo = c > 0 ? row[static_cast<std::size_t>(c - 1)] : 1;
        if (r > 0)
            lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        mpz_class total = 0;
        for (int v = lo; v <= letters; ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0)
                continue;
            --left[static_cast<std::size_t>(v - 1)];
            row[static_cast<std::size_t>(c)] = v;
            total += fill(r, c + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        row[static_cast<std::size_t>(c)] = 0;
        return total;
    };
    return fill(0, 0);
}

std::map<std::pair<Partition, Partition>, mpz_class> kostka_inversion_table(int n)
{
    const std::vector<Partition> shapes = partitions(n);
    std::map<std::pair<Partition, Partition>, mpz_class> chi;
    // shapes come largest first, and K_{mu,lambda} != 0 needs mu to dominate
    // lambda, which puts mu earlier in the list
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const Partition& lambda = shapes[i];
        std::vector<std::pair<std::size_t, mpz_class>> above;
        for (std::size_t j = 0; j < i; ++j) {
            mpz_class k = kostka_number(shapes[j], lambda);
            if (k != 0)
                above.emplace_back(j, k);
        }
        for (const Partition& alpha : shapes) {
            mpz_class v = young_permutation_value(lambda, alpha);
            for (const auto& [j, k] : above)
                v -= k * chi.at({shapes[j], alpha});
            chi[{lambda, alpha}] = v;
        }
    }
    return chi;
}

mpz_class spin_degree(const Partition& lambda)
{
    const int n = lambda.size();
    const int l = lambda.length();
    mpq_class d = 1;
    for (int i = 2; i <= n; ++i)
        d *= i;
    for (int part : lambda)
        for (int i = 2; i <= part; ++i)
            d /= i;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            d *= mpq_class(lambda[i] - lambda[j], lambda[i] + lambda[j]);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>((n - l) / 2));
    d *= power;
    d.canonicalize();
    if (d.get_den() != 1)
        throw std::logic_error("spin degree is not an integer for " + lambda.str());
    return d.get_num();
}

mpz_class hook_degree(const Partition& lambda)
{
    const int rows = lambda.length();
    mpz_class d = 1;
    for (int i = 2; i <= lambda.size(); ++i)
        d *= i;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            int below = 0;
            for (int s = r + 1; s < rows && lambda[s] > c; ++s)
                ++below;
            d /= (lambda[r] - c - 1) + below + 1;
        }
    }
    return d;
}

std::vector<mpz_class> dk_by_subsets(int k)
{
    const int total = k * (k + 1) / 2;
    std::vector<mpz_class> d(static_cast<std::size_t>(total) + 1);
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        int sum = 0;
        for (int i = 0; i < k; ++i)
            if (mask & (1ul << i))
                sum += i + 1;
        ++d[static_cast<std::size_t>(sum)];
    }
    return d;
}

std::vector<Partition> strict_partitions(int n)
{
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p - 1);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition glaisher_by_merging(const Partition& odd_parts)
{
    std::vector<int> parts = odd_parts.vec();
    bool merged = true;
    while (merged) {
        merged = false;
        std::sort(parts.begin(), parts.end(), std::greater<>());
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            if (parts[i] == parts[i + 1]) {
                parts[i] *= 2;
                parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                merged = true;
                break;
            }
        }
    }
    return Partition(parts);
}

Partition glaisher_by_splitting(const Partition& distinct_parts)
{
    std::vector<int> parts = distinct_parts.vec();
    bool split = true;
    while (split) {
        split = false;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] % 2 == 0) {
                parts[i] /= 2;
                parts.push_back(parts[i]);
                split = true;
                break;
            }
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(parts);
}

} // namespace saxllab::oracle
