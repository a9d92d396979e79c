#pragma once

#include <span>
#include <vector>

namespace saxllab::detail {

struct RimHookScratch {
    std::vector<int> beta;
    std::vector<int> out;
};

// Rim hooks of length r via beta-numbers beta_i = lambda_i + (l - 1 - i):
// moving a bead from beta_i to an empty position beta_i - r removes an r-hook
// whose leg length is the number of beads strictly in between.
template <class F>
void visit_rim_hooks(std::span<const int> lambda, int r, RimHookScratch& s, F&& f)
{
    const int l = static_cast<int>(lambda.size());
    s.beta.resize(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        s.beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);

    for (int i = 0; i < l; ++i) {
        const int b = s.beta[static_cast<std::size_t>(i)] - r;
        if (b < 0)
            break;
        int j = i + 1;
        while (j < l && s.beta[static_cast<std::size_t>(j)] > b)
            ++j;
        if (j < l && s.beta[static_cast<std::size_t>(j)] == b)
            continue;
        const int leg = j - i - 1;

        s.out.clear();
        int t = 0;
        auto emit = [&](int bead) {
            int part = bead - (l - 1 - t);
            ++t;
            if (part > 0)
                s.out.push_back(part);
        };
        for (int q = 0; q < l; ++q) {
            if (q == i)
                continue;
            if (q == j)
                emit(b);
            emit(s.beta[static_cast<std::size_t>(q)]);
        }
        if (j == l)
            emit(b);
        f(s.out, (leg % 2 == 0) ? 1 : -1);
    }
}

} // namespace saxllab::detail
