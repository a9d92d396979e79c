#include <doctest.h>

#include <array>
#include <map>

#include "saxllab/alternating.hpp"
#include "saxllab/character_table.hpp"
#include "saxllab/oracles.hpp"
#include "saxllab/products.hpp"
#include "saxllab/spin_chars.hpp"

using namespace saxllab;

namespace {

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition hook(int n, int j)
{
    std::vector<int> p{n - j};
    p.insert(p.end(), static_cast<std::size_t>(j), 1);
    return Partition(p);
}

ClassFunction hook_sum(const ContextPtr& ctx)
{
    ClassFunction h = ClassFunction::zero(ctx);
    for (int j = 0; j < ctx->n(); ++j)
        h += class_function(ctx, CharLabel::ordinary(hook(ctx->n(), j)));
    return h;
}

} // namespace

TEST_CASE("inner products")
{
    for (int n = 1; n <= 8; ++n) {
        auto ctx = GroupContext::get(GroupKind::symmetric, n);
        for (const auto& l : partitions(n)) {
            auto chi = class_function(ctx, CharLabel::ordinary(l));
            CHECK(inner_product(chi, chi) == ExactValue(1L));
        }
    }
    auto s6 = GroupContext::get(GroupKind::double_cover, 6);
    CHECK(inner_product(class_function(s6, CharLabel::spin(Partition{3, 2, 1}, Sign::plus)),
                        class_function(s6, CharLabel::spin(Partition{3, 2, 1}, Sign::minus)))
              .is_zero());
    for (int n = 2; n <= 8; ++n) {
        auto ctx = GroupContext::get(GroupKind::symmetric, n);
        CHECK(inner_product(hook_sum(ctx), class_function(ctx, CharLabel::ordinary(hook(n, 1)))) == ExactValue(1L));
    }
    CHECK_THROWS(inner_product(class_function(s6, CharLabel::ordinary(Partition{6})),
                               class_function(GroupContext::get(GroupKind::symmetric, 6),
                                              CharLabel::ordinary(Partition{6}))));
}

TEST_CASE("Kronecker coefficients")
{
    // S_3 table written out by hand: classes (3), (2,1), (1,1,1) of sizes 2, 3, 1
    const std::map<std::vector<int>, std::array<int, 3>> s3{
        {{3}, {1, 1, 1}}, {{2, 1}, {-1, 0, 2}}, {{1, 1, 1}, {1, -1, 1}}};
    const std::array<int, 3> sizes{2, 3, 1};
    for (const auto& [a, va] : s3)
        for (const auto& [b, vb] : s3)
            for (const auto& [c, vc] : s3) {
                int sum = 0;
                for (int i = 0; i < 3; ++i)
                    sum += sizes[i] * va[i] * vb[i] * vc[i];
                CHECK(kron_coeff(Partition(a), Partition(b), Partition(c)) == sum / 6);
            }
    CHECK(kron_coeff(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}) == 1);

    for (const auto& l : partitions(6))
        for (const auto& v : partitions(6))
            CHECK(kron_coeff(l, Partition{6}, v) == (l == v ? 1 : 0));
    CHECK(kron_coeff(Partition{3, 2, 1}, Partition{3, 2, 1}, Partition{2, 2, 2}) > 0);

    // against a class-function computation
    auto ctx = GroupContext::get(GroupKind::symmetric, 6);
    for (const auto& a : partitions(6))
        for (const auto& b : partitions(6)) {
            auto prod = class_function(ctx, CharLabel::ordinary(a)) * class_function(ctx, CharLabel::ordinary(b));
            for (const auto& c : partitions(6))
                CHECK(ExactValue(kron_coeff(a, b, c)) == inner_product(prod, class_function(ctx, CharLabel::ordinary(c))));
        }
}

TEST_CASE("decompose")
{
    auto ctx = GroupContext::get(GroupKind::symmetric, 5);
    auto f = class_function(ctx, CharLabel::ordinary(Partition{3, 2})) * class_function(ctx, CharLabel::ordinary(Partition{4, 1}));
    Decomposition d = decompose(f);
    CHECK(d.reconstruct() == f);
    CHECK(d.multiplicity(CharLabel::ordinary(Partition{5})) == 0);
    CHECK(d.multiplicity(CharLabel::ordinary(Partition{3, 2})) == 1);

    auto half = class_function(ctx, CharLabel::ordinary(Partition{5})) * mpq_class(1, 2);
    CHECK_THROWS_AS(decompose(half), std::runtime_error);
    auto negative = class_function(ctx, CharLabel::ordinary(Partition{5})) * mpq_class(-1);
    CHECK_THROWS_AS(decompose(negative), std::runtime_error);
}

TEST_CASE("spin squares")
{
    for (int n = 4; n <= 9; ++n) {
        auto ctx = GroupContext::get(GroupKind::double_cover, n);
        CHECK(class_function(ctx, CharLabel::spin(Partition{n})) * hat(Partition{n}) == hook_sum(ctx));
    }
    for (int n = 3; n <= 8; ++n)
        for (const auto& l : partitions(n, PartitionFilter::distinct_minus)) {
            Decomposition d = decompose_spin_square(l, Sign::plus, Sign::minus);
            const bool triv = d.multiplicity(CharLabel::ordinary(Partition{n})) > 0;
            const bool sgn = d.multiplicity(CharLabel::ordinary(ones(n))) > 0;
            CHECK(triv != sgn);
        }
    // <4,3,2,1> is self-associate, so its square holds both linear characters
    Decomposition top = decompose_spin_square(Partition{4, 3, 2, 1});
    CHECK(top.multiplicity(CharLabel::ordinary(Partition{10})) == 1);
    CHECK(top.multiplicity(CharLabel::ordinary(ones(10))) == 1);
    mpz_class degree = 0;
    for (std::size_t i = 0; i < top.labels.size(); ++i)
        degree += top.multiplicities[i] * oracle::hook_degree(top.labels[i].shape);
    CHECK(degree == oracle::spin_degree(Partition{4, 3, 2, 1}) * oracle::spin_degree(Partition{4, 3, 2, 1}));
}

TEST_CASE("mixed products")
{
    Decomposition d = decompose_mixed(Partition{3, 3, 3}, CharLabel::spin(Partition{9}));
    REQUIRE(d.labels.size() == 1);
    CHECK(d.labels[0] == CharLabel::spin(Partition{5, 3, 1}));
    CHECK(d.multiplicities[0] == 2);

    for (int n = 3; n <= 8; ++n)
        for (const auto& l : partitions(n, PartitionFilter::distinct_minus)) {
            Decomposition s = decompose_mixed(ones(n), CharLabel::spin(l, Sign::plus));
            REQUIRE(s.labels.size() == 1);
            CHECK(s.labels[0] == CharLabel::spin(l, Sign::minus));
        }

    Decomposition r = decompose_product({CharLabel::spin(Partition{10}, Sign::plus), CharLabel::spin(Partition{4, 3, 2, 1})});
    REQUIRE(r.labels.size() == 1);
    CHECK(r.labels[0] == CharLabel::ordinary(Partition{4, 3, 2, 1}));
    CHECK(r.multiplicities[0] == 2);
}

TEST_CASE("product context")
{
    CHECK(product_context({CharLabel::ordinary(Partition{2, 1})})->kind() == GroupKind::symmetric);
    CHECK(product_context({CharLabel::ordinary(Partition{2, 1}), CharLabel::spin(Partition{3})})->kind()
          == GroupKind::double_cover);
    CHECK(product_context({CharLabel::alternating(Partition{2, 1}, Sign::plus)})->kind() == GroupKind::alternating);
    CHECK(product_context({CharLabel::alternating(Partition{2, 1}, Sign::plus), CharLabel::spin(Partition{3})})->kind()
          == GroupKind::alternating_double_cover);
    CHECK_THROWS_AS(product_context({CharLabel::ordinary(Partition{2, 1}), CharLabel::ordinary(Partition{2})}),
                    std::invalid_argument);

    // {2,2}+ {2,2}- over A_4
    Decomposition d = decompose_product({CharLabel::alternating(Partition{2, 2}, Sign::plus),
                                         CharLabel::alternating(Partition{2, 2}, Sign::minus)});
    REQUIRE(d.labels.size() == 1);
    CHECK(d.labels[0] == CharLabel::alternating(Partition{4}));
}

TEST_CASE("spin multiplicity test")
{
    SpinMainCheck c = spin_main_check(Partition{3, 2, 1}, Partition{6});
    CHECK(c.value == 1);
    CHECK(c.m_plus - c.m_minus == 1);
    CHECK(c.ok());

    SpinMainCheck p = spin_main_check(Partition{5, 3, 1}, Partition{4, 3, 2});
    CHECK(p.parity_ok);
    CHECK(mpz_class(p.total - p.value) % 2 == 0);
    CHECK(p.ok());

    for (const auto& mu : partitions(7)) {
        SpinMainCheck z = spin_main_check(Partition{4, 2, 1}, mu);
        if (z.value == 0) {
            CHECK_FALSE(z.hypothesis);
            CHECK(z.ok());
        }
    }
}

TEST_CASE("multiplicity test on a detecting pair")
{
    auto ctx = GroupContext::get(GroupKind::alternating, 4);
    const std::size_t x = *ctx->index_of({Partition{3, 1}, 0, 1});
    const std::size_t y = *ctx->index_of({Partition{3, 1}, 0, -1});
    auto chi1 = class_function(ctx, CharLabel::alternating(Partition{2, 2}, Sign::plus));
    auto chi2 = class_function(ctx, CharLabel::alternating(Partition{2, 2}, Sign::minus));

    DetectCheck trivial = lemma_detect_check(class_function(ctx, CharLabel::alternating(Partition{4})), x, y, chi1, chi2);
    CHECK(trivial.precondition);
    CHECK(trivial.m1 - trivial.m2 == 1);
    CHECK(trivial.difference_ok);
    CHECK(trivial.bound_ok);

    // [2,2] restricted to A_4 is {2,2}+ + {2,2}-, value -1 on both classes
    auto psi = chi1 + chi2;
    DetectCheck r = lemma_detect_check(psi, x, y, chi1, chi2);
    CHECK(r.precondition);
    CHECK(r.psi_x == ExactValue(-1L));
    CHECK(r.difference_ok);
    CHECK(r.bound_ok);
}
