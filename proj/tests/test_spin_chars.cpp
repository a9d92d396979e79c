#include <doctest.h>

#include "saxllab/character_table.hpp"
#include "saxllab/oracles.hpp"
#include "saxllab/products.hpp"
#include "saxllab/spin_chars.hpp"

using namespace saxllab;

namespace {

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

mpz_class pow2(int e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

} // namespace

TEST_CASE("Morris recursion: known values")
{
    // from the spin character table of the double cover of S_4
    CHECK(morris_value(Partition{3, 1}, Partition{3, 1}) == -1);
    CHECK(morris_value(Partition{3, 1}, ones(4)) == 4);
    CHECK(morris_value(Partition{4}, Partition{3, 1}) == 1);
    CHECK(morris_value(Partition{3, 2, 1}, ones(6)) == 4);
    CHECK_THROWS_AS(morris_value(Partition{2, 2}, Partition{3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(morris_value(Partition{3, 1}, Partition{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(morris_value(Partition{3, 1}, Partition{3}), std::invalid_argument);
}

TEST_CASE("Morris recursion: degrees")
{
    for (int n = 1; n <= 16; ++n)
        for (const auto& l : partitions(n, PartitionFilter::distinct)) {
            CAPTURE(l.str());
            CHECK(morris_value(l, ones(n)) == oracle::spin_degree(l));
        }
}

TEST_CASE("Morris recursion: basic spin characters")
{
    for (int n = 2; n <= 16; ++n)
        for (const auto& a : partitions(n, PartitionFilter::odd)) {
            const int l = a.length();
            const mpz_class expected = n % 2 ? pow2((l - 1) / 2) : pow2((l - 2) / 2);
            CHECK(morris_value(Partition{n}, a) == expected);
        }
}

TEST_CASE("spin values on split and non-split classes")
{
    const CharLabel plus = CharLabel::spin(Partition{3, 2, 1}, Sign::plus);
    const CharLabel minus = CharLabel::spin(Partition{3, 2, 1}, Sign::minus);
    CHECK(spin_value(plus, {Partition{3, 2, 1}, 1, 0}).str() == "-1*sqrt(3)");
    CHECK(spin_value(plus, {Partition{3, 2, 1}, -1, 0}) == ExactValue::sqrt_of(3));
    CHECK(spin_value(minus, {Partition{3, 2, 1}, 1, 0}) == ExactValue::sqrt_of(3));

    const CharLabel top = CharLabel::spin(Partition{4, 3, 2, 1});
    CHECK(spin_value(top, {Partition{4, 3, 2, 1}, 0, 0}).is_zero());
    CHECK(spin_value(top, {Partition{2, 2, 2, 2, 1, 1}, 0, 0}).is_zero());

    for (const auto& a : partitions(7, PartitionFilter::odd)) {
        const CharLabel chi = CharLabel::spin(Partition{4, 2, 1});
        CHECK(spin_value(chi, {a, -1, 0}) == ExactValue(mpz_class(-morris_value(Partition{4, 2, 1}, a))));
        CHECK(spin_value(chi, {a, 1, 0}) == ExactValue(morris_value(Partition{4, 2, 1}, a)));
    }
}

TEST_CASE("associates and hat")
{
    CHECK(associate(CharLabel::spin(Partition{3, 2, 1}, Sign::plus)) == CharLabel::spin(Partition{3, 2, 1}, Sign::minus));
    CHECK(associate(CharLabel::spin(Partition{4, 3, 2, 1})) == CharLabel::spin(Partition{4, 3, 2, 1}));

    auto ctx = GroupContext::get(GroupKind::double_cover, 6);
    const ClassFunction h = hat(Partition{3, 2, 1});
    for (std::size_t i = 0; i < ctx->class_count(); ++i)
        if (ctx->label(i).type == Partition{3, 2, 1})
            CHECK(h[i].is_zero());
    CHECK(hat(Partition{4, 3, 2, 1}) == class_function(GroupContext::get(GroupKind::double_cover, 10),
                                                       CharLabel::spin(Partition{4, 3, 2, 1})));
    CHECK(hat(Partition{7}) == class_function(GroupContext::get(GroupKind::double_cover, 7), CharLabel::spin(Partition{7})));

    // the sign character is -1 on cycle type (3,2,1) and swaps the associates there
    const ClassLabel c{Partition{3, 2, 1}, 1, 0};
    CHECK(-spin_value(CharLabel::spin(Partition{3, 2, 1}, Sign::plus), c)
          == spin_value(CharLabel::spin(Partition{3, 2, 1}, Sign::minus), c));
}

TEST_CASE("spin characters are orthonormal")
{
    for (int n = 2; n <= 10; ++n) {
        CAPTURE(n);
        auto ctx = GroupContext::get(GroupKind::double_cover, n);
        std::vector<ClassFunction> spins;
        mpz_class squares = 0;
        for (const auto& label : irreducible_labels(*ctx))
            if (label.family == CharFamily::spin) {
                spins.push_back(class_function(ctx, label));
                squares += morris_value(label.shape, ones(n)) * morris_value(label.shape, ones(n));
            }
        for (std::size_t i = 0; i < spins.size(); ++i)
            for (std::size_t j = i; j < spins.size(); ++j)
                CHECK(inner_product(spins[i], spins[j]) == ExactValue(i == j ? 1L : 0L));
        CHECK(squares == factorial(n)); // spin characters account for half the group order
    }
}
