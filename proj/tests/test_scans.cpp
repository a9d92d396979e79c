#include <doctest.h>

#include <atomic>

#include "saxllab/oracles.hpp"
#include "saxllab/ordinary_chars.hpp"
#include "saxllab/scans.hpp"

using namespace saxllab;

namespace {

std::vector<mpz_class> as_mpz(const std::vector<long>& v)
{
    return {v.begin(), v.end()};
}

const GoldenSaxlRow& published_saxl(int k)
{
    for (const auto& g : golden_saxl())
        if (g.k == k)
            return g;
    throw std::out_of_range("no row");
}

} // namespace

TEST_CASE("d_k coefficients")
{
    CHECK(dk_table(4).d == as_mpz({1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1}));
    for (int k = 1; k <= 16; ++k) {
        CAPTURE(k);
        const DkTable t = dk_table(k);
        CHECK(t.d == dk_by_enumeration(k));
        CHECK(t.d == oracle::dk_by_subsets(k));
    }
    CHECK(exceptional_equalities(6) == std::vector<int>{7, 8, 10});
    CHECK(exceptional_equalities(9) == std::vector<int>{19, 22});
    CHECK(exceptional_equalities(12).empty());
    CHECK(unimodality_report(12) == std::vector<int>{1, 2, 4});
    for (const auto& [k, positions] : golden_exceptional())
        CHECK(exceptional_equalities(k) == positions);
}

TEST_CASE("percent rounding")
{
    CHECK(percent_one_decimal(131, 176) == "74.4");
    CHECK(percent_one_decimal(3, 3) == "100.0");
    CHECK(percent_one_decimal(1, 16) == "6.3"); // 6.25 rounds up
    CHECK(percent_one_decimal(0, 7) == "0.0");
    CHECK(percent_one_decimal(1, 3) == "33.3");
    CHECK(percent_one_decimal(2, 3) == "66.7");
}

TEST_CASE("Saxl scan rows")
{
    for (int k : {2, 3, 4, 5, 7}) {
        CAPTURE(k);
        const SaxlRow row = saxl_scan(k, false);
        const GoldenSaxlRow& g = published_saxl(k);
        CHECK(row.status.complete);
        CHECK(row.n == g.n);
        CHECK(row.p == g.p);
        CHECK(row.nonzero_h == static_cast<std::uint64_t>(g.nonzero_h));
        CHECK(row.nonzero_rho == static_cast<std::uint64_t>(g.nonzero_rho));
        CHECK(row.nonzero_union == static_cast<std::uint64_t>(g.nonzero_union));
        CHECK(std::stod(row.percent()) == doctest::Approx(std::stod(g.percent)));
        CHECK(compare_golden(row).matches);
    }

    // direct recount of k = 4 without the scan
    const Partition rho = staircase(4);
    const Partition h = principal_hooks(rho);
    std::uint64_t either = 0;
    for (const auto& mu : partitions(10))
        if (mn_value(mu, rho) != 0 || mn_value(mu, h) != 0)
            ++either;
    CHECK(saxl_scan(4, false).nonzero_union == either);
}

TEST_CASE("spin scan rows")
{
    for (int k : {1, 4, 5}) {
        CAPTURE(k);
        const SpinRow row = spin_scan(k);
        CHECK(row.status.complete);
        CHECK(compare_golden(row).matches);
    }
    // tau_1 = (1): the only character of S_1 is nonzero
    CHECK(spin_scan(1).nonzero == 1);
}

TEST_CASE("scan results do not depend on threads or memo state")
{
    Limits one;
    one.threads = 1;
    Limits four;
    four.threads = 4;
    const SaxlRow a = saxl_scan(6, true, one);
    const SaxlRow b = saxl_scan(6, true, four);
    CHECK(a.nonzero_h == b.nonzero_h);
    CHECK(a.nonzero_rho == b.nonzero_rho);
    CHECK(a.nonzero_union == b.nonzero_union);
    CHECK(a.comparable == b.comparable);

    CharMemo fresh;
    const Partition rho = staircase(6);
    std::uint64_t nonzero = 0;
    for (const auto& mu : partitions(21))
        if (mn_value(mu, rho, fresh) != 0)
            ++nonzero;
    CHECK(a.nonzero_rho == nonzero);

    CHECK(spin_scan(5, one).nonzero == spin_scan(5, four).nonzero);
}

TEST_CASE("limits stop a sweep and mark it incomplete")
{
    Limits fast;
    fast.max_seconds = 1e-6;
    const SaxlRow r = saxl_scan(11, false, fast);
    CHECK_FALSE(r.status.complete);
    CHECK_FALSE(r.status.reason.empty());

    Limits tight;
    tight.max_memory_bytes = 1;
    CHECK_FALSE(spin_scan(6, tight).status.complete);

    std::atomic<int> seen{0};
    const SweepStatus s = sweep_partitions(20, PartitionFilter::all, {}, [&](const Partition&) { ++seen; });
    CHECK(s.complete);
    CHECK(seen == 627);
    CHECK(s.visited == 627);
}

TEST_CASE("comparison with published rows")
{
    SaxlRow doctored = saxl_scan(4, false);
    CHECK(compare_golden(doctored).matches);
    doctored.nonzero_union -= 1;
    const GoldenComparison c = compare_golden(doctored);
    CHECK(c.available);
    CHECK_FALSE(c.matches);
    CHECK_FALSE(c.detail.empty());

    SaxlRow unknown;
    unknown.k = 30;
    CHECK_FALSE(compare_golden(unknown).available);

    // the published k = 8 spin row has p and the count swapped
    SpinRow spin8;
    spin8.k = 8;
    spin8.n = 64;
    spin8.p = 17977;
    spin8.nonzero = 0;
    for (const auto& g : golden_spin())
        if (g.k == 8) {
            spin8.p = g.nonzero;
            spin8.nonzero = static_cast<std::uint64_t>(g.p);
        }
    const GoldenComparison t = compare_golden(spin8);
    CHECK(t.available);
    CHECK(t.transposed);
}

TEST_CASE("Kronecker square of the staircase")
{
    const std::vector<std::size_t> counts{3, 11, 42};
    for (int k = 2; k <= 4; ++k) {
        CAPTURE(k);
        const SaxlVerdict v = verify_saxl(k);
        CHECK(v.checked == counts[static_cast<std::size_t>(k - 2)]);
        CHECK(v.verified());
    }
    for (int k = 2; k <= 3; ++k) {
        const SpinSaxlVerdict v = verify_spin_saxl(k);
        CHECK(v.criterion_holds());
        CHECK(v.hooks_present);
    }
}

TEST_CASE("spin squares containing everything")
{
    CHECK(conjecture_sweep(5, ConjectureTarget::d_plus_square).empty());
    const auto four = conjecture_sweep(4, ConjectureTarget::d_plus_square);
    REQUIRE(four.size() == 1);
    CHECK(four[0].shape == Partition{3, 1});
    CHECK_FALSE(conjecture_sweep(6, ConjectureTarget::atilde_spin_square).empty());
}

TEST_CASE("parity of staircase values")
{
    const ParityVerdict p3 = parity_check(3);
    CHECK(p3.alpha == Partition{3, 1, 1, 1});
    CHECK(p3.checked == 11);
    CHECK(p3.failures.empty());

    const ParityVerdict p4 = parity_check(4);
    CHECK(p4.alpha == Partition{3, 1, 1, 1, 1, 1, 1, 1});
    CHECK(p4.checked == 42);
    CHECK(p4.failures.empty());
}
