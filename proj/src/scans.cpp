#include "saxllab/scans.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unistd.h>

#include "saxllab/character_table.hpp"
#include "saxllab/ordinary_chars.hpp"
#include "saxllab/products.hpp"

namespace saxllab {

std::uint64_t resident_bytes()
{
    std::ifstream statm("/proc/self/statm");
    std::uint64_t pages = 0;
    std::uint64_t resident = 0;
    if (!(statm >> pages >> resident))
        return 0;
    return resident * static_cast<std::uint64_t>(sysconf(_SC_PAGESIZE));
}

SweepStatus sweep_partitions(int n, PartitionFilter filter, const Limits& limits,
                             const std::function<void(const Partition&)>& visit)
{
    using clock = std::chrono::steady_clock;
    constexpr std::size_t batch_size = 64;
    const auto start = clock::now();
    auto elapsed = [&start]() { return std::chrono::duration<double>(clock::now() - start).count(); };

    PartitionGenerator gen(n, filter);
    std::mutex gen_mutex;
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> visited{0};
    std::mutex status_mutex;
    SweepStatus status;
    std::exception_ptr failure;

    auto breach = [&](const std::string& why) {
        std::lock_guard lock(status_mutex);
        if (status.complete) {
            status.complete = false;
            status.reason = why;
        }
        stop = true;
    };

    auto worker = [&]() {
        std::vector<Partition> batch;
        while (!stop) {
            batch.clear();
            {
                std::lock_guard lock(gen_mutex);
                while (batch.size() < batch_size) {
                    auto next = gen.next();
                    if (!next)
                        break;
                    batch.push_back(std::move(*next));
                }
            }
            if (batch.empty())
                return;
            try {
                for (const Partition& mu : batch)
                    visit(mu);
            } catch (...) {
                std::lock_guard lock(status_mutex);
                if (!failure)
                    failure = std::current_exception();
                stop = true;
                return;
            }
            visited += batch.size();
            if (limits.max_seconds && elapsed() > *limits.max_seconds)
                breach("time limit of " + std::to_string(*limits.max_seconds) + " s reached");
            if (limits.max_memory_bytes && resident_bytes() > *limits.max_memory_bytes)
                breach("memory limit of " + std::to_string(*limits.max_memory_bytes) + " bytes reached");
        }
    };

    unsigned threads = limits.threads != 0 ? limits.threads : std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    status.seconds = elapsed();
    status.visited = visited;
    return status;
}

// ---------------------------------------------------------------------------

std::vector<mpz_class> dk_by_enumeration(int k)
{
    const int total = k * (k + 1) / 2;
    std::vector<mpz_class> d(static_cast<std::size_t>(total) + 1);
    for (int m = 0; m <= total; ++m) {
        PartitionGenerator gen(m, PartitionFilter::distinct);
        long count = 0;
        while (auto p = gen.next())
            if ((*p)[0] <= k)
                ++count;
        d[static_cast<std::size_t>(m)] = count;
    }
    return d;
}

DkTable dk_table(int k)
{
    if (k < 1)
        throw std::invalid_argument("d_k needs k >= 1");
    DkTable table{k, strict_bounded_counts(k)};
    if (k <= 12 && table.d != dk_by_enumeration(k))
        throw std::logic_error("d_" + std::to_string(k) + ": polynomial and direct count disagree");
    return table;
}

std::vector<int> unimodality_report(int k)
{
    const auto d = strict_bounded_counts(k);
    const int top = k * (k + 1) / 4;
    std::vector<int> out;
    for (int m = 1; m <= top; ++m)
        if (d[static_cast<std::size_t>(m - 1)] == d[static_cast<std::size_t>(m)])
            out.push_back(m);
    return out;
}

std::vector<int> exceptional_equalities(int k)
{
    std::vector<int> out;
    for (int m : unimodality_report(k))
        if (m >= 5)
            out.push_back(m);
    return out;
}

const std::map<int, std::vector<int>>& golden_exceptional()
{
    static const std::map<int, std::vector<int>> table{
        {4, {5}},        {5, {6, 7}},   {6, {7, 8, 10}}, {7, {8, 11, 13, 14}},
        {8, {16, 17}},   {9, {19, 22}}, {10, {26}},      {11, {32}},
    };
    return table;
}

// ---------------------------------------------------------------------------

std::string percent_one_decimal(const mpz_class& part, const mpz_class& whole)
{
    if (whole <= 0)
        throw std::invalid_argument("percentage of an empty set");
    // tenths of a percent, rounded half up
    mpz_class tenths = (part * 2000 + whole) / (2 * whole);
    mpz_class units = tenths / 10;
    mpz_class frac = tenths % 10;
    return units.get_str() + "." + frac.get_str();
}

SaxlRow saxl_scan(int k, bool dominance, const Limits& limits)
{
    if (k < 1)
        throw std::invalid_argument("saxl scan needs k >= 1");
    const Partition rho = staircase(k);
    const Partition hooks = principal_hooks(rho);
    SaxlRow row;
    row.k = k;
    row.n = rho.size();
    row.p = partition_count(row.n);

    std::atomic<std::uint64_t> at_h{0};
    std::atomic<std::uint64_t> at_rho{0};
    std::atomic<std::uint64_t> either{0};
    std::atomic<std::uint64_t> comparable{0};
    row.status = sweep_partitions(row.n, PartitionFilter::all, limits, [&](const Partition& mu) {
        const bool h = mn_value_transient(mu, hooks) != 0;
        const bool r = mn_value_transient(mu, rho) != 0;
        at_h += h;
        at_rho += r;
        either += h || r;
        if (dominance && dominance_leq(mu, rho) != Dominance::incomparable)
            ++comparable;
    });
    row.nonzero_h = at_h;
    row.nonzero_rho = at_rho;
    row.nonzero_union = either;
    if (dominance)
        row.comparable = comparable.load();
    return row;
}

SpinRow spin_scan(int k, const Limits& limits)
{
    if (k < 1)
        throw std::invalid_argument("spin scan needs k >= 1");
    const Partition tau = spin_staircase(k);
    SpinRow row;
    row.k = k;
    row.n = tau.size();
    row.p = partition_count(row.n);
    std::atomic<std::uint64_t> nonzero{0};
    row.status = sweep_partitions(row.n, PartitionFilter::all, limits, [&](const Partition& mu) {
        if (mn_value_transient(mu, tau) != 0)
            ++nonzero;
    });
    row.nonzero = nonzero;
    return row;
}

const std::vector<GoldenSaxlRow>& golden_saxl()
{
    static const std::vector<GoldenSaxlRow> rows{
        {2, 3, 3, 3, 2, 3, "100"},
        {3, 6, 11, 5, 6, 9, "81.8"},
        {4, 10, 42, 21, 24, 33, "78.6"},
        {5, 15, 176, 45, 114, 131, "74.4"},
        {6, 21, 792, 231, 524, 607, "76.6"},
        {7, 28, 3718, 573, 2408, 2623, "70.5"},
        {8, 36, 17977, 3321, 12734, 13567, "75.5"},
        {9, 45, 89134, 9321, 67462, 69692, "78.2"},
        {10, 55, 451276, 59091, 370590, 381375, "84.5"},
        {11, 66, 2323520, 183989, 2036486, 2060003, "88.7"},
    };
    return rows;
}

const std::vector<GoldenSpinRow>& golden_spin()
{
    static const std::vector<GoldenSpinRow> rows{
        {1, 1, 1, 1, "100"},
        {2, 4, 5, 3, "60.0"},
        {3, 9, 30, 15, "50.0"},
        {4, 16, 231, 93, "40.3"},
        {5, 25, 1958, 755, "38.6"},
        {6, 36, 17977, 7185, "40.0"},
        {7, 49, 173525, 75430, "43.5"},
        // printed with p(n) and the count in each other's column
        {8, 64, 851522, 1741630, "48.9"},
    };
    return rows;
}

namespace {

// "100" and "100.0" denote the same published percentage.
bool same_percent(const std::string& computed, const std::string& printed)
{
    return computed == printed || computed == printed + ".0";
}

std::string mismatch(const std::string& what, const std::string& got, const std::string& want)
{
    return what + " " + got + " (published " + want + ")";
}

} // namespace

GoldenComparison compare_golden(const SaxlRow& row)
{
    GoldenComparison out;
    for (const auto& g : golden_saxl()) {
        if (g.k != row.k)
            continue;
        out.available = true;
        std::vector<std::string> bad;
        if (row.n != g.n)
            bad.push_back(mismatch("n", std::to_string(row.n), std::to_string(g.n)));
        if (row.p != g.p)
            bad.push_back(mismatch("p(n)", row.p.get_str(), std::to_string(g.p)));
        if (row.nonzero_h != static_cast<std::uint64_t>(g.nonzero_h))
            bad.push_back(mismatch("nonzero on h(rho_k)", std::to_string(row.nonzero_h), std::to_string(g.nonzero_h)));
        if (row.nonzero_rho != static_cast<std::uint64_t>(g.nonzero_rho))
            bad.push_back(mismatch("nonzero on rho_k", std::to_string(row.nonzero_rho), std::to_string(g.nonzero_rho)));
        if (row.nonzero_union != static_cast<std::uint64_t>(g.nonzero_union))
            bad.push_back(mismatch("union", std::to_string(row.nonzero_union), std::to_string(g.nonzero_union)));
        if (!same_percent(row.percent(), g.percent))
            bad.push_back(mismatch("percentage", row.percent(), g.percent));
        out.matches = bad.empty();
        for (const auto& b : bad)
            out.detail += (out.detail.empty() ? "" : "; ") + b;
    }
    return out;
}

GoldenComparison compare_golden(const SpinRow& row)
{
    GoldenComparison out;
    for (const auto& g : golden_spin()) {
        if (g.k != row.k)
            continue;
        out.available = true;
        const bool straight = row.p == g.p && row.nonzero == static_cast<std::uint64_t>(g.nonzero);
        const bool swapped = row.p == g.nonzero && row.nonzero == static_cast<std::uint64_t>(g.p);
        const bool percent_ok = same_percent(row.percent(), g.percent);
        out.matches = row.n == g.n && straight && percent_ok;
        out.transposed = row.n == g.n && swapped && !straight;
        if (out.transposed) {
            out.detail = "published row lists p(n) = " + std::to_string(g.p) + " and nonzero = "
                         + std::to_string(g.nonzero) + "; computed values are the same pair transposed"
                         + (percent_ok ? "" : ", percentage " + row.percent() + " vs " + g.percent);
        } else if (!out.matches) {
            out.detail = mismatch("p(n)", row.p.get_str(), std::to_string(g.p)) + "; "
                         + mismatch("nonzero", std::to_string(row.nonzero), std::to_string(g.nonzero)) + "; "
                         + mismatch("percentage", row.percent(), g.percent);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void sort_enumeration_order(std::vector<Partition>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

bool is_hook(const Partition& mu) { return mu.length() <= 1 || mu[1] <= 1; }

} // namespace

SaxlVerdict verify_saxl(int k, const Limits& limits)
{
    const Partition rho = staircase(k);
    const Partition hooks = principal_hooks(rho);
    const int n = rho.size();
    const mpz_class nfact = factorial(n);

    // weights (n!/z_alpha) [rho](alpha)^2 on the support of [rho]
    std::vector<std::pair<Partition, mpz_class>> weights;
    for (const Partition& alpha : partitions(n)) {
        CharValue v = mn_value(rho, alpha);
        if (v != 0)
            weights.emplace_back(alpha, (nfact / centralizer_order(alpha)) * v * v);
    }

    SaxlVerdict verdict;
    verdict.k = k;
    std::mutex mutex;
    std::atomic<std::size_t> checked{0};
    verdict.status = sweep_partitions(n, PartitionFilter::all, limits, [&](const Partition& mu) {
        mpz_class sum = 0;
        for (const auto& [alpha, w] : weights)
            sum += w * mn_value(mu, alpha);
        if (sum % nfact != 0 || sum < 0)
            throw std::logic_error("non-integral Kronecker coefficient for " + mu.str());
        ++checked;
        if (sum != 0)
            return;
        const bool criterion = mn_value(mu, rho) != 0 || mn_value(mu, hooks) != 0;
        std::lock_guard lock(mutex);
        verdict.missing.push_back(mu);
        if (criterion)
            verdict.criterion_violations.push_back(mu);
        if (is_hook(mu))
            verdict.hooks_present = false;
        if (mu.length() <= 2)
            verdict.two_part_present = false;
    });
    verdict.checked = checked;
    sort_enumeration_order(verdict.missing);
    sort_enumeration_order(verdict.criterion_violations);
    return verdict;
}

SpinSaxlVerdict verify_spin_saxl(int k)
{
    const Partition tau = spin_staircase(k);
    const Decomposition square = decompose_spin_square(tau);
    SpinSaxlVerdict verdict;
    verdict.k = k;
    for (const Partition& mu : partitions(tau.size())) {
        ++verdict.checked;
        if (square.multiplicity(CharLabel::ordinary(mu)) != 0)
            continue;
        verdict.missing.push_back(mu);
        if (mn_value(mu, tau) != 0)
            verdict.criterion_violations.push_back(mu);
        if (is_hook(mu))
            verdict.hooks_present = false;
    }
    return verdict;
}

std::vector<CharLabel> conjecture_sweep(int n, ConjectureTarget target)
{
    std::vector<CharLabel> witnesses;
    if (target == ConjectureTarget::d_plus_square) {
        const mpz_class p = partition_count(n);
        for (const Partition& lambda : partitions(n, PartitionFilter::distinct_plus)) {
            const Decomposition square = decompose_spin_square(lambda);
            if (square.labels.size() == p)
                witnesses.push_back(CharLabel::spin(lambda));
        }
        return witnesses;
    }
    auto ctx = GroupContext::get(GroupKind::alternating_double_cover, n);
    std::vector<CharLabel> ordinary;
    std::vector<CharLabel> spin;
    for (const CharLabel& label : irreducible_labels(*ctx))
        (label.family == CharFamily::alternating_spin ? spin : ordinary).push_back(label);
    for (const CharLabel& chi : spin) {
        ClassFunction f = class_function(ctx, chi);
        const Decomposition square = decompose(f * f, ordinary);
        if (square.labels.size() == ordinary.size())
            witnesses.push_back(chi);
    }
    return witnesses;
}

ParityVerdict parity_check(int k, const Limits& limits)
{
    const Partition rho = staircase(k);
    ParityVerdict verdict;
    verdict.k = k;
    verdict.alpha = glaisher_inverse(rho);
    std::mutex mutex;
    std::atomic<std::size_t> checked{0};
    verdict.status = sweep_partitions(rho.size(), PartitionFilter::all, limits, [&](const Partition& mu) {
        mpz_class gap = mn_value_transient(mu, rho) - mn_value_transient(mu, verdict.alpha);
        ++checked;
        if (mpz_odd_p(gap.get_mpz_t())) {
            std::lock_guard lock(mutex);
            verdict.failures.push_back(mu);
        }
    });
    verdict.checked = checked;
    sort_enumeration_order(verdict.failures);
    return verdict;
}

} // namespace saxllab
