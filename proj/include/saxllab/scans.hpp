#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "saxllab/group.hpp"
#include "saxllab/partition.hpp"

namespace saxllab {

/// Resource hints shared by every sweep. A breach stops the workers at the
/// next batch boundary and the result is flagged incomplete.
struct Limits {
    unsigned threads = 0; // 0: hardware concurrency
    std::optional<double> max_seconds;
    std::optional<std::uint64_t> max_memory_bytes;
};

struct SweepStatus {
    bool complete = true;
    std::string reason; // why the sweep stopped early
    double seconds = 0;
    std::uint64_t visited = 0;
};

/// Calls visit(mu) for every partition of n passing the filter, from a pool
/// of workers pulling batches off one shared generator. `visit` must be
/// thread-safe; anything it accumulates must not depend on visit order.
SweepStatus sweep_partitions(int n, PartitionFilter filter, const Limits& limits,
                             const std::function<void(const Partition&)>& visit);

/// Resident set size of this process, 0 if unknown.
std::uint64_t resident_bytes();

// --- strict partitions with bounded parts ---------------------------------

struct DkTable {
    int k = 0;
    std::vector<mpz_class> d; // d[m], m = 0..k(k+1)/2
};

/// Coefficients of prod_{i<=k} (1 + x^i), cross-checked against a direct count
/// of strict partitions with largest part <= k (std::logic_error on mismatch).
DkTable dk_table(int k);

/// d_k by enumerating strict partitions of each m and counting those with
/// largest part <= k.
std::vector<mpz_class> dk_by_enumeration(int k);

/// Positions m in 1..k(k+1)/4 with d_k(m-1) = d_k(m).
std::vector<int> unimodality_report(int k);

/// unimodality_report with the equalities at m = 1, 2, 4 that hold for every
/// large enough k removed.
std::vector<int> exceptional_equalities(int k);

/// Published exceptional positions for k = 4..11.
const std::map<int, std::vector<int>>& golden_exceptional();

// --- nonvanishing scans ------------------------------------------------------

/// Half-up rounding of 100 * part / whole to one decimal, e.g. "74.4".
std::string percent_one_decimal(const mpz_class& part, const mpz_class& whole);

struct SaxlRow {
    int k = 0;
    int n = 0;
    mpz_class p;
    std::uint64_t nonzero_h = 0;    // [mu](h(rho_k)) != 0
    std::uint64_t nonzero_rho = 0;  // [mu](rho_k) != 0
    std::uint64_t nonzero_union = 0;
    std::optional<std::uint64_t> comparable; // mu comparable to rho_k in dominance order
    SweepStatus status;

    [[nodiscard]] std::string percent() const { return percent_one_decimal(nonzero_union, p); }
};

SaxlRow saxl_scan(int k, bool dominance, const Limits& limits = {});

struct SpinRow {
    int k = 0;
    int n = 0;
    mpz_class p;
    std::uint64_t nonzero = 0; // [mu](tau_k) != 0
    SweepStatus status;

    [[nodiscard]] std::string percent() const { return percent_one_decimal(nonzero, p); }
};

SpinRow spin_scan(int k, const Limits& limits = {});

struct GoldenSaxlRow {
    int k, n;
    long p, nonzero_h, nonzero_rho, nonzero_union;
    const char* percent;
};
struct GoldenSpinRow {
    int k, n;
    long p, nonzero;
    const char* percent;
};
const std::vector<GoldenSaxlRow>& golden_saxl();
const std::vector<GoldenSpinRow>& golden_spin();

struct GoldenComparison {
    bool available = false; // a published row exists for this k
    bool matches = false;
    bool transposed = false; // p and the count are swapped in the published row
    std::string detail;
};
GoldenComparison compare_golden(const SaxlRow& row);
GoldenComparison compare_golden(const SpinRow& row);

// --- verification sweeps ------------------------------------------------------

struct SaxlVerdict {
    int k = 0;
    std::size_t checked = 0;
    std::vector<Partition> missing;       // g(rho_k, rho_k, mu) = 0
    std::vector<Partition> criterion_violations; // [mu](rho_k) != 0 or [mu](h(rho_k)) != 0, yet missing
    bool hooks_present = true;
    bool two_part_present = true;
    SweepStatus status;
    [[nodiscard]] bool verified() const
    {
        return status.complete && missing.empty() && criterion_violations.empty() && hooks_present
               && two_part_present;
    }
};

/// Kronecker square of the staircase character against every [mu].
SaxlVerdict verify_saxl(int k, const Limits& limits = {});

struct SpinSaxlVerdict {
    int k = 0;
    std::size_t checked = 0;
    std::vector<Partition> missing;               // [mu] not in <tau_k>^2
    std::vector<Partition> criterion_violations;  // [mu](tau_k) != 0, yet missing
    bool hooks_present = true;
    [[nodiscard]] bool all_present() const { return missing.empty(); }
    [[nodiscard]] bool criterion_holds() const { return criterion_violations.empty() && hooks_present; }
};

SpinSaxlVerdict verify_spin_saxl(int k);

enum class ConjectureTarget { d_plus_square, atilde_spin_square };

/// Spin characters whose square contains every ordinary character of S_n
/// (lambda in D+), resp. every non-faithful character of A~_n.
std::vector<CharLabel> conjecture_sweep(int n, ConjectureTarget target);

struct ParityVerdict {
    int k = 0;
    Partition alpha; // Glaisher correspondent of rho_k in O(n)
    std::size_t checked = 0;
    std::vector<Partition> failures;
    SweepStatus status;
};

/// [mu](rho_k) == [mu](alpha) mod 2 for all mu, alpha = glaisher_inverse(rho_k).
ParityVerdict parity_check(int k, const Limits& limits = {});

} // namespace saxllab
