#pragma once

// Verification suites shared by `saxllab verify` and the acceptance runner.
// Every function returns one result per checked instance; details are
// deterministic (no timings), so output is stable across runs.

#include <string>
#include <string_view>
#include <vector>

#include "saxllab/scans.hpp"

namespace saxllab::checks {

enum class Status { pass, fail, info };

std::string_view status_name(Status s);

struct Result {
    std::string name;
    Status status = Status::pass;
    std::string detail;
    bool incomplete = false; // a resource limit stopped the underlying sweep
};

using Results = std::vector<Result>;

/// No result failed.
bool passed(const Results& results);
/// Some sweep stopped early because of a resource limit.
bool limit_breached(const Results& results);

/// Nonvanishing scan rows against the published table. A row that is only
/// transposed against the published one is reported as info.
Results golden_saxl(int k_from, int k_to, const Limits& limits = {});
Results golden_spin(int k_from, int k_to, const Limits& limits = {});

/// Exceptional equality positions for k = 4..11, none in 5 <= m <= k(k+1)/4
/// for k = 12..none_to, and the recursion, symmetry and subset-count
/// invariants of d_k for k <= invariants_to.
Results dk_theorem(int none_to = 25, int invariants_to = 40);

/// Two-part characters at rho_k: [n-j, j](rho_k) = d_k(j) - d_k(j-1), and
/// the number of nonzero ones matches the plateaus of d_k.
Results two_part_ties(int max_k);

/// <n> hat<n> = sum of hooks (n = 4..hook_max_n); <n> <rho_k> = 2^a(k) [rho_k]
/// for every associate choice (k = 2..rho_max_k); <k^2> [k^k] =
/// 2^floor((k-1)/2) <tau_k> (k = 2..tau_max_k).
Results identities(int hook_max_n = 9, int rho_max_k = 5, int tau_max_k = 3);

/// All Kronecker coefficients g(rho_k, rho_k, mu) positive for k = 2..max_k;
/// <tau_k>^2 contains every [mu] for k = 2..spin_max_k.
Results saxl(int max_k, int spin_max_k, const Limits& limits = {});

/// m_+ - m_- = [mu](lambda), the bound, and for D+ the parity, over every
/// lambda in D(n), mu in P(n), n <= max_n.
Results spin_main(int max_n);

/// First and second orthogonality, square tables and sum of squared degrees
/// for S_n, S~_n, A_n, A~_n with n <= max_n.
Results orthogonality(int max_n);

/// Murnaghan-Nakayama against Kostka inversion of permutation characters,
/// hook-length and spin degree formulas, Glaisher maps.
Results oracle(int max_n);

/// The constituent criteria for rho_k (k <= rho_max_k) and tau_k
/// (k <= tau_max_k), detecting pairs for n <= pairs_max_n, the Glaisher
/// parity congruence for k <= parity_max_k and, if dominance_k > 0, the
/// dominance-comparable fraction at that k.
Results criteria(int rho_max_k, int tau_max_k, int pairs_max_n, int parity_max_k, int dominance_k,
                 const Limits& limits = {});

/// Witness counts for the two conjectures, n = 4..max_n. Informational only.
Results conjectures(int max_n);

} // namespace saxllab::checks
