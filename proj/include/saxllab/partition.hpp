#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace saxllab {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Partitions double as cycle types, so the same value labels both an
/// irreducible character [lambda] and a conjugacy class of S_n. Instances are
/// immutable; equality and ordering are structural (lexicographic on parts).
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zero parts; rejects negative parts.
    static Partition from_unsorted(std::vector<int> parts);

    /// Parses the canonical text form "5,3,1" (empty string is the empty partition).
    static Partition parse(std::string_view text);

    [[nodiscard]] std::string str() const;

    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    [[nodiscard]] const std::vector<int>& vec() const noexcept { return parts_; }
    /// 0-based access; out-of-range indices read as 0.
    [[nodiscard]] int operator[](int i) const noexcept
    {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    [[nodiscard]] auto begin() const noexcept { return parts_.begin(); }
    [[nodiscard]] auto end() const noexcept { return parts_.end(); }

    [[nodiscard]] int multiplicity(int part) const noexcept;
    [[nodiscard]] bool has_odd_parts_only() const noexcept;
    [[nodiscard]] bool has_distinct_parts() const noexcept;
    [[nodiscard]] bool is_self_conjugate() const;

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& other) const noexcept
    {
        return parts_ <=> other.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// D+ (n - l even) or D- (n - l odd); only meaningful for strict partitions.
enum class Parity { even, odd };

struct PartitionClass {
    bool is_odd_parts = false;
    bool is_distinct = false;
    std::optional<Parity> parity_sign;
};

[[nodiscard]] PartitionClass classify(const Partition& p);
[[nodiscard]] bool in_odd(const Partition& p);
[[nodiscard]] bool in_distinct(const Partition& p);
[[nodiscard]] bool in_distinct_plus(const Partition& p);
[[nodiscard]] bool in_distinct_minus(const Partition& p);

enum class PartitionFilter { all, odd, distinct, distinct_plus, distinct_minus };

/// Lazy reverse-lexicographic enumeration of the partitions of n satisfying
/// a filter: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n, PartitionFilter filter = PartitionFilter::all);

    /// Returns the next partition, or nullopt once the sequence is exhausted.
    std::optional<Partition> next();

private:
    bool advance();
    bool accepts() const;

    int n_;
    PartitionFilter filter_;
    bool strict_;
    bool odd_;
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

[[nodiscard]] std::vector<Partition> partitions(int n, PartitionFilter filter = PartitionFilter::all);

/// Number of partitions p(n), via Euler's pentagonal recurrence.
[[nodiscard]] mpz_class partition_count(int n);

[[nodiscard]] Partition conjugate(const Partition& p);

/// Hook lengths along the Durfee diagonal, h_j = lambda_j + lambda'_j - 2j + 1.
[[nodiscard]] Partition principal_hooks(const Partition& p);

/// (k, k-1, ..., 1), a partition of k(k+1)/2.
[[nodiscard]] Partition staircase(int k);

/// (2k-1, 2k-3, ..., 3, 1), a partition of k^2.
[[nodiscard]] Partition spin_staircase(int k);

/// Glaisher's bijection O(n) -> D(n): a part o with multiplicity sum 2^e_i
/// becomes the parts o * 2^e_i. Throws std::invalid_argument off O(n).
[[nodiscard]] Partition glaisher(const Partition& odd_parts);

/// Inverse bijection D(n) -> O(n). Throws std::invalid_argument off D(n).
[[nodiscard]] Partition glaisher_inverse(const Partition& distinct_parts);

enum class Dominance { below, above_or_equal, incomparable };

/// Compares lambda against mu in dominance order. `below` means lambda is
/// strictly dominated by mu. Throws std::invalid_argument on a size mismatch.
[[nodiscard]] Dominance dominance_leq(const Partition& lambda, const Partition& mu);

/// z_alpha = prod_i i^{m_i} m_i!; the S_n class of type alpha has n!/z_alpha elements.
[[nodiscard]] mpz_class centralizer_order(const Partition& alpha);

[[nodiscard]] mpz_class factorial(int n);

/// Coefficients of prod_{i=1}^k (1 + x^i): entry m counts strict partitions of m
/// with largest part at most k.
[[nodiscard]] std::vector<mpz_class> strict_bounded_counts(int k);

} // namespace saxllab
