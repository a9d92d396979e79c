#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "saxllab/exact_value.hpp"
#include "saxllab/partition.hpp"
#include "saxllab/sign.hpp"

namespace saxllab {

enum class GroupKind { symmetric, double_cover, alternating, alternating_double_cover };

/// "S", "Stilde", "A", "Atilde".
std::string_view group_name(GroupKind kind);
GroupKind parse_group_kind(std::string_view name);

/// A conjugacy class, identified by its cycle type plus the split markers.
///
/// z_sign is +1 for C^+ and -1 for C^- = z C^+ when the preimage of the type
/// splits under the central element; an_sign picks one of the two A_n classes
/// of a split type (all parts odd and distinct). Both are 0 when unused.
struct ClassLabel {
    Partition type;
    int z_sign = 0;
    int an_sign = 0;

    bool operator==(const ClassLabel&) const = default;
    /// "5,3,1", with ":a+"/":a-" and ":z+"/":z-" suffixes when split.
    [[nodiscard]] std::string str() const;
};

struct ClassInfo {
    ClassLabel label;
    mpz_class size;
};

/// One of S_n, S~_n, A_n, A~_n with its class list and class sizes.
///
/// Classes are listed in reverse-lexicographic order of cycle type; within a
/// type the A_n "+" class precedes "-", and C^+ precedes C^-.
class GroupContext {
public:
    /// Shared, immutable context; cached per (kind, n). Alternating groups need n >= 2.
    static std::shared_ptr<const GroupContext> get(GroupKind kind, int n);

    [[nodiscard]] GroupKind kind() const noexcept { return kind_; }
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const mpz_class& order() const noexcept { return order_; }
    [[nodiscard]] const std::vector<ClassInfo>& classes() const noexcept { return classes_; }
    [[nodiscard]] std::size_t class_count() const noexcept { return classes_.size(); }
    [[nodiscard]] const ClassLabel& label(std::size_t i) const { return classes_.at(i).label; }
    [[nodiscard]] std::optional<std::size_t> index_of(const ClassLabel& label) const;
    [[nodiscard]] std::string name() const;

    GroupContext(GroupKind kind, int n);

private:
    GroupKind kind_;
    int n_;
    mpz_class order_;
    std::vector<ClassInfo> classes_;
};

using ContextPtr = std::shared_ptr<const GroupContext>;

/// Does the S~_n preimage of cycle type alpha split into C^+ and C^-?
bool splits_in_double_cover(const Partition& alpha);
/// Does the A_n class of (even) cycle type alpha split into two classes?
bool splits_in_alternating(const Partition& alpha);
/// Does the A~_n preimage of an A_n class of type alpha split?
bool splits_in_alternating_double_cover(const Partition& alpha);

enum class CharFamily { ordinary, spin, alternating, alternating_spin };

/// Label of a character: [lambda], <lambda> / <lambda>+-, {mu} / {mu}+-,
/// <<lambda>> / <<lambda>>+-.
struct CharLabel {
    CharFamily family = CharFamily::ordinary;
    Partition shape;
    std::optional<Sign> sign;

    bool operator==(const CharLabel&) const = default;
    [[nodiscard]] std::string str() const;
    static CharLabel parse(std::string_view text);

    static CharLabel ordinary(Partition shape);
    /// Spin character of S~_n; `sign` is used only when shape is in D-.
    static CharLabel spin(Partition shape, Sign sign = Sign::plus);
    /// A_n character; `sign` is used only when shape is self-conjugate.
    static CharLabel alternating(Partition shape, Sign sign = Sign::plus);
    /// Spin character of A~_n; `sign` is used only when shape is in D+.
    static CharLabel alternating_spin(Partition shape, Sign sign = Sign::plus);
};

/// Values of a class function, aligned with the class list of its context.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(ContextPtr ctx, std::vector<ExactValue> values);
    static ClassFunction zero(ContextPtr ctx);

    [[nodiscard]] const ContextPtr& context() const noexcept { return ctx_; }
    [[nodiscard]] const std::vector<ExactValue>& values() const noexcept { return values_; }
    [[nodiscard]] const ExactValue& operator[](std::size_t i) const { return values_.at(i); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator-=(const ClassFunction& other);
    ClassFunction& operator*=(const mpq_class& scalar);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator*(ClassFunction a, const mpq_class& s) { return a *= s; }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);

    [[nodiscard]] ClassFunction conj() const;

private:
    void require_same_context(const ClassFunction& other) const;

    ContextPtr ctx_;
    std::vector<ExactValue> values_;
};

/// Irreducible characters of a group, one row per label.
struct CharacterTable {
    ContextPtr ctx;
    std::vector<CharLabel> labels;
    std::vector<ClassFunction> rows;
};

} // namespace saxllab
