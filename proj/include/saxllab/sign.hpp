#pragma once

namespace saxllab {

/// Selects one member of an associate / conjugate pair of characters or classes.
enum class Sign { plus, minus };

constexpr Sign flip(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr int to_int(Sign s) noexcept { return s == Sign::plus ? 1 : -1; }
constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

} // namespace saxllab
