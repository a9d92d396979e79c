#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_set>

#include "saxllab/ordinary_chars.hpp"
#include "saxllab/spin_chars.hpp"

namespace saxllab {

/// On-disk memo of integer recursion results.
///
/// Line 1 is "saxllab-cache v1"; every further line is a JSON object
/// {"t": "mn"|"morris", "l": [...], "a": [...], "v": "<decimal>"}. The file is
/// only ever appended to. Lines that do not parse or describe an impossible
/// subproblem are skipped with a warning, and keys that occur with two
/// different values are dropped entirely.
class MemoCache {
public:
    static constexpr const char* header = "saxllab-cache v1";

    struct LoadStats {
        std::size_t loaded = 0;
        std::size_t skipped = 0;
        std::size_t conflicts = 0;
    };

    MemoCache(std::filesystem::path path, CharMemo& mn, SpinMemo& morris);

    /// Reads the file (if present) into the memo stores; warnings go to `warn`.
    LoadStats load(std::ostream& warn);

    /// Appends every memo entry not yet on disk; returns the number written.
    std::size_t flush();

    [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
    CharMemo& mn_;
    SpinMemo& morris_;
    std::unordered_set<std::string> on_disk_; // "t" + memo key
};

} // namespace saxllab
