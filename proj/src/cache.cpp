#include "saxllab/cache.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace saxllab {

namespace {

std::string disk_key(char tag, const MemoKey& key)
{
    std::string out(1, tag);
    for (char16_t c : key) {
        out += static_cast<char>(c & 0xff);
        out += static_cast<char>(c >> 8);
    }
    return out;
}

std::vector<int> parts_of(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("parts must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument("parts must be integers");
        int p = v.get<int>();
        if (p <= 0 || p > 0xffff)
            throw std::invalid_argument("part out of range");
        out.push_back(p);
    }
    return out;
}

struct Entry {
    char tag;
    MemoKey key;
    mpz_class value;
};

Entry parse_line(const std::string& line)
{
    nlohmann::json j = nlohmann::json::parse(line);
    const std::string t = j.at("t").get<std::string>();
    if (t != "mn" && t != "morris")
        throw std::invalid_argument("unknown record type '" + t + "'");
    Partition lambda(parts_of(j.at("l")));
    Partition alpha(parts_of(j.at("a")));
    if (alpha.empty() || lambda.size() != alpha.size())
        throw std::invalid_argument("shape and class sizes differ");
    if (t == "morris" && (!lambda.has_distinct_parts() || !alpha.has_odd_parts_only()))
        throw std::invalid_argument("morris record outside D(n) x O(n)");
    mpz_class value;
    if (value.set_str(j.at("v").get<std::string>(), 10) != 0)
        throw std::invalid_argument("value is not a decimal integer");
    return {t == "mn" ? 'm' : 's', memo_key(lambda.parts(), alpha.parts()), value};
}

} // namespace

MemoCache::MemoCache(std::filesystem::path path, CharMemo& mn, SpinMemo& morris)
    : path_(std::move(path)), mn_(mn), morris_(morris)
{
}

MemoCache::LoadStats MemoCache::load(std::ostream& warn)
{
    LoadStats stats;
    std::ifstream in(path_);
    if (!in)
        return stats;
    std::string line;
    if (!std::getline(in, line) || line != header) {
        warn << "warning: " << path_.string() << " is not a saxllab cache; ignoring it\n";
        return stats;
    }
    std::map<std::string, Entry> entries;
    std::unordered_set<std::string> conflicted;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        Entry e;
        try {
            e = parse_line(line);
        } catch (const std::exception& ex) {
            warn << "warning: " << path_.string() << ":" << line_no << ": skipped (" << ex.what() << ")\n";
            ++stats.skipped;
            continue;
        }
        const std::string dk = disk_key(e.tag, e.key);
        auto [it, inserted] = entries.try_emplace(dk, e);
        if (!inserted && it->second.value != e.value)
            conflicted.insert(dk);
    }
    for (const auto& dk : conflicted) {
        warn << "warning: " << path_.string() << ": dropped a key recorded with two different values\n";
        entries.erase(dk);
        ++stats.conflicts;
    }
    for (const auto& [dk, e] : entries) {
        bool ok = e.tag == 'm' ? mn_.try_insert(e.key, e.value) : morris_.try_insert(e.key, e.value);
        if (!ok) {
            warn << "warning: " << path_.string() << ": cached value disagrees with a computed one; ignored\n";
            ++stats.conflicts;
            continue;
        }
        on_disk_.insert(dk);
        ++stats.loaded;
    }
    on_disk_.insert(conflicted.begin(), conflicted.end());
    return stats;
}

std::size_t MemoCache::flush()
{
    const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot write cache file " + path_.string());
    if (fresh)
        out << header << '\n';
    std::size_t written = 0;
    auto dump = [&](char tag, const char* name, const auto& store) {
        for (const auto& [key, value] : store.snapshot()) {
            std::string dk = disk_key(tag, key);
            if (on_disk_.count(dk))
                continue;
            auto [lambda, alpha] = split_memo_key(key);
            nlohmann::ordered_json j;
            j["t"] = name;
            j["l"] = lambda.vec();
            j["a"] = alpha.vec();
            j["v"] = value.get_str();
            out << j.dump() << '\n';
            on_disk_.insert(std::move(dk));
            ++written;
        }
    };
    dump('m', "mn", mn_);
    dump('s', "morris", morris_);
    if (!out)
        throw std::runtime_error("failed writing cache file " + path_.string());
    return written;
}

} // namespace saxllab
