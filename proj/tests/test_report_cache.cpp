#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "saxllab/cache.hpp"
#include "saxllab/report.hpp"

using namespace saxllab;
namespace fs = std::filesystem;

namespace {

Report sample()
{
    Report r;
    r.columns = {"character", "class", "value"};
    r.add_row({"[4,3,2,1]", "(7,3)", "1"});
    r.add_row({"<6>+", "(6)", "-1*i*sqrt(3)"});
    r.notes.push_back("two rows");
    return r;
}

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / name) { fs::remove(path); }
    ~TempFile() { fs::remove(path); }
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

} // namespace

TEST_CASE("report rendering")
{
    const Report r = sample();
    CHECK(render(r, Format::tsv)
          == "character\tclass\tvalue\n[4,3,2,1]\t(7,3)\t1\n<6>+\t(6)\t-1*i*sqrt(3)\n# two rows\n");

    const std::string md = render(r, Format::markdown);
    CHECK(md.find("| character | class | value |") == 0);
    CHECK(md.find("|---|---|---|") != std::string::npos);
    CHECK(md.find("- two rows") != std::string::npos);

    const Report back = report_from_json(render(r, Format::json));
    CHECK(back.columns == r.columns);
    CHECK(back.rows == r.rows);
    CHECK(back.notes == r.notes);
    CHECK(render(back, Format::tsv) == render(r, Format::tsv));

    Report bad;
    bad.columns = {"a", "b"};
    CHECK_THROWS_AS(bad.add_row({"1"}), std::logic_error);

    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("markdown") == Format::markdown);
    CHECK_THROWS_AS(parse_format("csv"), std::invalid_argument);

    Report pipes;
    pipes.columns = {"x"};
    pipes.add_row({"a|b"});
    CHECK(render(pipes, Format::markdown).find("a\\|b") != std::string::npos);
}

TEST_CASE("memo store")
{
    CharMemo m;
    const MemoKey k = memo_key(std::vector<int>{2, 1}, std::vector<int>{3});
    CHECK_FALSE(m.find(k));
    m.insert(k, -1);
    m.insert(k, -1); // identical value: fine
    CHECK(*m.find(k) == -1);
    CHECK_THROWS_AS(m.insert(k, 2), std::logic_error);
    CHECK_FALSE(m.try_insert(k, 2));
    CHECK(*m.find(k) == -1);
    CHECK(m.size() == 1);
    auto [l, a] = split_memo_key(k);
    CHECK(l == Partition{2, 1});
    CHECK(a == Partition{3});
}

TEST_CASE("cache round trip")
{
    TempFile f("saxllab_test_cache_round_trip");
    CharMemo mn;
    SpinMemo morris;
    (void)mn_value(Partition{4, 3, 2, 1}, Partition{7, 3}, mn);
    (void)morris_value(Partition{5, 3, 1}, Partition{3, 3, 3}, morris);
    MemoCache out(f.path, mn, morris);
    const std::size_t written = out.flush();
    CHECK(written == mn.size() + morris.size());
    CHECK(out.flush() == 0); // nothing new
    CHECK(slurp(f.path).rfind(std::string(MemoCache::header) + "\n", 0) == 0);

    CharMemo mn2;
    SpinMemo morris2;
    MemoCache in(f.path, mn2, morris2);
    std::ostringstream warn;
    const auto stats = in.load(warn);
    CHECK(warn.str().empty());
    CHECK(stats.loaded == written);
    CHECK(mn2.size() == mn.size());
    CHECK(morris2.size() == morris.size());
    CHECK(mn_value(Partition{4, 3, 2, 1}, Partition{7, 3}, mn2) == 1);
    CHECK(in.flush() == 0);
}

TEST_CASE("cache rejects bad input")
{
    TempFile f("saxllab_test_cache_bad");
    write(f.path, std::string(MemoCache::header) + "\n"
                      + "not json\n"
                      + R"({"t":"mn","l":[2,1],"a":[2],"v":"0"})" "\n"      // sizes differ
                      + R"({"t":"morris","l":[2,2],"a":[3,1],"v":"1"})" "\n" // not strict
                      + R"({"t":"mn","l":[2,1],"a":[3],"v":"x"})" "\n"
                      + R"({"t":"mn","l":[2,1],"a":[1,1,1],"v":"2"})" "\n"
                      + R"({"t":"mn","l":[3],"a":[3],"v":"1"})" "\n"
                      + R"({"t":"mn","l":[3],"a":[3],"v":"5"})" "\n"         // conflicting duplicate
                      + R"({"t":"mn","l":[2,1],"a":[3],"v":"-1"})" "\n");
    CharMemo mn;
    SpinMemo morris;
    MemoCache c(f.path, mn, morris);
    std::ostringstream warn;
    const auto stats = c.load(warn);
    CHECK(stats.skipped == 4);
    CHECK(stats.conflicts == 1);
    CHECK(stats.loaded == 2);
    CHECK_FALSE(warn.str().empty());
    CHECK_FALSE(mn.find(memo_key(std::vector<int>{3}, std::vector<int>{3})));
    CHECK(*mn.find(memo_key(std::vector<int>{2, 1}, std::vector<int>{3})) == -1);
}

TEST_CASE("a cache with the wrong header is ignored")
{
    TempFile f("saxllab_test_cache_header");
    write(f.path, "something else\n" R"({"t":"mn","l":[3],"a":[3],"v":"1"})" "\n");
    CharMemo mn;
    SpinMemo morris;
    MemoCache c(f.path, mn, morris);
    std::ostringstream warn;
    CHECK(c.load(warn).loaded == 0);
    CHECK(warn.str().find("not a saxllab cache") != std::string::npos);
    CHECK(mn.size() == 0);
}
