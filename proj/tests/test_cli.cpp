#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "saxllab/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stdout only; stderr carries timing and warnings
Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " " + SAXLLAB_CLI + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string last_field(const std::string& out)
{
    // second line, last tab-separated cell
    const auto first = out.find('\n');
    const auto end = out.find('\n', first + 1);
    const std::string line = out.substr(first + 1, end - first - 1);
    return line.substr(line.rfind('\t') + 1);
}

} // namespace

TEST_CASE("charval")
{
    Run r = run("charval --lambda 4,3,2,1 --alpha 7,3");
    CHECK(r.code == 0);
    CHECK(last_field(r.out) == "1");
    CHECK(last_field(run("charval --lambda 6 --alpha 6 --spin").out) == "-1*i*sqrt(3)");
    CHECK(last_field(run("charval --lambda 3,1 --alpha 3,1 --spin").out) == "-1");
}

TEST_CASE("scans and d_k")
{
    Run s = run("scan saxl --k 5 --golden");
    CHECK(s.code == 0);
    CHECK(s.out.find("5\t15\t176\t45\t114\t131\t74.4") != std::string::npos);
    CHECK(s.out.find("matches the published row") != std::string::npos);

    Run spin = run("scan spin --k 1..5 --golden");
    CHECK(spin.code == 0);
    CHECK(spin.out.find("MISMATCH") == std::string::npos);

    Run d = run("dk --k 9 --check-theorem");
    CHECK(d.code == 0);
    CHECK(d.out.find("19,22") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run("charval --lambda 3,x --alpha 3").code == 2);
    CHECK(run("charval --lambda 3 --alpha 2,2").code == 2);
    CHECK(run("nosuchcommand").code == 2);
    CHECK(run("saxl --k 6").code == 2); // needs --allow-long
    CHECK(run("--format yaml dk --k 4").code == 2);
    CHECK(run("--max-seconds 0.000001 scan saxl --k 11").code == 3);
}

TEST_CASE("the cache does not change results")
{
    const fs::path cache = fs::temp_directory_path() / "saxllab_test_cli_cache";
    fs::remove(cache);
    const std::string cmd = "scan saxl --k 2..6 --golden";
    const Run plain = run(cmd);
    const Run cold = run("--cache " + cache.string() + " " + cmd);
    const Run warm = run("--cache " + cache.string() + " " + cmd);
    const Run env = run(cmd, "SAXLLAB_CACHE=" + cache.string());
    CHECK(plain.code == 0);
    CHECK(cold.out == plain.out);
    CHECK(warm.out == plain.out);
    CHECK(env.out == plain.out);

    std::ifstream in(cache);
    std::string header;
    std::getline(in, header);
    CHECK(header == "saxllab-cache v1");
    fs::remove(cache);
}

TEST_CASE("formats agree")
{
    const std::string cmd = "scan spin --k 2..5";
    const Run tsv = run(cmd);
    const Run json = run("--format json " + cmd);
    CHECK(json.code == 0);
    CHECK(saxllab::render(saxllab::report_from_json(json.out), saxllab::Format::tsv) == tsv.out);
    const Run md = run("--format markdown " + cmd);
    CHECK(md.out.rfind("| ", 0) == 0);
}

TEST_CASE("verification suites")
{
    CHECK(run("verify --suite oracle --max-n 6").code == 0);
    CHECK(run("verify --suite paper --limit 4").code == 0);
    Run dec = run("decompose --mixed 3,3,3 --with '<9>'");
    CHECK(dec.code == 0);
    CHECK(dec.out.find("<5,3,1>") != std::string::npos);
}
