// Acceptance runner: one PASS/FAIL line per criterion, details indented below.
// Pass --long to add the k = 9..11 Saxl rows and the k = 7 spin row as info.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "saxllab/suites.hpp"

using namespace saxllab;
using checks::Results;
using checks::Status;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void append(Results& to, const Results& from)
{
    to.insert(to.end(), from.begin(), from.end());
}

bool report(int number, const char* description, const std::function<Results()>& run)
{
    const auto t0 = Clock::now();
    Results results;
    try {
        results = run();
    } catch (const std::exception& e) {
        results.push_back({"runner", Status::fail, std::string("exception: ") + e.what()});
    }
    const bool ok = !results.empty() && checks::passed(results);
    std::printf("criterion %d: %s %s (%zu checks, %.1f s)\n", number, ok ? "PASS" : "FAIL", description,
                results.size(), since(t0));
    for (const auto& r : results)
        if (r.status != Status::pass)
            std::printf("    %s %s: %s\n", std::string(checks::status_name(r.status)).c_str(), r.name.c_str(),
                        r.detail.c_str());
    std::fflush(stdout);
    return ok;
}

// each golden row on its own clock, with the ten-minute budget as a hard limit
Results timed_golden_saxl(int from, int to)
{
    Results out;
    for (int k = from; k <= to; ++k) {
        Limits limits;
        limits.max_seconds = 600;
        const auto t0 = Clock::now();
        Results r = checks::golden_saxl(k, k, limits);
        const double s = since(t0);
        if (s > 600)
            out.push_back({"saxl k=" + std::to_string(k) + " time", Status::fail, "over ten minutes"});
        append(out, r);
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    const bool long_runs = argc > 1 && std::strcmp(argv[1], "--long") == 0;
    int failed = 0;
    auto tally = [&failed](bool ok) { failed += !ok; };

    tally(report(1, "Saxl nonvanishing table, k = 2..8", [] { return timed_golden_saxl(2, 8); }));
    tally(report(2, "spin nonvanishing table, k = 1..6, k = 8 transposed", [] {
        Results r = checks::golden_spin(1, 6);
        for (auto x : checks::golden_spin(8, 8)) {
            if (x.status == Status::pass)
                x.status = Status::info;
            r.push_back(x);
        }
        return r;
    }));
    tally(report(3, "strict partitions with bounded parts: equalities and invariants", [] {
        Results r = checks::dk_theorem(25, 40);
        append(r, checks::two_part_ties(8));
        return r;
    }));
    tally(report(4, "product identities", [] { return checks::identities(9, 5, 3); }));
    tally(report(5, "Kronecker squares of rho_k (k <= 5) and tau_k (k <= 4)", [] { return checks::saxl(5, 4); }));
    tally(report(6, "multiplicity difference property, n <= 9", [] { return checks::spin_main(9); }));
    tally(report(7, "orthogonality n <= 9, oracle agreement n <= 7", [] {
        Results r = checks::orthogonality(9);
        append(r, checks::oracle(7));
        return r;
    }));
    tally(report(8, "constituent criteria, detecting pairs, parity, dominance", [] {
        return checks::criteria(5, 4, 8, 5, 9);
    }));

    if (long_runs) {
        std::printf("long runs (not gated):\n");
        auto demote = [](Results r) {
            for (auto& x : r)
                if (x.status == Status::fail)
                    x.status = Status::info;
            return r;
        };
        report(0, "Saxl table k = 9..11", [&] { return demote(checks::golden_saxl(9, 11)); });
        report(0, "spin table k = 7", [&] { return demote(checks::golden_spin(7, 7)); });
        report(0, "spin-square witnesses n <= 9", [] { return checks::conjectures(9); });
    }

    std::printf("%s: %d of 8 criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
