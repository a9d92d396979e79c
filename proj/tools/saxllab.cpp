// saxllab: command-line driver for the character computations and checks.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 a resource limit stopped a sweep.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "saxllab/cache.hpp"
#include "saxllab/character_table.hpp"
#include "saxllab/ordinary_chars.hpp"
#include "saxllab/products.hpp"
#include "saxllab/report.hpp"
#include "saxllab/scans.hpp"
#include "saxllab/spin_chars.hpp"
#include "saxllab/suites.hpp"

using namespace saxllab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_breach = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    Report report;
    int code = exit_ok;

    void raise(int c)
    {
        // a breach outranks a mismatch: the numbers shown are partial
        if (c == exit_breach || code == exit_ok)
            code = c;
    }
};

struct Range {
    int from = 0;
    int to = 0;
};

// "K" or "A..B"
Range parse_range(const std::string& text, int minimum, const char* what)
{
    Range r;
    try {
        auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            r.from = r.to = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
        } else {
            r.from = std::stoi(text.substr(0, dots), &used);
            if (used != dots)
                throw std::invalid_argument(text);
            const std::string rest = text.substr(dots + 2);
            r.to = std::stoi(rest, &used);
            if (used != rest.size())
                throw std::invalid_argument(text);
        }
    } catch (const std::logic_error&) {
        throw UsageError(std::string("malformed ") + what + " '" + text + "' (expected N or A..B)");
    }
    if (r.from < minimum || r.to < r.from)
        throw UsageError(std::string(what) + " must satisfy " + std::to_string(minimum) + " <= A <= B");
    return r;
}

Sign parse_sign(const std::string& s)
{
    if (s == "+")
        return Sign::plus;
    if (s == "-")
        return Sign::minus;
    throw UsageError("sign must be + or -, got '" + s + "'");
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

std::string join_partitions(const std::vector<Partition>& v)
{
    std::string s;
    for (const auto& p : v)
        s += (s.empty() ? "" : " ") + p.str();
    return s;
}

// --- options --------------------------------------------------------------

struct Global {
    unsigned threads = 0;
    std::optional<double> max_seconds;
    std::optional<std::uint64_t> max_memory;
    std::string cache;
    std::string format = "tsv";

    [[nodiscard]] Limits limits() const { return {threads, max_seconds, max_memory}; }
};

struct Options {
    // charval
    std::string lambda, alpha, sign = "+", class_sign = "+";
    bool spin = false;
    // table
    std::string group;
    int n = 0;
    // scan, dk, saxl, spin-saxl, parity, conjecture
    std::string kind, k, n_range, target = "d-plus";
    bool golden = false, dominance = false, check_theorem = false, coefficients = false, allow_long = false;
    // decompose
    std::vector<std::string> products;
    std::string square, other_sign = "+", mixed, with;
    // verify
    std::string suite = "paper";
    int limit = 5;
    int max_n = 9;
};

// --- commands -----------------------------------------------------------------

Outcome cmd_charval(const Options& o)
{
    const Partition lambda = Partition::parse(o.lambda);
    const Partition alpha = Partition::parse(o.alpha);
    if (lambda.empty() || lambda.size() != alpha.size())
        throw UsageError("--lambda and --alpha must be nonempty partitions of the same n");
    Outcome out;
    out.report.columns = {"character", "class", "value"};
    if (!o.spin) {
        out.report.add_row({CharLabel::ordinary(lambda).str(), alpha.str(), ExactValue(mn_value(lambda, alpha)).str()});
        return out;
    }
    if (!in_distinct(lambda))
        throw UsageError("spin characters are labelled by partitions with distinct parts");
    const CharLabel label = CharLabel::spin(lambda, parse_sign(o.sign));
    const ClassLabel cls{alpha, splits_in_double_cover(alpha) ? to_int(parse_sign(o.class_sign)) : 0, 0};
    out.report.add_row({label.str(), cls.str(), spin_value(label, cls).str()});
    return out;
}

Outcome cmd_table(const Options& o)
{
    GroupKind kind = parse_group_kind(o.group);
    const bool alt = kind == GroupKind::alternating || kind == GroupKind::alternating_double_cover;
    if (o.n < (alt ? 2 : 1))
        throw UsageError("--n is too small for " + o.group);
    auto ctx = GroupContext::get(kind, o.n);
    CharacterTable t = character_table(ctx);
    Outcome out;
    out.report.columns.push_back("character");
    for (std::size_t i = 0; i < ctx->class_count(); ++i)
        out.report.columns.push_back(ctx->label(i).str());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        std::vector<std::string> row{t.labels[r].str()};
        for (const auto& v : t.rows[r].values())
            row.push_back(v.str());
        out.report.add_row(std::move(row));
    }
    std::vector<std::string> sizes{"class size"};
    for (const auto& c : ctx->classes())
        sizes.push_back(c.size.get_str());
    out.report.add_row(std::move(sizes));
    out.report.notes.push_back(ctx->name() + ", order " + ctx->order().get_str());
    return out;
}

template <class Row>
void golden_note(Outcome& out, const Row& row, bool golden)
{
    const std::string k = "k=" + std::to_string(row.k);
    if (!row.status.complete) {
        out.report.notes.push_back(k + ": incomplete, " + row.status.reason);
        out.raise(exit_breach);
        return;
    }
    if (!golden)
        return;
    GoldenComparison g = compare_golden(row);
    if (!g.available)
        out.report.notes.push_back(k + ": no published row");
    else if (g.transposed)
        out.report.notes.push_back(k + ": " + g.detail);
    else if (g.matches)
        out.report.notes.push_back(k + ": matches the published row");
    else {
        out.report.notes.push_back(k + ": MISMATCH " + g.detail);
        out.raise(exit_mismatch);
    }
}

Outcome cmd_scan(const Options& o, const Global& g)
{
    Outcome out;
    if (o.kind == "saxl") {
        Range r = parse_range(o.k, 2, "--k");
        out.report.columns = {"k", "n", "p(n)", "nonzero_h", "nonzero_rho", "union", "percent"};
        if (o.dominance)
            out.report.columns.insert(out.report.columns.end(), {"comparable", "comparable_percent"});
        for (int k = r.from; k <= r.to; ++k) {
            SaxlRow row = saxl_scan(k, o.dominance, g.limits());
            std::vector<std::string> cells{std::to_string(row.k), std::to_string(row.n), row.p.get_str(),
                                           u64(row.nonzero_h), u64(row.nonzero_rho), u64(row.nonzero_union),
                                           row.percent()};
            if (o.dominance) {
                const std::uint64_t c = row.comparable.value_or(0);
                cells.push_back(u64(c));
                cells.push_back(percent_one_decimal(mpz_class(static_cast<unsigned long>(c)), row.p));
            }
            out.report.add_row(std::move(cells));
            golden_note(out, row, o.golden);
        }
    } else if (o.kind == "spin") {
        Range r = parse_range(o.k, 1, "--k");
        out.report.columns = {"k", "n", "p(n)", "nonzero", "percent"};
        for (int k = r.from; k <= r.to; ++k) {
            SpinRow row = spin_scan(k, g.limits());
            out.report.add_row({std::to_string(row.k), std::to_string(row.n), row.p.get_str(), u64(row.nonzero),
                                row.percent()});
            golden_note(out, row, o.golden);
        }
    } else {
        throw UsageError("scan expects 'saxl' or 'spin'");
    }
    return out;
}

std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (int x : v)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

Outcome cmd_dk(const Options& o)
{
    Range r = parse_range(o.k, 1, "--k");
    Outcome out;
    if (o.coefficients) {
        out.report.columns = {"k", "m", "d_k(m)"};
        for (int k = r.from; k <= r.to; ++k) {
            DkTable t = dk_table(k);
            for (std::size_t m = 0; m < t.d.size(); ++m)
                out.report.add_row({std::to_string(k), std::to_string(m), t.d[m].get_str()});
        }
    } else {
        out.report.columns = {"k", "middle", "equalities", "exceptional"};
        for (int k = r.from; k <= r.to; ++k) {
            const auto eq = k >= 2 ? unimodality_report(k) : std::vector<int>{};
            const auto ex = k >= 2 ? exceptional_equalities(k) : std::vector<int>{};
            out.report.add_row({std::to_string(k), std::to_string(k * (k + 1) / 4), join_ints(eq), join_ints(ex)});
            if (!o.check_theorem)
                continue;
            const std::string kk = "k=" + std::to_string(k);
            const auto& golden = golden_exceptional();
            if (auto it = golden.find(k); it != golden.end()) {
                const bool ok = it->second == ex;
                out.report.notes.push_back(kk + (ok ? ": matches the published list" : ": MISMATCH, published {"
                                                                                          + join_ints(it->second) + "}"));
                if (!ok)
                    out.raise(exit_mismatch);
            } else if (k >= 12) {
                const bool ok = eq == std::vector<int>{1, 2, 4};
                out.report.notes.push_back(kk + (ok ? ": strictly increasing for 5 <= m <= k(k+1)/4"
                                                    : ": MISMATCH, unexpected equalities"));
                if (!ok)
                    out.raise(exit_mismatch);
            } else {
                out.report.notes.push_back(kk + ": no published list");
            }
        }
    }
    return out;
}

Outcome show_decomposition(const Decomposition& d)
{
    Outcome out;
    out.report.columns = {"character", "multiplicity"};
    for (std::size_t i = 0; i < d.labels.size(); ++i)
        out.report.add_row({d.labels[i].str(), d.multiplicities[i].get_str()});
    out.report.notes.push_back("in " + d.ctx->name());
    return out;
}

Outcome cmd_decompose(const Options& o)
{
    const int modes = !o.products.empty() + !o.square.empty() + !o.mixed.empty();
    if (modes != 1)
        throw UsageError("decompose takes exactly one of --product, --square, --mixed");
    if (!o.products.empty()) {
        std::vector<CharLabel> labels;
        for (const auto& p : o.products)
            labels.push_back(CharLabel::parse(p));
        return show_decomposition(decompose_product(labels));
    }
    if (!o.square.empty()) {
        const Partition lambda = Partition::parse(o.square);
        if (!in_distinct(lambda))
            throw UsageError("--square takes a partition with distinct parts");
        return show_decomposition(decompose_spin_square(lambda, parse_sign(o.sign), parse_sign(o.other_sign)));
    }
    if (o.with.empty())
        throw UsageError("--mixed needs --with <spin character>");
    const CharLabel spin = CharLabel::parse(o.with);
    if (spin.family != CharFamily::spin)
        throw UsageError("--with takes a spin character such as <3,1>");
    return show_decomposition(decompose_mixed(Partition::parse(o.mixed), spin));
}

Outcome cmd_verify(const Options& o, const Global& g)
{
    if (o.limit < 2 || o.max_n < 2)
        throw UsageError("--limit and --max-n must be at least 2");
    const Limits limits = g.limits();
    const int rho_k = o.allow_long ? o.limit : std::min(o.limit, 5);
    const int tau_k = o.allow_long ? o.limit : std::min(o.limit, 4);
    checks::Results results;
    auto add = [&results](checks::Results r) { results.insert(results.end(), r.begin(), r.end()); };
    if (o.suite == "paper" || o.suite == "all") {
        add(checks::dk_theorem());
        add(checks::two_part_ties(std::min(o.limit + 3, 8)));
        add(checks::identities(o.max_n, std::min(o.limit, 5), std::min(o.limit, 3)));
        add(checks::saxl(rho_k, tau_k, limits));
        add(checks::spin_main(o.max_n));
        add(checks::criteria(rho_k, tau_k, std::min(o.max_n, 8), std::min(o.limit, 5), o.limit >= 5 ? 9 : 0,
                             limits));
    }
    if (o.suite == "tables" || o.suite == "all") {
        add(checks::golden_saxl(2, std::min(o.limit + 3, 8), limits));
        add(checks::golden_spin(1, std::min(o.limit + 1, 6), limits));
    }
    if (o.suite == "orthogonality" || o.suite == "all")
        add(checks::orthogonality(o.max_n));
    if (o.suite == "oracle" || o.suite == "all")
        add(checks::oracle(std::min(o.max_n, 7)));
    if (results.empty())
        throw UsageError("unknown suite '" + o.suite + "' (expected paper, tables, orthogonality, oracle, all)");

    Outcome out;
    out.report.columns = {"check", "status", "detail"};
    std::size_t fails = 0;
    for (const auto& r : results) {
        out.report.add_row({r.name, std::string(checks::status_name(r.status)), r.detail});
        fails += r.status == checks::Status::fail;
    }
    out.report.notes.push_back(std::to_string(results.size()) + " checks, " + std::to_string(fails) + " failed");
    if (fails)
        out.raise(exit_mismatch);
    if (checks::limit_breached(results))
        out.raise(exit_breach);
    return out;
}

void require_allowed(int value, int cap, bool allow_long, const char* what)
{
    if (value > cap && !allow_long)
        throw UsageError(std::string(what) + " above " + std::to_string(cap) + " is a long run; pass --allow-long");
}

Outcome cmd_saxl(const Options& o, const Global& g)
{
    Range r = parse_range(o.k, 2, "--k");
    require_allowed(r.to, 5, o.allow_long, "--k");
    Outcome out;
    out.report.columns = {"k", "n", "checked", "missing", "criterion_violations", "verdict"};
    for (int k = r.from; k <= r.to; ++k) {
        SaxlVerdict v = verify_saxl(k, g.limits());
        out.report.add_row({std::to_string(k), std::to_string(k * (k + 1) / 2), std::to_string(v.checked),
                            join_partitions(v.missing), join_partitions(v.criterion_violations),
                            v.verified() ? "verified" : "not verified"});
        if (!v.status.complete) {
            out.report.notes.push_back("k=" + std::to_string(k) + ": incomplete, " + v.status.reason);
            out.raise(exit_breach);
        } else if (!v.verified()) {
            out.raise(exit_mismatch);
        }
    }
    return out;
}

Outcome cmd_spin_saxl(const Options& o)
{
    Range r = parse_range(o.k, 1, "--k");
    require_allowed(r.to, 4, o.allow_long, "--k");
    Outcome out;
    out.report.columns = {"k", "n", "checked", "missing", "all_present", "criterion"};
    for (int k = r.from; k <= r.to; ++k) {
        SpinSaxlVerdict v = verify_spin_saxl(k);
        out.report.add_row({std::to_string(k), std::to_string(k * k), std::to_string(v.checked),
                            join_partitions(v.missing), v.all_present() ? "yes" : "no",
                            v.criterion_holds() ? "holds" : "fails"});
        if (!v.all_present() || !v.criterion_holds())
            out.raise(exit_mismatch);
    }
    return out;
}

Outcome cmd_conjecture(const Options& o)
{
    Range r = parse_range(o.n_range, 4, "--n");
    require_allowed(r.to, 12, o.allow_long, "--n");
    ConjectureTarget target;
    if (o.target == "d-plus")
        target = ConjectureTarget::d_plus_square;
    else if (o.target == "atilde")
        target = ConjectureTarget::atilde_spin_square;
    else
        throw UsageError("--target must be d-plus or atilde");
    Outcome out;
    out.report.columns = {"n", "witnesses", "labels"};
    for (int n = r.from; n <= r.to; ++n) {
        auto w = conjecture_sweep(n, target);
        std::string labels;
        for (const auto& l : w)
            labels += (labels.empty() ? "" : " ") + l.str();
        out.report.add_row({std::to_string(n), std::to_string(w.size()), labels});
    }
    out.report.notes.push_back("witness lists are reported, not asserted");
    return out;
}

Outcome cmd_parity(const Options& o, const Global& g)
{
    Range r = parse_range(o.k, 2, "--k");
    Outcome out;
    out.report.columns = {"k", "alpha", "checked", "failures"};
    for (int k = r.from; k <= r.to; ++k) {
        ParityVerdict v = parity_check(k, g.limits());
        out.report.add_row({std::to_string(k), v.alpha.str(), std::to_string(v.checked), join_partitions(v.failures)});
        if (!v.status.complete) {
            out.report.notes.push_back("k=" + std::to_string(k) + ": incomplete, " + v.status.reason);
            out.raise(exit_breach);
        } else if (!v.failures.empty()) {
            out.raise(exit_mismatch);
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact character values and Kronecker products for S_n, A_n and their double covers"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    Options o;

    app.add_option("--threads", g.threads, "worker threads for sweeps (0: all cores)");
    app.add_option("--max-seconds", g.max_seconds, "stop sweeps after this many seconds");
    app.add_option("--max-memory", g.max_memory, "stop sweeps above this resident size, e.g. 4G")
        ->transform(CLI::AsSizeValue(false));
    app.add_option("--cache", g.cache, "memo cache file (SAXLLAB_CACHE overrides)");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"tsv", "json", "markdown"}));

    auto* charval = app.add_subcommand("charval", "value of one character on one class");
    charval->add_option("--lambda", o.lambda, "character label")->required();
    charval->add_option("--alpha", o.alpha, "cycle type")->required();
    charval->add_flag("--spin", o.spin, "spin character <lambda> of the double cover");
    charval->add_option("--sign", o.sign, "associate choice for <lambda>+-");
    charval->add_option("--class-sign", o.class_sign, "which of two split classes");

    auto* table = app.add_subcommand("table", "full character table");
    table->add_option("--group", o.group, "S, Stilde, A or Atilde")->required();
    table->add_option("--n", o.n, "degree")->required();

    auto* scan = app.add_subcommand("scan", "nonvanishing counts over all partitions of n");
    scan->add_option("kind", o.kind, "saxl or spin")->required();
    scan->add_option("--k", o.k, "K or A..B")->required();
    scan->add_flag("--golden", o.golden, "compare with the published rows");
    scan->add_flag("--dominance", o.dominance, "also count partitions comparable to rho_k");

    auto* dk = app.add_subcommand("dk", "strict partitions with bounded largest part");
    dk->add_option("--k", o.k, "K or A..B")->required();
    dk->add_flag("--check-theorem", o.check_theorem, "compare the equality positions with the known lists");
    dk->add_flag("--coefficients", o.coefficients, "print d_k(m) for every m");

    auto* decompose = app.add_subcommand("decompose", "decompose a product of characters");
    decompose->add_option("--product", o.products, "character label, e.g. [3,1] <3,1> {2,2}+ <<3,2>>; repeatable")
        ->allow_extra_args(false); // keep "[3,1]" as one label
    decompose->add_option("--square", o.square, "spin square <lambda>_sign <lambda>_other-sign");
    decompose->add_option("--sign", o.sign, "first associate choice for --square");
    decompose->add_option("--other-sign", o.other_sign, "second associate choice for --square");
    decompose->add_option("--mixed", o.mixed, "[mu] times the spin character given by --with");
    decompose->add_option("--with", o.with, "spin character for --mixed");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite, "paper, tables, orthogonality, oracle or all");
    verify->add_option("--limit", o.limit, "largest k for k-indexed checks");
    verify->add_option("--max-n", o.max_n, "largest n for n-indexed checks");
    verify->add_flag("--allow-long", o.allow_long, "lift the caps on Kronecker square checks");

    auto* saxl = app.add_subcommand("saxl", "check that [rho_k]^2 contains every [mu]");
    saxl->add_option("--k", o.k, "K or A..B")->required();
    saxl->add_flag("--allow-long", o.allow_long, "permit k > 5");

    auto* spin_saxl = app.add_subcommand("spin-saxl", "check that <tau_k>^2 contains every [mu]");
    spin_saxl->add_option("--k", o.k, "K or A..B")->required();
    spin_saxl->add_flag("--allow-long", o.allow_long, "permit k > 4");

    auto* conjecture = app.add_subcommand("conjecture", "spin characters whose square contains all candidates");
    conjecture->add_option("--n", o.n_range, "N or A..B")->required();
    conjecture->add_option("--target", o.target, "d-plus or atilde");
    conjecture->add_flag("--allow-long", o.allow_long, "permit n > 12");

    auto* parity = app.add_subcommand("parity", "[mu](rho_k) against [mu] at the Glaisher correspondent");
    parity->add_option("--k", o.k, "K or A..B")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    if (const char* env = std::getenv("SAXLLAB_CACHE"); env && *env)
        g.cache = env;
    std::optional<MemoCache> cache;
    if (!g.cache.empty()) {
        cache.emplace(g.cache, default_mn_memo(), default_morris_memo());
        cache->load(std::cerr);
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        if (charval->parsed())
            out = cmd_charval(o);
        else if (table->parsed())
            out = cmd_table(o);
        else if (scan->parsed())
            out = cmd_scan(o, g);
        else if (dk->parsed())
            out = cmd_dk(o);
        else if (decompose->parsed())
            out = cmd_decompose(o);
        else if (verify->parsed())
            out = cmd_verify(o, g);
        else if (saxl->parsed())
            out = cmd_saxl(o, g);
        else if (spin_saxl->parsed())
            out = cmd_spin_saxl(o);
        else if (conjecture->parsed())
            out = cmd_conjecture(o);
        else if (parity->parsed())
            out = cmd_parity(o, g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_mismatch;
    }

    std::cout << render(out.report, parse_format(g.format)) << std::flush;
    std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << " s\n";
    if (cache) {
        try {
            cache->flush();
        } catch (const std::exception& e) {
            std::cerr << "warning: " << e.what() << '\n';
        }
    }
    return out.code;
}
