#include "saxllab/suites.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <sstream>

#include "saxllab/alternating.hpp"
#include "saxllab/character_table.hpp"
#include "saxllab/oracles.hpp"
#include "saxllab/ordinary_chars.hpp"
#include "saxllab/products.hpp"
#include "saxllab/spin_chars.hpp"

namespace saxllab::checks {

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "FAIL";
    case Status::info: return "info";
    }
    return "?";
}

bool passed(const Results& results)
{
    return std::none_of(results.begin(), results.end(), [](const Result& r) { return r.status == Status::fail; });
}

bool limit_breached(const Results& results)
{
    return std::any_of(results.begin(), results.end(), [](const Result& r) { return r.incomplete; });
}

namespace {

Result verdict(std::string name, bool ok, std::string detail)
{
    return {std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
}

// Runs one check; an exception becomes a failed result instead of aborting
// the whole suite.
void guarded(Results& out, const std::string& name, const std::function<void()>& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        out.push_back({name, Status::fail, std::string("error: ") + e.what()});
    }
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

template <class Seq>
std::string join_str(const Seq& items, std::size_t cap = 8)
{
    std::string s;
    std::size_t i = 0;
    for (const auto& item : items) {
        if (i == cap) {
            s += " ...";
            break;
        }
        s += (i++ ? " " : "") + item.str();
    }
    return s;
}

std::string show(const Decomposition& d)
{
    std::string s;
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
        if (i)
            s += " + ";
        if (d.multiplicities[i] != 1)
            s += d.multiplicities[i].get_str() + "*";
        s += d.labels[i].str();
    }
    return s.empty() ? "0" : s;
}

bool is_single(const Decomposition& d, const CharLabel& label, const mpz_class& mult)
{
    return d.labels.size() == 1 && d.labels[0] == label && d.multiplicities[0] == mult;
}

std::vector<Sign> signs_for(const Partition& lambda)
{
    if (in_distinct_minus(lambda))
        return {Sign::plus, Sign::minus};
    return {Sign::plus};
}

mpz_class pow2(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

int a_exponent(int k)
{
    if (k % 2 == 0)
        return (k - 2) / 2;
    return k % 4 == 1 ? (k - 1) / 2 : (k - 3) / 2;
}

Partition hook(int n, int j)
{
    std::vector<int> p{n - j};
    p.insert(p.end(), static_cast<std::size_t>(j), 1);
    return Partition(p);
}

std::string saxl_row_text(const SaxlRow& r)
{
    std::ostringstream s;
    s << r.k << ' ' << r.n << ' ' << r.p << ' ' << r.nonzero_h << ' ' << r.nonzero_rho << ' ' << r.nonzero_union
      << ' ' << r.percent();
    return s.str();
}

std::string spin_row_text(const SpinRow& r)
{
    std::ostringstream s;
    s << r.k << ' ' << r.n << ' ' << r.p << ' ' << r.nonzero << ' ' << r.percent();
    return s.str();
}

template <class Row>
Result golden_result(std::string name, const Row& row, const GoldenComparison& g, std::string text)
{
    Result r{std::move(name), Status::pass, std::move(text)};
    if (!row.status.complete) {
        r.status = Status::fail;
        r.incomplete = true;
        r.detail += " (incomplete: " + row.status.reason + ")";
    } else if (!g.available) {
        r.status = Status::info;
        r.detail += " (no published row)";
    } else if (g.transposed) {
        r.status = Status::info;
        r.detail += " (" + g.detail + ")";
    } else if (!g.matches) {
        r.status = Status::fail;
        r.detail += " (" + g.detail + ")";
    }
    return r;
}

} // namespace

Results golden_saxl(int k_from, int k_to, const Limits& limits)
{
    Results out;
    for (int k = k_from; k <= k_to; ++k) {
        const std::string name = "saxl table k=" + std::to_string(k);
        guarded(out, name, [&] {
            SaxlRow row = saxl_scan(k, false, limits);
            out.push_back(golden_result(name, row, compare_golden(row), saxl_row_text(row)));
        });
    }
    return out;
}

Results golden_spin(int k_from, int k_to, const Limits& limits)
{
    Results out;
    for (int k = k_from; k <= k_to; ++k) {
        const std::string name = "spin table k=" + std::to_string(k);
        guarded(out, name, [&] {
            SpinRow row = spin_scan(k, limits);
            out.push_back(golden_result(name, row, compare_golden(row), spin_row_text(row)));
        });
    }
    return out;
}

Results dk_theorem(int none_to, int invariants_to)
{
    Results out;
    for (const auto& [k, expected] : golden_exceptional()) {
        const std::string name = "dk exceptional k=" + std::to_string(k);
        guarded(out, name, [&, k = k, &expected = expected] {
            auto got = exceptional_equalities(k);
            out.push_back(verdict(name, got == expected, "{" + join(got) + "}"));
        });
    }
    guarded(out, "dk strict beyond m=4", [&] {
        const std::vector<int> universal{1, 2, 4};
        std::vector<int> bad;
        for (int k = 12; k <= none_to; ++k)
            if (unimodality_report(k) != universal)
                bad.push_back(k);
        out.push_back(verdict("dk strict beyond m=4",
                              bad.empty(),
                              "k=12.." + std::to_string(none_to)
                                  + (bad.empty() ? ": only m=1,2,4" : ": extra equalities at k=" + join(bad))));
    });
    guarded(out, "dk invariants", [&] {
        std::vector<int> recursion_bad, symmetry_bad, small_bad, subset_bad;
        std::vector<mpz_class> prev{1}; // d_0
        for (int k = 1; k <= invariants_to; ++k) {
            const int top = k * (k + 1) / 2;
            std::vector<mpz_class> rec(static_cast<std::size_t>(top) + 1);
            for (int m = 0; m <= top; ++m) {
                if (m < static_cast<int>(prev.size()))
                    rec[static_cast<std::size_t>(m)] += prev[static_cast<std::size_t>(m)];
                if (m - k >= 0 && m - k < static_cast<int>(prev.size()))
                    rec[static_cast<std::size_t>(m)] += prev[static_cast<std::size_t>(m - k)];
            }
            const auto d = dk_table(k).d;
            if (d != rec)
                recursion_bad.push_back(k);
            mpz_class total = 0;
            for (int m = 0; m <= top; ++m) {
                total += d[static_cast<std::size_t>(m)];
                if (d[static_cast<std::size_t>(m)] != d[static_cast<std::size_t>(top - m)]) {
                    symmetry_bad.push_back(k);
                    break;
                }
            }
            if (total != pow2(static_cast<unsigned long>(k)) || d[0] != 1 || d[1] != 1
                || (k >= 4 && (d[3] != 2 || d[4] != 2)))
                small_bad.push_back(k);
            if (k <= 16 && d != oracle::dk_by_subsets(k))
                subset_bad.push_back(k);
            prev = std::move(rec);
        }
        const std::string range = "k<=" + std::to_string(invariants_to);
        out.push_back(verdict("dk recursion", recursion_bad.empty(), range + (recursion_bad.empty() ? "" : " bad k=" + join(recursion_bad))));
        out.push_back(verdict("dk symmetry", symmetry_bad.empty(), range + (symmetry_bad.empty() ? "" : " bad k=" + join(symmetry_bad))));
        out.push_back(verdict("dk small values and total", small_bad.empty(), range + (small_bad.empty() ? "" : " bad k=" + join(small_bad))));
        out.push_back(verdict("dk subset count", subset_bad.empty(), std::string("k<=16") + (subset_bad.empty() ? "" : " bad k=" + join(subset_bad))));
    });
    return out;
}

Results two_part_ties(int max_k)
{
    Results out;
    for (int k = 2; k <= max_k; ++k) {
        const std::string name = "two-part ties k=" + std::to_string(k);
        guarded(out, name, [&] {
            const int n = k * (k + 1) / 2;
            const auto d = dk_table(k).d;
            const Partition rho = staircase(k);
            int nonzero = 0, plateaus = 0;
            bool ok = true;
            for (int j = 1; j <= n / 2; ++j) {
                CharValue v = mn_value(Partition{n - j, j}, rho);
                mpz_class expected = d[static_cast<std::size_t>(j)] - d[static_cast<std::size_t>(j - 1)];
                ok = ok && v == expected && two_part_value(k, j) == expected;
                nonzero += v != 0;
                plateaus += expected == 0;
            }
            ok = ok && nonzero == n / 2 - plateaus;
            out.push_back(verdict(name, ok, std::to_string(nonzero) + " of " + std::to_string(n / 2) + " nonzero"));
        });
    }
    return out;
}

Results identities(int hook_max_n, int rho_max_k, int tau_max_k)
{
    Results out;
    for (int n = 4; n <= hook_max_n; ++n) {
        const std::string name = "<n> hat<n> = hooks, n=" + std::to_string(n);
        guarded(out, name, [&] {
            auto ctx = GroupContext::get(GroupKind::double_cover, n);
            ClassFunction lhs = class_function(ctx, CharLabel::spin(Partition{n})) * hat(Partition{n});
            ClassFunction hooks = ClassFunction::zero(ctx);
            for (int j = 0; j < n; ++j)
                hooks += class_function(ctx, CharLabel::ordinary(hook(n, j)));
            out.push_back(verdict(name, lhs == hooks, show(decompose(lhs))));
        });
    }
    for (int k = 2; k <= rho_max_k; ++k) {
        const std::string name = "<n> <rho_k> = 2^a(k) [rho_k], k=" + std::to_string(k);
        guarded(out, name, [&] {
            const int n = k * (k + 1) / 2;
            const Partition rho = staircase(k);
            const mpz_class mult = pow2(static_cast<unsigned long>(a_exponent(k)));
            bool ok = true;
            std::string detail;
            for (Sign a : signs_for(Partition{n}))
                for (Sign b : signs_for(rho)) {
                    Decomposition d = decompose_product({CharLabel::spin(Partition{n}, a), CharLabel::spin(rho, b)});
                    ok = ok && is_single(d, CharLabel::ordinary(rho), mult);
                    if (detail.empty())
                        detail = show(d);
                    else if (!is_single(d, CharLabel::ordinary(rho), mult))
                        detail += "; " + show(d);
                }
            out.push_back(verdict(name, ok, detail + " for every associate choice"));
        });
    }
    for (int k = 2; k <= tau_max_k; ++k) {
        const std::string name = "<k^2> [k^k] = 2^floor((k-1)/2) <tau_k>, k=" + std::to_string(k);
        guarded(out, name, [&] {
            const Partition square(std::vector<int>(static_cast<std::size_t>(k), k));
            const Partition tau = spin_staircase(k);
            const mpz_class mult = pow2(static_cast<unsigned long>((k - 1) / 2));
            bool ok = true;
            std::string detail;
            for (Sign a : signs_for(Partition{k * k})) {
                Decomposition d = decompose_mixed(square, CharLabel::spin(Partition{k * k}, a));
                ok = ok && is_single(d, CharLabel::spin(tau), mult);
                if (detail.empty())
                    detail = show(d);
            }
            out.push_back(verdict(name, ok, detail));
        });
    }
    return out;
}

Results saxl(int max_k, int spin_max_k, const Limits& limits)
{
    Results out;
    for (int k = 2; k <= max_k; ++k) {
        const std::string name = "[rho_k]^2 contains all [mu], k=" + std::to_string(k);
        guarded(out, name, [&] {
            SaxlVerdict v = verify_saxl(k, limits);
            std::string detail = "all " + std::to_string(v.checked) + " coefficients positive";
            if (!v.missing.empty())
                detail = "missing " + join_str(v.missing);
            if (!v.hooks_present)
                detail += "; a hook is missing";
            if (!v.two_part_present)
                detail += "; a two-part character is missing";
            Result r = verdict(name, v.verified(), detail);
            if (!v.status.complete) {
                r.incomplete = true;
                r.detail += " (incomplete: " + v.status.reason + ")";
            }
            out.push_back(std::move(r));
        });
    }
    for (int k = 2; k <= spin_max_k; ++k) {
        const std::string name = "<tau_k>^2 contains all [mu], k=" + std::to_string(k);
        guarded(out, name, [&] {
            SpinSaxlVerdict v = verify_spin_saxl(k);
            std::string detail = v.all_present() ? "all " + std::to_string(v.checked) + " present"
                                                 : "missing " + join_str(v.missing);
            out.push_back(verdict(name, v.all_present(), detail));
        });
    }
    return out;
}

Results spin_main(int max_n)
{
    Results out;
    for (int n = 2; n <= max_n; ++n) {
        const std::string name = "spin multiplicity test n=" + std::to_string(n);
        guarded(out, name, [&] {
            std::size_t checked = 0, nonvanishing = 0;
            std::vector<std::string> failures;
            const auto mus = partitions(n);
            for (const Partition& lambda : partitions(n, PartitionFilter::distinct)) {
                for (const Partition& mu : mus) {
                    SpinMainCheck c = spin_main_check(lambda, mu);
                    ++checked;
                    nonvanishing += c.hypothesis;
                    if (!c.ok())
                        failures.push_back(lambda.str() + "/" + mu.str());
                }
            }
            std::string detail = std::to_string(nonvanishing) + " nonvanishing of " + std::to_string(checked);
            if (!failures.empty()) {
                detail += "; failures:";
                for (std::size_t i = 0; i < failures.size() && i < 8; ++i)
                    detail += " " + failures[i];
            }
            out.push_back(verdict(name, failures.empty(), detail));
        });
    }
    return out;
}

namespace {

std::size_t identity_class(const GroupContext& ctx)
{
    for (std::size_t i = 0; i < ctx.class_count(); ++i) {
        const ClassLabel& c = ctx.label(i);
        if (c.type.length() == ctx.n() && c.z_sign >= 0)
            return i;
    }
    throw std::logic_error("no identity class in " + ctx.name());
}

} // namespace

Results orthogonality(int max_n)
{
    Results out;
    for (GroupKind kind : {GroupKind::symmetric, GroupKind::double_cover, GroupKind::alternating,
                           GroupKind::alternating_double_cover}) {
        const bool alt = kind == GroupKind::alternating || kind == GroupKind::alternating_double_cover;
        for (int n = alt ? 2 : 1; n <= max_n; ++n) {
            const std::string name = std::string(group_name(kind)) + "_" + std::to_string(n) + " table";
            guarded(out, name, [&] {
                auto ctx = GroupContext::get(kind, n);
                CharacterTable t = character_table(ctx);
                const std::size_t c = ctx->class_count();
                bool square = t.rows.size() == c;
                std::size_t first_bad = 0, second_bad = 0;
                for (std::size_t i = 0; i < t.rows.size(); ++i)
                    for (std::size_t j = i; j < t.rows.size(); ++j)
                        if (!(inner_product(t.rows[i], t.rows[j]) == ExactValue(i == j ? 1L : 0L)))
                            ++first_bad;
                for (std::size_t x = 0; x < c; ++x) {
                    for (std::size_t y = x; y < c; ++y) {
                        ExactValue sum;
                        for (const auto& row : t.rows)
                            sum = sum + row[x] * row[y].conj();
                        const mpz_class expected
                            = x == y ? mpz_class(ctx->order() / ctx->classes()[x].size) : mpz_class(0);
                        if (!(sum == ExactValue(expected)))
                            ++second_bad;
                    }
                }
                const std::size_t id = identity_class(*ctx);
                ExactValue squares;
                bool degrees_ok = true;
                for (const auto& row : t.rows) {
                    degrees_ok = degrees_ok && row[id].is_integer() && row[id].integer() > 0;
                    squares = squares + row[id] * row[id];
                }
                degrees_ok = degrees_ok && squares == ExactValue(ctx->order());
                std::ostringstream detail;
                detail << t.rows.size() << " characters, " << c << " classes";
                if (!square)
                    detail << "; not square";
                if (first_bad)
                    detail << "; " << first_bad << " row products wrong";
                if (second_bad)
                    detail << "; " << second_bad << " column products wrong";
                if (!degrees_ok)
                    detail << "; degrees do not give the group order";
                out.push_back(verdict(name, square && !first_bad && !second_bad && degrees_ok, detail.str()));
            });
        }
    }
    return out;
}

Results oracle(int max_n)
{
    Results out;
    for (int n = 1; n <= max_n; ++n) {
        const std::string name = "MN vs Kostka inversion n=" + std::to_string(n);
        guarded(out, name, [&] {
            std::size_t bad = 0, total = 0;
            for (const auto& [key, value] : oracle::kostka_inversion_table(n)) {
                ++total;
                if (mn_value_transient(key.first, key.second) != value)
                    ++bad;
            }
            out.push_back(verdict(name, bad == 0,
                                  std::to_string(total - bad) + " of " + std::to_string(total) + " values agree"));
        });
    }
    const int deg_n = std::max(max_n, 14);
    guarded(out, "degree formulas", [&] {
        std::size_t checked = 0, bad = 0;
        for (int n = 1; n <= deg_n; ++n) {
            const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
            for (const Partition& lambda : partitions(n)) {
                ++checked;
                bad += char_degree(lambda) != oracle::hook_degree(lambda)
                       || mn_value(lambda, ones) != oracle::hook_degree(lambda);
            }
            for (const Partition& lambda : partitions(n, PartitionFilter::distinct)) {
                ++checked;
                bad += morris_value(lambda, ones) != oracle::spin_degree(lambda);
            }
        }
        out.push_back(verdict("degree formulas", bad == 0,
                              "n<=" + std::to_string(deg_n) + ", " + std::to_string(checked) + " degrees"));
    });
    guarded(out, "strict partitions and Glaisher maps", [&] {
        std::size_t bad = 0, checked = 0;
        for (int n = 1; n <= 30; ++n) {
            auto mine = partitions(n, PartitionFilter::distinct);
            auto theirs = oracle::strict_partitions(n);
            std::sort(mine.begin(), mine.end());
            std::sort(theirs.begin(), theirs.end());
            bad += mine != theirs;
            for (const Partition& alpha : partitions(n, PartitionFilter::odd)) {
                ++checked;
                bad += glaisher(alpha) != oracle::glaisher_by_merging(alpha);
            }
            for (const Partition& lambda : mine) {
                ++checked;
                bad += glaisher_inverse(lambda) != oracle::glaisher_by_splitting(lambda);
            }
        }
        out.push_back(verdict("strict partitions and Glaisher maps", bad == 0,
                              "n<=30, " + std::to_string(checked) + " images"));
    });
    return out;
}

namespace {

// Detecting pairs claimed for one group: class pair, expected characters, and
// whether the pair is to be found among the spin rows only.
struct StatedPair {
    ClassLabel x, y;
    CharLabel chi1, chi2;
    bool spin_rows_only = false;
};

std::vector<StatedPair> stated_pairs(GroupKind kind, int n)
{
    std::vector<StatedPair> out;
    switch (kind) {
    case GroupKind::alternating:
        for (const Partition& mu : partitions(n))
            if (mu.is_self_conjugate()) {
                const Partition h = principal_hooks(mu);
                out.push_back({{h, 0, 1}, {h, 0, -1}, CharLabel::alternating(mu, Sign::plus),
                               CharLabel::alternating(mu, Sign::minus)});
            }
        break;
    case GroupKind::double_cover:
        for (const Partition& lambda : partitions(n, PartitionFilter::distinct_minus))
            out.push_back({{lambda, 1, 0}, {lambda, -1, 0}, CharLabel::spin(lambda, Sign::plus),
                           CharLabel::spin(lambda, Sign::minus)});
        break;
    case GroupKind::alternating_double_cover:
        for (const Partition& lambda : partitions(n, PartitionFilter::distinct_plus)) {
            const CharLabel p = CharLabel::alternating_spin(lambda, Sign::plus);
            const CharLabel m = CharLabel::alternating_spin(lambda, Sign::minus);
            if (in_odd(lambda)) {
                for (int z : {1, -1})
                    out.push_back({{lambda, z, 1}, {lambda, z, -1}, p, m, true});
            } else {
                out.push_back({{lambda, 1, 0}, {lambda, -1, 0}, p, m});
            }
        }
        break;
    case GroupKind::symmetric:
        break;
    }
    return out;
}

const CriticalPair* find_pair(const std::vector<CriticalPair>& pairs, std::size_t x, std::size_t y)
{
    if (x > y)
        std::swap(x, y);
    for (const auto& p : pairs)
        if (p.x == x && p.y == y)
            return &p;
    return nullptr;
}

std::string pair_text(const CharacterTable& t, const CriticalPair& p)
{
    std::string s = t.ctx->label(p.x).str() + " | " + t.ctx->label(p.y).str() + " for";
    for (std::size_t m : p.members)
        s += " " + t.labels[m].str();
    return s;
}

void detecting_pairs(Results& out, GroupKind kind, int n)
{
    auto ctx = GroupContext::get(kind, n);
    CharacterTable t = character_table(ctx);
    const auto full = find_critical_pairs(t, 2);
    std::vector<std::size_t> spin_rows;
    for (std::size_t i = 0; i < t.labels.size(); ++i)
        if (t.labels[i].family == CharFamily::alternating_spin || t.labels[i].family == CharFamily::spin)
            spin_rows.push_back(i);
    const auto spin_only = find_critical_pairs(t, 2, &spin_rows);

    std::set<std::pair<std::size_t, std::size_t>> stated_found;
    std::vector<std::string> problems;
    const auto stated = stated_pairs(kind, n);
    for (const auto& s : stated) {
        auto xi = ctx->index_of(s.x);
        auto yi = ctx->index_of(s.y);
        if (!xi || !yi) {
            problems.push_back("no classes " + s.x.str() + ", " + s.y.str());
            continue;
        }
        const CriticalPair* p = find_pair(s.spin_rows_only ? spin_only : full, *xi, *yi);
        if (!p) {
            problems.push_back(s.x.str() + " | " + s.y.str() + " not critical");
            continue;
        }
        std::vector<CharLabel> members;
        for (std::size_t m : p->members)
            members.push_back(t.labels[m]);
        const bool right_set = members.size() == 2
                               && ((members[0] == s.chi1 && members[1] == s.chi2)
                                   || (members[0] == s.chi2 && members[1] == s.chi1));
        if (!right_set || !p->detecting)
            problems.push_back(pair_text(t, *p) + (p->detecting ? "" : " (not detecting)"));
        stated_found.insert({p->x, p->y});
    }
    const std::string name = "detecting pairs " + ctx->name();
    out.push_back(verdict(name, problems.empty(),
                          problems.empty() ? std::to_string(stated.size()) + " stated pairs found"
                                           : problems.front()));
    for (const auto& p : full)
        if (p.detecting && !stated_found.count({p.x, p.y}))
            out.push_back({"further detecting pair " + ctx->name(), Status::info, pair_text(t, p)});
}

} // namespace

Results criteria(int rho_max_k, int tau_max_k, int pairs_max_n, int parity_max_k, int dominance_k,
                 const Limits& limits)
{
    Results out;
    for (int k = 2; k <= rho_max_k; ++k) {
        const std::string name = "[mu](rho_k) != 0 implies [mu] in [rho_k]^2, k=" + std::to_string(k);
        guarded(out, name, [&] {
            SaxlVerdict v = verify_saxl(k, limits);
            Result r = verdict(name, v.status.complete && v.criterion_violations.empty(),
                               v.criterion_violations.empty() ? "no violations"
                                                              : "violations " + join_str(v.criterion_violations));
            r.incomplete = !v.status.complete;
            out.push_back(std::move(r));
        });
    }
    for (int k = 2; k <= tau_max_k; ++k) {
        const std::string name = "[mu](tau_k) != 0 implies [mu] in <tau_k>^2, k=" + std::to_string(k);
        guarded(out, name, [&] {
            SpinSaxlVerdict v = verify_spin_saxl(k);
            out.push_back(verdict(name, v.criterion_holds(),
                                  v.criterion_violations.empty() ? "no violations"
                                                                 : "violations " + join_str(v.criterion_violations)));
        });
    }
    for (int n = 2; n <= pairs_max_n; ++n)
        for (GroupKind kind : {GroupKind::alternating, GroupKind::double_cover, GroupKind::alternating_double_cover})
            guarded(out, "detecting pairs n=" + std::to_string(n), [&] { detecting_pairs(out, kind, n); });
    for (int k = 2; k <= parity_max_k; ++k) {
        const std::string name = "Glaisher parity k=" + std::to_string(k);
        guarded(out, name, [&] {
            ParityVerdict v = parity_check(k, limits);
            Result r = verdict(name, v.status.complete && v.failures.empty(),
                               "alpha=" + v.alpha.str() + ", " + std::to_string(v.checked) + " congruences"
                                   + (v.failures.empty() ? "" : ", failures " + join_str(v.failures)));
            r.incomplete = !v.status.complete;
            out.push_back(std::move(r));
        });
    }
    if (dominance_k > 0) {
        const std::string name = "dominance-comparable below 50%, k=" + std::to_string(dominance_k);
        guarded(out, name, [&] {
            SaxlRow row = saxl_scan(dominance_k, true, limits);
            const mpz_class comparable = static_cast<unsigned long>(row.comparable.value_or(0));
            Result r = verdict(name, row.status.complete && 2 * comparable < row.p,
                               comparable.get_str() + " of " + row.p.get_str()
                                   + (2 * comparable < row.p ? ", under half" : ", at least half"));
            r.incomplete = !row.status.complete;
            out.push_back(std::move(r));
        });
    }
    return out;
}

Results conjectures(int max_n)
{
    Results out;
    for (int n = 4; n <= max_n; ++n) {
        for (ConjectureTarget target : {ConjectureTarget::d_plus_square, ConjectureTarget::atilde_spin_square}) {
            const bool d_plus = target == ConjectureTarget::d_plus_square;
            const std::string name = std::string(d_plus ? "D+ spin square" : "A~ spin square") + " witnesses n="
                                     + std::to_string(n);
            guarded(out, name, [&] {
                auto w = conjecture_sweep(n, target);
                std::string detail = std::to_string(w.size());
                if (!w.empty())
                    detail += " (" + join_str(w, 4) + ")";
                out.push_back({name, Status::info, detail});
            });
        }
    }
    return out;
}

} // namespace saxllab::checks
