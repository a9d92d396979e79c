#include "saxllab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace saxllab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
        throw std::invalid_argument("negative part");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ')
        ++pos;
    text.remove_prefix(pos);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text.empty())
        return {};
    while (true) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::multiplicity(int part) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::has_odd_parts_only() const noexcept
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::has_distinct_parts() const noexcept
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_self_conjugate() const { return conjugate(*this) == *this; }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int part : p)
        h = (h ^ static_cast<std::size_t>(part)) * 1099511628211ull;
    return h;
}

PartitionClass classify(const Partition& p)
{
    PartitionClass c;
    c.is_odd_parts = p.has_odd_parts_only();
    c.is_distinct = p.has_distinct_parts();
    if (c.is_distinct)
        c.parity_sign = ((p.size() - p.length()) % 2 == 0) ? Parity::even : Parity::odd;
    return c;
}

bool in_odd(const Partition& p) { return p.has_odd_parts_only(); }
bool in_distinct(const Partition& p) { return p.has_distinct_parts(); }
bool in_distinct_plus(const Partition& p)
{
    return p.has_distinct_parts() && (p.size() - p.length()) % 2 == 0;
}
bool in_distinct_minus(const Partition& p)
{
    return p.has_distinct_parts() && (p.size() - p.length()) % 2 != 0;
}

// ---------------------------------------------------------------------------

namespace {

bool fillable(int remainder, int cap, bool strict)
{
    if (remainder == 0)
        return true;
    if (cap < 1)
        return false;
    if (strict)
        return static_cast<long>(remainder) <= static_cast<long>(cap) * (cap + 1) / 2;
    return true;
}

// Appends the lexicographically largest completion of `remainder` with parts <= cap.
void fill_greedy(std::vector<int>& out, int remainder, int cap, bool strict, bool odd)
{
    while (remainder > 0) {
        int a = std::min(cap, remainder);
        if (odd && a % 2 == 0)
            --a;
        out.push_back(a);
        remainder -= a;
        cap = strict ? a - 1 : a;
    }
}

} // namespace

PartitionGenerator::PartitionGenerator(int n, PartitionFilter filter)
    : n_(n)
    , filter_(filter)
    , strict_(filter == PartitionFilter::distinct || filter == PartitionFilter::distinct_plus
              || filter == PartitionFilter::distinct_minus)
    , odd_(filter == PartitionFilter::odd)
{
    if (n < 0)
        throw std::invalid_argument("partition size must be nonnegative");
}

bool PartitionGenerator::accepts() const
{
    if (filter_ != PartitionFilter::distinct_plus && filter_ != PartitionFilter::distinct_minus)
        return true;
    bool even = (n_ - static_cast<int>(current_.size())) % 2 == 0;
    return (filter_ == PartitionFilter::distinct_plus) == even;
}

bool PartitionGenerator::advance()
{
    if (!started_) {
        started_ = true;
        fill_greedy(current_, n_, n_, strict_, odd_);
        return true;
    }
    int tail = 0;
    for (int i = static_cast<int>(current_.size()) - 1; i >= 0; --i) {
        int part = current_[static_cast<std::size_t>(i)];
        int remainder = tail + part;
        for (int v = part - 1; v >= 1; --v) {
            if (odd_ && v % 2 == 0)
                continue;
            int cap = strict_ ? v - 1 : v;
            if (fillable(remainder - v, cap, strict_)) {
                current_.resize(static_cast<std::size_t>(i));
                current_.push_back(v);
                fill_greedy(current_, remainder - v, cap, strict_, odd_);
                return true;
            }
        }
        tail = remainder;
    }
    return false;
}

std::optional<Partition> PartitionGenerator::next()
{
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        if (accepts())
            return Partition(current_);
    }
    return std::nullopt;
}

std::vector<Partition> partitions(int n, PartitionFilter filter)
{
    std::vector<Partition> out;
    PartitionGenerator gen(n, filter);
    while (auto p = gen.next())
        out.push_back(std::move(*p));
    return out;
}

mpz_class partition_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        mpz_class total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            int g2 = k * (3 * k + 1) / 2;
            mpz_class term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                term += p[static_cast<std::size_t>(m - g2)];
            if (k % 2 == 1)
                total += term;
            else
                total -= term;
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

Partition conjugate(const Partition& p)
{
    if (p.empty())
        return {};
    std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
    for (int part : p)
        for (int i = 0; i < part; ++i)
            ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

Partition principal_hooks(const Partition& p)
{
    Partition c = conjugate(p);
    std::vector<int> hooks;
    for (int j = 0; j < p.length() && p[j] > j; ++j)
        hooks.push_back(p[j] + c[j] - 2 * j - 1);
    return Partition(std::move(hooks));
}

Partition staircase(int k)
{
    if (k < 1)
        throw std::invalid_argument("staircase requires k >= 1");
    std::vector<int> parts;
    for (int i = k; i >= 1; --i)
        parts.push_back(i);
    return Partition(std::move(parts));
}

Partition spin_staircase(int k)
{
    if (k < 1)
        throw std::invalid_argument("spin staircase requires k >= 1");
    std::vector<int> parts;
    for (int i = k; i >= 1; --i)
        parts.push_back(2 * i - 1);
    return Partition(std::move(parts));
}

Partition glaisher(const Partition& odd_parts)
{
    if (!odd_parts.has_odd_parts_only())
        throw std::invalid_argument("glaisher: partition " + odd_parts.str() + " has an even part");
    std::map<int, int> mult;
    for (int part : odd_parts)
        ++mult[part];
    std::vector<int> out;
    for (auto [part, m] : mult)
        for (int e = 0; (m >> e) != 0; ++e)
            if ((m >> e) & 1)
                out.push_back(part << e);
    return Partition::from_unsorted(std::move(out));
}

Partition glaisher_inverse(const Partition& distinct_parts)
{
    if (!distinct_parts.has_distinct_parts())
        throw std::invalid_argument("glaisher_inverse: partition " + distinct_parts.str()
                                    + " has a repeated part");
    std::vector<int> out;
    for (int part : distinct_parts) {
        int odd = part;
        int copies = 1;
        while (odd % 2 == 0) {
            odd /= 2;
            copies *= 2;
        }
        out.insert(out.end(), static_cast<std::size_t>(copies), odd);
    }
    return Partition::from_unsorted(std::move(out));
}

Dominance dominance_leq(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("dominance comparison needs partitions of equal size");
    if (lambda == mu)
        return Dominance::above_or_equal;
    bool le = true;
    bool ge = true;
    int sl = 0;
    int sm = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        sl += lambda[i];
        sm += mu[i];
        if (sl > sm)
            le = false;
        if (sl < sm)
            ge = false;
    }
    if (le)
        return Dominance::below;
    if (ge)
        return Dominance::above_or_equal;
    return Dominance::incomparable;
}

mpz_class centralizer_order(const Partition& alpha)
{
    mpz_class z = 1;
    std::size_t i = 0;
    auto parts = alpha.parts();
    while (i < parts.size()) {
        int part = parts[i];
        unsigned long m = 0;
        while (i < parts.size() && parts[i] == part) {
            ++m;
            ++i;
        }
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), m);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), m);
        z *= power * fact;
    }
    return z;
}

mpz_class factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

std::vector<mpz_class> strict_bounded_counts(int k)
{
    if (k < 0)
        throw std::invalid_argument("strict_bounded_counts requires k >= 0");
    std::size_t top = static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2;
    std::vector<mpz_class> coeff(top + 1, 0);
    coeff[0] = 1;
    std::size_t reach = 0;
    for (int i = 1; i <= k; ++i) {
        auto step = static_cast<std::size_t>(i);
        reach += step;
        for (std::size_t m = reach; m >= step; --m)
            coeff[m] += coeff[m - step];
    }
    return coeff;
}

} // namespace saxllab
