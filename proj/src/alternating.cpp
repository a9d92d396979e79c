#include "saxllab/alternating.hpp"

#include <stdexcept>

#include "saxllab/ordinary_chars.hpp"
#include "saxllab/spin_chars.hpp"

namespace saxllab {

namespace {

void require_even_class(const ClassLabel& cls, int n)
{
    if (cls.type.size() != n)
        throw std::invalid_argument("class " + cls.str() + " does not belong to a group of degree "
                                    + std::to_string(n));
    if ((cls.type.size() - cls.type.length()) % 2 != 0)
        throw std::invalid_argument("class " + cls.str() + " is not an even permutation type");
}

mpz_class part_product(const Partition& p)
{
    mpz_class out = 1;
    for (int part : p)
        out *= part;
    return out;
}

} // namespace

ExactValue an_char_value(const CharLabel& label, const ClassLabel& cls)
{
    if (label.family != CharFamily::alternating)
        throw std::invalid_argument("an_char_value needs an A_n label, got " + label.str());
    const Partition& mu = label.shape;
    require_even_class(cls, mu.size());
    const CharValue v = mn_value(mu, cls.type);
    if (!label.sign)
        return ExactValue(v);

    const Partition h = principal_hooks(mu);
    if (cls.type != h || cls.an_sign == 0)
        return ExactValue(mpq_class(v, 2));
    // [mu](h(mu)) = e = (-1)^{(n-k)/2}
    if (v != 1 && v != -1)
        throw std::logic_error("unexpected value of " + mu.str() + " on its principal hook class");
    ExactValue root = ExactValue::sqrt_of(v * part_product(h));
    const int s = cls.an_sign * to_int(*label.sign);
    ExactValue out = ExactValue(v) + (s > 0 ? root : -root);
    return out / mpq_class(2);
}

ExactValue delta_value(const Partition& lambda, const ClassLabel& cls)
{
    if (!in_distinct_plus(lambda))
        throw std::invalid_argument("delta_value needs lambda in D+, got " + lambda.str());
    if (cls.type != lambda || cls.z_sign == 0)
        return {};
    const int n = lambda.size();
    const int m = lambda.length();
    const int s = cls.z_sign * (cls.an_sign == 0 ? 1 : cls.an_sign);
    return ExactValue::monomial(s, (n - m) / 2, part_product(lambda));
}

ExactValue atilde_spin_value(const CharLabel& label, const ClassLabel& cls)
{
    if (label.family != CharFamily::alternating_spin)
        throw std::invalid_argument("atilde_spin_value needs an A~_n spin label, got " + label.str());
    const Partition& lambda = label.shape;
    require_even_class(cls, lambda.size());
    // <lambda> restricted: only C^+-_alpha with alpha in O carry values, since
    // the D- classes are odd and the remaining D+ classes do not split in S~_n.
    ExactValue base;
    if (cls.z_sign != 0 && cls.type.has_odd_parts_only())
        base = ExactValue(mpz_class(morris_value(lambda, cls.type) * cls.z_sign));
    if (!label.sign)
        return base;
    ExactValue d = delta_value(lambda, cls);
    ExactValue out = *label.sign == Sign::plus ? base + d : base - d;
    return out / mpq_class(2);
}

std::vector<CriticalPair> find_critical_pairs(const CharacterTable& table, std::size_t max_members,
                                              const std::vector<std::size_t>* rows)
{
    std::vector<std::size_t> all;
    if (!rows) {
        for (std::size_t r = 0; r < table.rows.size(); ++r)
            all.push_back(r);
        rows = &all;
    }
    const std::size_t classes = table.ctx->class_count();
    std::vector<CriticalPair> out;
    for (std::size_t x = 0; x < classes; ++x) {
        for (std::size_t y = x + 1; y < classes; ++y) {
            CriticalPair pair{x, y, {}, false};
            for (std::size_t r : *rows) {
                if (table.rows[r][x] != table.rows[r][y]) {
                    pair.members.push_back(r);
                    if (pair.members.size() > max_members)
                        break;
                }
            }
            if (pair.members.empty() || pair.members.size() > max_members)
                continue;
            if (pair.members.size() == 2) {
                const auto& c1 = table.rows[pair.members[0]];
                const auto& c2 = table.rows[pair.members[1]];
                pair.detecting = c1[x] - c1[y] == c2[y] - c2[x];
            }
            out.push_back(std::move(pair));
        }
    }
    return out;
}

} // namespace saxllab
