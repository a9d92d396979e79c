#include "saxllab/products.hpp"

#include <algorithm>
#include <stdexcept>

#include "saxllab/character_table.hpp"
#include "saxllab/ordinary_chars.hpp"

namespace saxllab {

namespace {

bool is_faithful(const CharLabel& label)
{
    return label.family == CharFamily::spin || label.family == CharFamily::alternating_spin;
}

mpz_class as_multiplicity(const ExactValue& v, const CharLabel& label)
{
    if (!v.is_integer() || v.integer() < 0)
        throw std::runtime_error("multiplicity of " + label.str() + " is " + v.str()
                                 + ", not a nonnegative integer");
    return v.integer();
}

mpz_class integer_inner_product(const ClassFunction& f, const ClassFunction& g)
{
    ExactValue v = inner_product(f, g);
    if (!v.is_integer())
        throw std::runtime_error("inner product " + v.str() + " is not an integer");
    return v.integer();
}

} // namespace

ExactValue inner_product(const ClassFunction& f, const ClassFunction& g)
{
    if (f.context() != g.context())
        throw std::invalid_argument("inner product of class functions on different groups");
    const auto& classes = f.context()->classes();
    ExactValue sum;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (f[c].is_zero() || g[c].is_zero())
            continue;
        sum += f[c] * g[c].conj() * mpq_class(classes[c].size);
    }
    return sum / mpq_class(f.context()->order());
}

mpz_class kron_coeff(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    const int n = lambda.size();
    if (mu.size() != n || nu.size() != n)
        throw std::invalid_argument("Kronecker coefficient needs three partitions of the same n");
    const mpz_class nfact = factorial(n);
    mpz_class sum = 0;
    for (const Partition& alpha : partitions(n)) {
        CharValue a = mn_value(lambda, alpha);
        if (a == 0)
            continue;
        CharValue b = mn_value(mu, alpha);
        if (b == 0)
            continue;
        sum += (nfact / centralizer_order(alpha)) * a * b * mn_value(nu, alpha);
    }
    if (sum % nfact != 0)
        throw std::logic_error("Kronecker coefficient is not an integer");
    return sum / nfact;
}

mpz_class Decomposition::multiplicity(const CharLabel& label) const
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return multiplicities[i];
    return 0;
}

ClassFunction Decomposition::reconstruct() const
{
    ClassFunction out = ClassFunction::zero(ctx);
    for (std::size_t i = 0; i < labels.size(); ++i)
        out += class_function(ctx, labels[i]) * mpq_class(multiplicities[i]);
    return out;
}

Decomposition decompose(const ClassFunction& f, const std::vector<CharLabel>& basis)
{
    const ContextPtr& ctx = f.context();
    const auto& classes = ctx->classes();
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (!f[c].is_zero())
            support.push_back(c);

    Decomposition out{ctx, {}, {}};
    for (const CharLabel& label : basis) {
        ExactValue sum;
        for (std::size_t c : support) {
            ExactValue chi = character_value(*ctx, label, c);
            if (!chi.is_zero())
                sum += f[c] * chi.conj() * mpq_class(classes[c].size);
        }
        mpz_class m = as_multiplicity(sum / mpq_class(ctx->order()), label);
        if (m != 0) {
            out.labels.push_back(label);
            out.multiplicities.push_back(m);
        }
    }
    return out;
}

Decomposition decompose(const ClassFunction& f) { return decompose(f, irreducible_labels(*f.context())); }

Decomposition decompose_spin_square(const Partition& lambda, Sign e, Sign d)
{
    auto ctx = GroupContext::get(GroupKind::double_cover, lambda.size());
    ClassFunction f = class_function(ctx, CharLabel::spin(lambda, e)) * class_function(ctx, CharLabel::spin(lambda, d));
    std::vector<CharLabel> basis;
    for (const CharLabel& label : irreducible_labels(*ctx))
        if (!is_faithful(label))
            basis.push_back(label);
    return decompose(f, basis);
}

Decomposition decompose_mixed(const Partition& mu, const CharLabel& spin)
{
    if (spin.family != CharFamily::spin)
        throw std::invalid_argument("decompose_mixed needs a spin label, got " + spin.str());
    auto ctx = GroupContext::get(GroupKind::double_cover, mu.size());
    ClassFunction f = class_function(ctx, CharLabel::ordinary(mu)) * class_function(ctx, spin);
    std::vector<CharLabel> basis;
    for (const CharLabel& label : irreducible_labels(*ctx))
        if (is_faithful(label))
            basis.push_back(label);
    return decompose(f, basis);
}

ContextPtr product_context(const std::vector<CharLabel>& factors)
{
    if (factors.empty())
        throw std::invalid_argument("product of no characters");
    const int n = factors.front().shape.size();
    bool spin = false;
    bool alternating = false;
    for (const CharLabel& label : factors) {
        if (label.shape.size() != n)
            throw std::invalid_argument("factors " + factors.front().str() + " and " + label.str()
                                        + " have different degrees");
        spin = spin || is_faithful(label);
        alternating = alternating || label.family == CharFamily::alternating
                      || label.family == CharFamily::alternating_spin;
    }
    GroupKind kind = alternating ? (spin ? GroupKind::alternating_double_cover : GroupKind::alternating)
                                 : (spin ? GroupKind::double_cover : GroupKind::symmetric);
    return GroupContext::get(kind, n);
}

Decomposition decompose_product(const std::vector<CharLabel>& factors)
{
    ContextPtr ctx = product_context(factors);
    ClassFunction f = class_function(ctx, factors.front());
    bool faithful = is_faithful(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) {
        f = f * class_function(ctx, factors[i]);
        faithful = faithful != is_faithful(factors[i]);
    }
    std::vector<CharLabel> basis;
    for (const CharLabel& label : irreducible_labels(*ctx))
        if (is_faithful(label) == faithful)
            basis.push_back(label);
    return decompose(f, basis);
}

SpinMainCheck spin_main_check(const Partition& lambda, const Partition& mu)
{
    if (!lambda.has_distinct_parts())
        throw std::invalid_argument("spin_main_check needs a strict lambda, got " + lambda.str());
    if (lambda.size() != mu.size())
        throw std::invalid_argument("spin_main_check needs |lambda| = |mu|");
    const int n = lambda.size();
    SpinMainCheck out;
    out.lambda = lambda;
    out.mu = mu;
    out.value = mn_value(mu, lambda);
    out.hypothesis = out.value != 0;

    auto stilde = GroupContext::get(GroupKind::double_cover, n);
    if (in_distinct_minus(lambda)) {
        ClassFunction plus = class_function(stilde, CharLabel::spin(lambda, Sign::plus));
        ClassFunction minus = class_function(stilde, CharLabel::spin(lambda, Sign::minus));
        ClassFunction f = class_function(stilde, CharLabel::ordinary(mu)) * plus;
        out.m_plus = integer_inner_product(f, plus);
        out.m_minus = integer_inner_product(f, minus);
        out.total = out.m_plus + out.m_minus;
    } else {
        auto atilde = GroupContext::get(GroupKind::alternating_double_cover, n);
        ClassFunction plus = class_function(atilde, CharLabel::alternating_spin(lambda, Sign::plus));
        ClassFunction minus = class_function(atilde, CharLabel::alternating_spin(lambda, Sign::minus));
        ClassFunction f = class_function(atilde, CharLabel::ordinary(mu)) * plus;
        out.m_plus = integer_inner_product(f, plus);
        out.m_minus = integer_inner_product(f, minus);
        ClassFunction whole = class_function(stilde, CharLabel::spin(lambda));
        out.total = integer_inner_product(class_function(stilde, CharLabel::ordinary(mu)) * whole, whole);
        mpz_class gap = out.total - out.value;
        out.parity_ok = mpz_even_p(gap.get_mpz_t()) != 0;
    }
    out.difference_ok = out.m_plus - out.m_minus == out.value;
    out.bound_ok = std::max(out.m_plus, out.m_minus) >= abs(out.value);
    return out;
}

DetectCheck lemma_detect_check(const ClassFunction& psi, std::size_t x, std::size_t y, const ClassFunction& chi1,
                               const ClassFunction& chi2)
{
    DetectCheck out;
    out.psi_x = psi[x];
    out.psi_y = psi[y];
    out.precondition = psi[x] == psi[y] && !psi[x].is_zero();
    ClassFunction f = psi * chi1;
    out.m1 = integer_inner_product(f, chi1);
    out.m2 = integer_inner_product(f, chi2);
    out.difference_ok = psi[x] == ExactValue(mpz_class(out.m1 - out.m2));
    const ExactValue norm = psi[x] * psi[x].conj();
    const mpz_class top = std::max(out.m1, out.m2);
    out.bound_ok = top >= 0 && norm.is_rational() && mpq_class(top * top) >= norm.rational();
    return out;
}

} // namespace saxllab
