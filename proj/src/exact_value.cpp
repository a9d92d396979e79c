#include "saxllab/exact_value.hpp"

#include <algorithm>
#include <stdexcept>

namespace saxllab {

std::pair<mpz_class, mpz_class> square_free_split(const mpz_class& q)
{
    if (q <= 0)
        throw std::invalid_argument("square_free_split needs a positive integer");
    mpz_class rest = q;
    mpz_class root = 1;
    mpz_class free = 1;
    for (mpz_class d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
            rest /= d;
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i)
            root *= d;
        if (e % 2 == 1)
            free *= d;
    }
    free *= rest;
    return {root, free};
}

ExactValue::ExactValue(long v) : ExactValue(mpq_class(v)) {}

ExactValue::ExactValue(const mpz_class& v) : ExactValue(mpq_class(v)) {}

ExactValue::ExactValue(const mpq_class& v)
{
    if (v != 0) {
        terms_.push_back(Term{1, v, 0});
        terms_.back().re.canonicalize(); // mpq_class(a, b) is stored as given
    }
}

ExactValue ExactValue::monomial(const mpq_class& r, int i_power, const mpz_class& radicand)
{
    ExactValue out;
    if (radicand < 0)
        throw std::invalid_argument("monomial radicand must be nonnegative");
    if (r == 0 || radicand == 0)
        return out;
    auto [root, free] = square_free_split(radicand);
    mpq_class coeff = r * root;
    switch (((i_power % 4) + 4) % 4) {
    case 0: out.add_term(free, coeff, 0); break;
    case 1: out.add_term(free, 0, coeff); break;
    case 2: out.add_term(free, -coeff, 0); break;
    default: out.add_term(free, 0, -coeff); break;
    }
    return out;
}

ExactValue ExactValue::sqrt_of(const mpz_class& v)
{
    if (v >= 0)
        return monomial(1, 0, v);
    return monomial(1, 1, -v);
}

bool ExactValue::is_rational() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].im == 0);
}

bool ExactValue::is_integer() const noexcept
{
    return is_rational() && (terms_.empty() || terms_[0].re.get_den() == 1);
}

mpq_class ExactValue::rational() const
{
    if (!is_rational())
        throw std::domain_error("value " + str() + " is not rational");
    return terms_.empty() ? mpq_class(0) : terms_[0].re;
}

mpz_class ExactValue::integer() const
{
    if (!is_integer())
        throw std::domain_error("value " + str() + " is not an integer");
    return terms_.empty() ? mpz_class(0) : terms_[0].re.get_num();
}

ExactValue ExactValue::conj() const
{
    ExactValue out = *this;
    for (auto& t : out.terms_)
        t.im = -t.im;
    return out;
}

void ExactValue::add_term(const mpz_class& radicand, const mpq_class& re, const mpq_class& im)
{
    if (re == 0 && im == 0)
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                               [](const Term& t, const mpz_class& r) { return t.radicand < r; });
    if (it != terms_.end() && it->radicand == radicand) {
        it->re += re;
        it->im += im;
        if (it->re == 0 && it->im == 0)
            terms_.erase(it);
        return;
    }
    it = terms_.insert(it, Term{radicand, re, im});
    it->re.canonicalize();
    it->im.canonicalize();
}

ExactValue& ExactValue::operator+=(const ExactValue& other)
{
    for (const auto& t : other.terms_)
        add_term(t.radicand, t.re, t.im);
    return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& other)
{
    for (const auto& t : other.terms_)
        add_term(t.radicand, -t.re, -t.im);
    return *this;
}

ExactValue operator*(const ExactValue& a, const ExactValue& b)
{
    ExactValue out;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), x.radicand.get_mpz_t(), y.radicand.get_mpz_t());
            mpz_class radicand = (x.radicand / g) * (y.radicand / g);
            mpq_class re = (x.re * y.re - x.im * y.im) * g;
            mpq_class im = (x.re * y.im + x.im * y.re) * g;
            out.add_term(radicand, re, im);
        }
    }
    return out;
}

ExactValue& ExactValue::operator*=(const ExactValue& other)
{
    *this = *this * other;
    return *this;
}

ExactValue& ExactValue::operator*=(const mpq_class& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.re *= scalar;
        t.im *= scalar;
    }
    return *this;
}

ExactValue& ExactValue::operator/=(const mpq_class& scalar)
{
    if (scalar == 0)
        throw std::domain_error("division by zero");
    for (auto& t : terms_) {
        t.re /= scalar;
        t.im /= scalar;
    }
    return *this;
}

ExactValue ExactValue::operator-() const
{
    ExactValue out = *this;
    for (auto& t : out.terms_) {
        t.re = -t.re;
        t.im = -t.im;
    }
    return out;
}

bool operator==(const ExactValue& a, const ExactValue& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.radicand != y.radicand || x.re != y.re || x.im != y.im)
            return false;
    }
    return true;
}

std::string ExactValue::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    auto emit = [&out](const mpq_class& coeff, bool imaginary, const mpz_class& radicand) {
        std::string c = coeff.get_str();
        if (!out.empty() && c.front() != '-')
            out += '+';
        out += c;
        if (imaginary)
            out += "*i";
        if (radicand != 1)
            out += "*sqrt(" + radicand.get_str() + ")";
    };
    for (const auto& t : terms_) {
        if (t.re != 0)
            emit(t.re, false, t.radicand);
        if (t.im != 0)
            emit(t.im, true, t.radicand);
    }
    return out;
}

ExactValue ExactValue::parse(std::string_view text)
{
    auto fail = [&text]() {
        return std::invalid_argument("malformed exact value: '" + std::string(text) + "'");
    };
    if (text.empty())
        throw fail();
    ExactValue out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = start + 1;
        while (end < text.size() && text[end] != '+' && text[end] != '-')
            ++end;
        std::string_view term = text.substr(start, end - start);
        if (!term.empty() && term.front() == '+')
            term.remove_prefix(1);
        bool imaginary = false;
        mpz_class radicand = 1;
        auto star = term.find('*');
        std::string coeff_text(term.substr(0, star));
        while (star != std::string_view::npos) {
            auto next = term.find('*', star + 1);
            std::string_view factor = term.substr(star + 1, next == std::string_view::npos
                                                                ? std::string_view::npos
                                                                : next - star - 1);
            if (factor == "i") {
                imaginary = true;
            } else if (factor.starts_with("sqrt(") && factor.ends_with(")")) {
                std::string digits(factor.substr(5, factor.size() - 6));
                if (radicand.set_str(digits, 10) != 0)
                    throw fail();
            } else {
                throw fail();
            }
            star = next;
        }
        mpq_class coeff;
        if (coeff_text.empty() || coeff.set_str(coeff_text, 10) != 0)
            throw fail();
        coeff.canonicalize();
        out += monomial(coeff, imaginary ? 1 : 0, radicand);
        start = end;
    }
    return out;
}

} // namespace saxllab
