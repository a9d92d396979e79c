#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace saxllab {

/// Exact element of the multiquadratic field Q(i, sqrt 2, sqrt 3, sqrt 5, ...).
///
/// A value is a finite sum of monomials r * i^e * sqrt(q) with r rational,
/// e in {0, 1} and q a square-free positive integer. Every character value
/// this library produces (integers, the surds sqrt(prod l_j / 2) of spin
/// characters, the A_n values (e +- sqrt(e prod h_j)) / 2) lies in this field,
/// and the representation is canonical: equal values compare equal
/// structurally.
class ExactValue {
public:
    struct Term {
        mpz_class radicand; // square-free, >= 1
        mpq_class re;
        mpq_class im;
    };

    ExactValue() = default;
    ExactValue(long v);            // NOLINT(google-explicit-constructor)
    ExactValue(const mpz_class& v); // NOLINT(google-explicit-constructor)
    ExactValue(const mpq_class& v); // NOLINT(google-explicit-constructor)

    /// r * i^i_power * sqrt(radicand); radicand >= 0 need not be square-free.
    static ExactValue monomial(const mpq_class& r, int i_power, const mpz_class& radicand);

    /// Principal square root of an integer (sqrt(-m) = i sqrt(m)).
    static ExactValue sqrt_of(const mpz_class& v);

    static ExactValue imaginary_unit() { return monomial(1, 1, 1); }

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_rational() const noexcept;
    [[nodiscard]] bool is_integer() const noexcept;
    /// Throws std::domain_error when the value is not rational.
    [[nodiscard]] mpq_class rational() const;
    /// Throws std::domain_error when the value is not an integer.
    [[nodiscard]] mpz_class integer() const;

    [[nodiscard]] ExactValue conj() const;
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }

    ExactValue& operator+=(const ExactValue& other);
    ExactValue& operator-=(const ExactValue& other);
    ExactValue& operator*=(const ExactValue& other);
    ExactValue& operator*=(const mpq_class& scalar);
    ExactValue& operator/=(const mpq_class& scalar);

    friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
    friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
    friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator*(ExactValue a, const mpq_class& s) { return a *= s; }
    friend ExactValue operator/(ExactValue a, const mpq_class& s) { return a /= s; }
    ExactValue operator-() const;

    friend bool operator==(const ExactValue& a, const ExactValue& b);

    /// Canonical text: terms "r", "r*i", "r*sqrt(q)", "r*i*sqrt(q)" ordered by
    /// radicand, real before imaginary, joined by their signs; zero is "0".
    [[nodiscard]] std::string str() const;
    static ExactValue parse(std::string_view text);

private:
    void add_term(const mpz_class& radicand, const mpq_class& re, const mpq_class& im);

    std::vector<Term> terms_; // sorted by radicand, no zero terms
};

/// Splits q = s^2 * f with f square-free; returns {s, f}.
std::pair<mpz_class, mpz_class> square_free_split(const mpz_class& q);

} // namespace saxllab
