#include <doctest.h>

#include "saxllab/exact_value.hpp"

using namespace saxllab;

TEST_CASE("construction and canonical form")
{
    CHECK(ExactValue().str() == "0");
    CHECK(ExactValue(7L).str() == "7");
    CHECK(ExactValue(mpq_class(2, 2)).is_integer());
    CHECK(ExactValue(mpq_class(4, 6)).str() == "2/3");
    CHECK(ExactValue::sqrt_of(12) == ExactValue::monomial(2, 0, 3));
    CHECK(ExactValue::sqrt_of(16) == ExactValue(4L));
    CHECK(ExactValue::monomial(-1, 0, 3).str() == "-1*sqrt(3)");
    CHECK(ExactValue::monomial(1, 2, 3).str() == "-1*sqrt(3)");
    CHECK(ExactValue::monomial(1, 3, 3).str() == "-1*i*sqrt(3)");
    CHECK((ExactValue(mpq_class(1, 2)) + ExactValue::monomial(mpq_class(1, 2), 0, 5)).str() == "1/2+1/2*sqrt(5)");
    CHECK_THROWS_AS(ExactValue::monomial(1, 0, -2), std::invalid_argument);
}

TEST_CASE("field arithmetic")
{
    const ExactValue i = ExactValue::imaginary_unit();
    const ExactValue r2 = ExactValue::sqrt_of(2);
    const ExactValue r3 = ExactValue::sqrt_of(3);
    CHECK(i * i == ExactValue(-1L));
    CHECK(r2 * r2 == ExactValue(2L));
    CHECK(r2 * r3 == ExactValue::sqrt_of(6));
    CHECK(ExactValue::sqrt_of(-3) == i * r3);
    CHECK((r2 + r3) - r3 == r2);
    CHECK((r2 - r2).is_zero());
    CHECK(-(r2) + r2 == ExactValue());
    CHECK((r3 / mpq_class(3)) * r3 == ExactValue(1L));
    CHECK((i * r3).conj() == -(i * r3));
    CHECK(r3.conj() == r3);

    // (1 + sqrt 5)/2 is the golden ratio: phi^2 = phi + 1
    const ExactValue phi = (ExactValue(1L) + ExactValue::sqrt_of(5)) / mpq_class(2);
    CHECK(phi * phi == phi + ExactValue(1L));
    // a cube root of unity w = (-1 + i sqrt 3)/2
    const ExactValue w = (ExactValue(-1L) + i * r3) / mpq_class(2);
    CHECK(w * w * w == ExactValue(1L));
    CHECK(w * w.conj() == ExactValue(1L));
}

TEST_CASE("rational and integer access")
{
    CHECK(ExactValue(mpq_class(3, 4)).is_rational());
    CHECK_FALSE(ExactValue(mpq_class(3, 4)).is_integer());
    CHECK(ExactValue(mpq_class(3, 4)).rational() == mpq_class(3, 4));
    CHECK(ExactValue(mpz_class(-12)).integer() == -12);
    CHECK_THROWS_AS((void)ExactValue::sqrt_of(2).rational(), std::domain_error);
    CHECK_THROWS_AS((void)ExactValue(mpq_class(1, 2)).integer(), std::domain_error);
}

TEST_CASE("text round trip")
{
    const ExactValue i = ExactValue::imaginary_unit();
    const std::vector<ExactValue> samples{
        ExactValue(),
        ExactValue(-5L),
        ExactValue(mpq_class(-7, 3)),
        ExactValue::sqrt_of(15),
        -ExactValue::sqrt_of(3),
        i,
        i * ExactValue::sqrt_of(15) * mpq_class(-3, 2),
        (ExactValue(-1L) + i * ExactValue::sqrt_of(3)) / mpq_class(2),
        ExactValue(2L) + ExactValue::sqrt_of(2) - i * ExactValue::sqrt_of(7),
    };
    for (const auto& v : samples) {
        CAPTURE(v.str());
        CHECK(ExactValue::parse(v.str()) == v);
    }
    CHECK(ExactValue::parse("-1*sqrt(3)") == -ExactValue::sqrt_of(3));
    CHECK_THROWS(ExactValue::parse("sqrt("));
    CHECK_THROWS(ExactValue::parse("1+"));
}
