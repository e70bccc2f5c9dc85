#include "catwb/errors.hpp"
#include "catwb/identities.hpp"

#include <doctest.h>

using namespace catwb;

TEST_CASE("kernel values")
{
    CHECK(carlitz_kernel(0, 0, 3, 5, 2, 1, 1, 1) == 1);
    CHECK(carlitz_kernel(1, 0, 2, 1, 2, 1, 1, 1) == 2);
    // (0 + 1*1*1 + 2*1) / ((1 + 2)(1 + 1)) * C(3, 0) * C(2, 1)
    CHECK(carlitz_kernel(0, 1, 2, 1, 2, 1, 1, 1) == 1);
    CHECK_THROWS_AS(carlitz_kernel(0, 1, -1, 1, 2, 1, 1, 1), SingularPoint);
}

TEST_CASE("regularized kernel agrees off the singular set")
{
    for (long k = 0; k <= 4; ++k)
        for (long n = 0; n <= 4; ++n)
            for (long al = 1; al <= 3; ++al)
                for (long be = 1; be <= 3; ++be)
                    CHECK(carlitz_kernel_regularized(k, n, al, be, 2, 1, 3, 1) == carlitz_kernel(k, n, al, be, 2, 1, 3, 1));
    // boundary value used in the type D argument: A_{0,1}(-m, -1) = -1
    for (long m = 1; m <= 3; ++m) {
        CHECK_THROWS_AS(carlitz_kernel(0, 1, -m, -1, m + 1, 1, m, 1), SingularPoint);
        CHECK(carlitz_kernel_regularized(0, 1, -m, -1, m + 1, 1, m, 1) == -1);
    }
}

TEST_CASE("convolutions at the origin")
{
    CarlitzParams p;
    p.alpha = p.beta = p.alpha2 = p.beta2 = 1;
    CHECK(check_carlitz_convolution(p, 0, 0));
    CHECK(check_carlitz_binomial(p, 0, 0));
}

TEST_CASE("named instantiations")
{
    for (long m = 1; m <= 3; ++m) {
        CAPTURE(m);
        auto cases = named_carlitz_cases(m);
        SuiteResult r = run_carlitz_cases(cases);
        CHECK(r.total == static_cast<long>(cases.size()));
        CHECK(r.failures.empty());
        CHECK(r.skipped == 0);
        CHECK(r.ok());
    }
    // an explicit point: a = 3, c = 2, b = d = 1, k = 2, n = 3
    CarlitzParams p;
    p.a = 3;
    p.c = 2;
    p.alpha = 2;
    p.beta = 1;
    p.alpha2 = 4;
    p.beta2 = 2;
    CHECK(check_carlitz_convolution(p, 2, 3));
    CHECK(check_carlitz_binomial(p, 2, 3));
}

TEST_CASE("seeded random draws")
{
    SuiteResult r = carlitz_random_suite(7, 200);
    CHECK(r.total == 400);
    CHECK(r.passed == 400);
    CHECK(r.ok());
    CHECK(carlitz_random_suite(7, 5).total == 10);
}

TEST_CASE("a perturbed identity is caught")
{
    CarlitzParams p;
    p.a = 2;
    p.alpha = 1;
    p.beta = 2;
    p.alpha2 = 3;
    p.beta2 = 1;
    CHECK(check_carlitz_convolution(p, 2, 2));
    // the uncorrected sign in front of cn fails the second identity's right side
    Rational lhs = 0;
    for (long k1 = 0; k1 <= 2; ++k1)
        for (long n1 = 0; n1 <= 2; ++n1)
            lhs += gen_binomial(Rational(2 * k1 - n1) + p.alpha - 1, k1) * gen_binomial(Rational(k1 + n1) + p.beta - 1, n1) *
                   carlitz_kernel(2 - k1, 2 - n1, p.alpha2, p.beta2, 2, 1, 1, 1);
    CHECK(lhs != gen_binomial(Rational(2 * 2 + 2) + p.alpha + p.alpha2 - 1, 2) *
                     gen_binomial(Rational(2 + 2) + p.beta + p.beta2 - 1, 2));
}

TEST_CASE("Chu-Vandermonde")
{
    CHECK(chu_vandermonde(2, 2, 2));
    CHECK(chu_vandermonde(-1, 3, 2));
    CHECK(chu_vandermonde(5, 0, 3));
    for (long r = -5; r <= 10; ++r)
        for (long s = -5; s <= 10; ++s)
            for (long k = 0; k <= 30; k += 3) CHECK(chu_vandermonde(r, s, k));
    CHECK(chu_vandermonde(rat(1, 2), rat(-7, 3), 9));
}
