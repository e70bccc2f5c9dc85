#include "catwb/errors.hpp"
#include "catwb/exactmath.hpp"
#include "catwb/polyparse.hpp"
#include "catwb/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace catwb;

namespace {

Integer factorial(long n)
{
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

MPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> deg(0, 2), c(-3, 3);
    MPoly p;
    for (int i = 0; i < 4; ++i) {
        std::vector<Rational> cs{Rational(c(rng)), Rational(c(rng), 2)};
        p.add_term(deg(rng), deg(rng), UPoly(cs));
    }
    return p;
}

} // namespace

TEST_CASE("generalized binomial")
{
    CHECK(binom(5, 2) == 10);
    CHECK(gen_binomial(UPoly::var() * Rational(2), 1) == UPoly::var() * Rational(2));
    CHECK(binom(-1, 2) == 1);
    CHECK(gen_binomial(UPoly::var(), -1).is_zero());
    for (long N = 0; N <= 30; ++N)
        for (long K = 0; K <= N; ++K)
            CHECK(binom(N, K) == Rational(factorial(N) / (factorial(K) * factorial(N - K))));
}

TEST_CASE("rational parsing and printing")
{
    CHECK(to_string(rat(3, 6)) == "1/2");
    CHECK(to_string(rat(4)) == "4/1");
    CHECK(parse_rational("-6/4") == rat(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("quadratic field")
{
    QuadExt t = QuadExt::golden();
    CHECK(t * t == t + QuadExt(1));
    CHECK((t - QuadExt(1)) * t == QuadExt(1));
    CHECK(t.sign() > 0);
    CHECK((QuadExt(1) - t).sign() < 0);
    CHECK(QuadExt(Rational(0), Rational(1)) * QuadExt(Rational(0), Rational(1)) == QuadExt(5));
}

TEST_CASE("poly_eval_m")
{
    MPoly p = MPoly::m() * MPoly::x() + MPoly::y() + MPoly(1);
    CHECK(poly_eval_m(p, 2) == parse_mpoly("2x+y+1"));
    CHECK(poly_eval_m(p, 0) == parse_mpoly("y+1"));
}

TEST_CASE("substitute_fm small cases")
{
    CHECK(substitute_fm(MPoly(1), 0) == MPoly(1));
    MPoly a1 = parse_mpoly("mx+y+1");
    CHECK(substitute_fm(a1, 1) == parse_mpoly("1+mx+mxy"));
    CHECK_THROWS_AS(substitute_fm(parse_mpoly("x^2"), 1), DegreeError);
}

TEST_CASE("substitute_fm is multiplicative")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        MPoly f = random_poly(rng), g = random_poly(rng);
        int nf = std::max(f.total_degree(), 0), ng = std::max(g.total_degree(), 0);
        CHECK(substitute_fm(f * g, nf + ng) == substitute_fm(f, nf) * substitute_fm(g, ng));
        CHECK(substitute_fm(f + g, std::max(nf, ng)) ==
              substitute_fm(f, std::max(nf, ng)) + substitute_fm(g, std::max(nf, ng)));
    }
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        for (long mv = 0; mv < 3; ++mv)
            CHECK(poly_eval_m(a * b, mv) == poly_eval_m(a, mv) * poly_eval_m(b, mv));
    }
}

TEST_CASE("parser")
{
    CHECK(parse_mpoly("\\frac{m (5 m+2)}{3} x^2") ==
          MPoly::term(2, 0, UPoly(std::vector<Rational>{0, rat(2, 3), rat(5, 3)})));
    CHECK(parse_mpoly("(-x)^2(y^2+ay+a-1)m", {{'a', 4}}) ==
          parse_mpoly("x^2 y^2 m + 4 x^2 y m + 3 x^2 m"));
    CHECK(parse_mpoly("\\binom m2") == MPoly(gen_binomial(UPoly::var(), 2)));
    CHECK(parse_mpoly("\\left(1+y\\right)^{2}") == parse_mpoly("1+2y+y^2"));
    CHECK_THROWS_AS(parse_mpoly("x +* y"), ParseError);
}

TEST_CASE("json round trip and hashing")
{
    MPoly p = parse_mpoly("\\frac{m(3m-1)}{2} x^2 y + 15 m x + y + 1");
    json j = mpoly_to_json(p);
    CHECK(mpoly_from_json(j) == p);
    CHECK(mpoly_from_json(json::parse(j.dump())) == p);
    CHECK(mpoly_hash(p) == mpoly_hash(mpoly_from_json(j)));
    CHECK(mpoly_hash(p).size() == 64);
    CHECK(mpoly_to_latex(parse_mpoly("mx+y+1")) == "m x + y + 1");
    CHECK(mpoly_to_csv(parse_mpoly("mx+1")) == "k,l,coefficient\n0,0,1\n1,0,m\n");
}
