#include "catwb/identities.hpp"
#include "catwb/errors.hpp"

#include <random>

namespace catwb {

namespace {

Rational lin(long a, long k, long c, long n, const Rational& x) { return Rational(a * k + c * n) + x; }

// C(N, k) / N for k >= 1 as C(N-1, k-1) / k
Rational binom_over(const Rational& N, long k) { return gen_binomial(N - 1, k - 1) / Rational(k); }

} // namespace

json CarlitzParams::to_json() const
{
    return {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"alpha", catwb::to_string(alpha)},
            {"beta", catwb::to_string(beta)}, {"alpha2", catwb::to_string(alpha2)},
            {"beta2", catwb::to_string(beta2)}};
}

json CarlitzCase::to_json() const
{
    return {{"name", name}, {"identity", identity == CarlitzIdentity::Convolution ? "convolution" : "binomial"}, {"regularized", regularized}, {"params", params.to_json()},
            {"k", k}, {"n", n}};
}

Rational carlitz_kernel(long k, long n, const Rational& alpha, const Rational& beta, long a, long b, long c, long d)
{
    Rational N1 = lin(a, k, c, n, alpha), N2 = lin(b, k, d, n, beta);
    if (sgn(N1) == 0 || sgn(N2) == 0) throw SingularPoint("kernel denominator vanishes");
    Rational num = Rational(b * k) * alpha + Rational(c * n) * beta + alpha * beta;
    return num / (N1 * N2) * gen_binomial(N1, k) * gen_binomial(N2, n);
}

Rational carlitz_kernel_regularized(long k, long n, const Rational& alpha, const Rational& beta, long a, long b,
                                    long c, long d)
{
    if (k < 0 || n < 0) return 0;
    Rational N1 = lin(a, k, c, n, alpha), N2 = lin(b, k, d, n, beta);
    if (k == 0 && n == 0) return 1;
    // numerator = beta * N1 when k = 0 and alpha * N2 when n = 0
    if (k == 0) return beta * binom_over(N2, n);
    if (n == 0) return alpha * binom_over(N1, k);
    Rational num = Rational(b * k) * alpha + Rational(c * n) * beta + alpha * beta;
    return num * binom_over(N1, k) * binom_over(N2, n);
}

namespace {

Rational kernel(bool reg, long k, long n, const Rational& al, const Rational& be, const CarlitzParams& p)
{
    if (k < 0 || n < 0) return 0;
    return reg ? carlitz_kernel_regularized(k, n, al, be, p.a, p.b, p.c, p.d)
               : carlitz_kernel(k, n, al, be, p.a, p.b, p.c, p.d);
}

} // namespace

bool check_carlitz_convolution(const CarlitzParams& p, long k, long n, bool regularized)
{
    Rational lhs = 0;
    for (long k1 = 0; k1 <= k; ++k1)
        for (long n1 = 0; n1 <= n; ++n1)
            lhs += kernel(regularized, k1, n1, p.alpha, p.beta, p) *
                   kernel(regularized, k - k1, n - n1, p.alpha2, p.beta2, p);
    return lhs == kernel(regularized, k, n, p.alpha + p.alpha2, p.beta + p.beta2, p);
}

bool check_carlitz_binomial(const CarlitzParams& p, long k, long n, bool regularized)
{
    Rational lhs = 0;
    for (long k1 = 0; k1 <= k; ++k1)
        for (long n1 = 0; n1 <= n; ++n1)
            lhs += gen_binomial(lin(p.a, k1, p.c, n1, p.alpha) - 1, k1) *
                   gen_binomial(lin(p.b, k1, p.d, n1, p.beta) - 1, n1) *
                   kernel(regularized, k - k1, n - n1, p.alpha2, p.beta2, p);
    Rational rhs = gen_binomial(lin(p.a, k, p.c, n, p.alpha + p.alpha2) - 1, k) *
                   gen_binomial(lin(p.b, k, p.d, n, p.beta + p.beta2) - 1, n);
    return lhs == rhs;
}

bool chu_vandermonde(const Rational& r, const Rational& s, long k)
{
    Rational lhs = 0;
    for (long j = 0; j <= k; ++j) lhs += gen_binomial(r, j) * gen_binomial(s, k - j);
    return lhs == gen_binomial(r + s, k);
}

std::vector<CarlitzCase> named_carlitz_cases(long m)
{
    struct Shape {
        const char* name;
        CarlitzIdentity eq;
        bool reg;
        long alpha_shift;   // alpha = m (l1 + shift); shift -1 marks the fixed alpha = -m case
        bool fixed;
    };
    const Shape shapes[] = {
        {"typeA-convolution", CarlitzIdentity::Convolution, false, 1, false},
        {"typeB-binomial", CarlitzIdentity::Binomial, false, 0, false},
        {"typeD-binomial-shifted", CarlitzIdentity::Binomial, false, -1, false},
        {"typeD-binomial", CarlitzIdentity::Binomial, false, 0, false},
        {"typeD-convolution-boundary", CarlitzIdentity::Convolution, true, 0, true},
    };
    std::vector<CarlitzCase> out;
    for (const auto& sh : shapes)
        for (long l = 1; l <= 4; ++l)
            for (long l1 = 0; l1 < (sh.fixed ? 1 : l); ++l1)
                for (long k = 0; k <= 6; ++k)
                    for (long n = 0; k + n <= 6; ++n) {
                        CarlitzCase c;
                        c.name = sh.name;
                        c.identity = sh.eq;
                        c.regularized = sh.reg;
                        c.params.a = m + 1;
                        c.params.c = m;
                        c.params.b = c.params.d = 1;
                        if (sh.fixed) {
                            c.params.alpha = -m;
                            c.params.beta = -1;
                            c.params.alpha2 = m * l;
                            c.params.beta2 = l;
                        } else {
                            c.params.alpha = m * (l1 + sh.alpha_shift);
                            c.params.beta = l1 + 1;
                            c.params.alpha2 = m * (l - l1);
                            c.params.beta2 = l - l1;
                        }
                        c.k = k;
                        c.n = n;
                        out.push_back(c);
                    }
    return out;
}

SuiteResult run_carlitz_cases(const std::vector<CarlitzCase>& cases)
{
    SuiteResult r;
    for (const auto& c : cases) {
        ++r.total;
        try {
            bool ok = c.identity == CarlitzIdentity::Convolution ? check_carlitz_convolution(c.params, c.k, c.n, c.regularized)
                                      : check_carlitz_binomial(c.params, c.k, c.n, c.regularized);
            if (ok)
                ++r.passed;
            else
                r.failures.push_back(c.to_json());
        } catch (const SingularPoint&) {
            ++r.skipped;
        }
    }
    return r;
}

SuiteResult carlitz_random_suite(uint64_t seed, int draws)
{
    std::mt19937_64 rng(seed);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    std::vector<CarlitzCase> cases;
    for (int i = 0; i < draws; ++i) {
        CarlitzCase c;
        c.params.a = pick(1, 4);
        c.params.b = pick(1, 4);
        c.params.c = pick(1, 4);
        c.params.d = pick(1, 4);
        c.params.alpha = pick(1, 6);
        c.params.beta = pick(1, 6);
        c.params.alpha2 = pick(1, 6);
        c.params.beta2 = pick(1, 6);
        c.k = pick(0, 10);
        c.n = pick(0, 10 - c.k);
        c.name = "draw-" + std::to_string(i);
        c.identity = CarlitzIdentity::Convolution;
        cases.push_back(c);
        c.identity = CarlitzIdentity::Binomial;
        cases.push_back(c);
    }
    return run_carlitz_cases(cases);
}

} // namespace catwb
