#pragma once

#include "catwb/exactmath.hpp"
#include "catwb/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace catwb {

struct CarlitzParams {
    long a = 1, b = 1, c = 1, d = 1;
    Rational alpha, beta;       // first kernel
    Rational alpha2, beta2;     // second kernel

    json to_json() const;
};

// (bk alpha + cn beta + alpha beta) / ((ak + cn + alpha)(bk + dn + beta)) C(ak+cn+alpha, k) C(bk+dn+beta, n).
// SingularPoint when a denominator form vanishes.
Rational carlitz_kernel(long k, long n, const Rational& alpha, const Rational& beta, long a, long b, long c, long d);
// Polynomial continuation in alpha and beta; defined everywhere.
Rational carlitz_kernel_regularized(long k, long n, const Rational& alpha, const Rational& beta, long a, long b,
                                    long c, long d);

// Double-sum convolutions; exact comparison of both sides.
bool check_carlitz_convolution(const CarlitzParams& p, long k, long n, bool regularized = false);
bool check_carlitz_binomial(const CarlitzParams& p, long k, long n, bool regularized = false);

bool chu_vandermonde(const Rational& r, const Rational& s, long k);

// Kernel convolved with kernel, or shifted binomials convolved with kernel.
enum class CarlitzIdentity { Convolution, Binomial };

struct CarlitzCase {
    std::string name;
    CarlitzIdentity identity = CarlitzIdentity::Convolution;
    bool regularized = false;
    CarlitzParams params;
    long k = 0, n = 0;

    json to_json() const;
};

struct SuiteResult {
    long total = 0;
    long passed = 0;
    long skipped = 0;               // singular draws
    std::vector<json> failures;     // parameter dumps

    bool ok() const { return passed + skipped == total && failures.empty(); }
};

// Instantiations used for A_n, B_n and D_n at a given m, over a small (l, l1, k, n) grid.
std::vector<CarlitzCase> named_carlitz_cases(long m);
SuiteResult run_carlitz_cases(const std::vector<CarlitzCase>& cases);
// Both identities on `draws` seeded draws: 1 <= a,b,c,d <= 4, 1 <= alpha,beta,alpha',beta' <= 6, k + n <= 10.
SuiteResult carlitz_random_suite(uint64_t seed, int draws = 200);

} // namespace catwb
