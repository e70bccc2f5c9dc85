#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catwb {

// Always reduced with a positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);       // "p/q", q = 1 included
std::string to_display(const Rational& q);      // "p" or "p/q"
bool is_integer(const Rational& q);
long to_long(const Rational& q);                // throws unless an integer fitting in long

// a + b*sqrt(5)
struct QuadExt {
    Rational a, b;

    QuadExt() = default;
    QuadExt(long v) : a(v), b(0) {}
    QuadExt(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

    static QuadExt golden();    // (1 + sqrt5)/2

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    QuadExt conj() const { return {a, -b}; }
    Rational norm() const { return a * a - 5 * b * b; }
    int sign() const;           // sign as a real number

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);
    friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
    friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
    friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
    friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }
    QuadExt operator-() const { return {-a, -b}; }
    friend bool operator==(const QuadExt& l, const QuadExt& r) { return l.a == r.a && l.b == r.b; }
    bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
};

std::string to_string(const QuadExt& q);

// Univariate polynomial with rational coefficients, ascending powers; trailing zeros trimmed.
class UPoly {
public:
    UPoly() = default;
    UPoly(long c);
    UPoly(const Rational& c);
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly var();                    // the indeterminate
    static UPoly monomial(const Rational& c, int power);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& v) const;
    UPoly compose(const UPoly& inner) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rational& s);
    friend UPoly operator+(UPoly l, const UPoly& r) { return l += r; }
    friend UPoly operator-(UPoly l, const UPoly& r) { return l -= r; }
    friend UPoly operator*(UPoly l, const UPoly& r) { return l *= r; }
    friend UPoly operator*(UPoly l, const Rational& s) { return l *= s; }
    friend UPoly operator*(const Rational& s, UPoly l) { return l *= s; }
    UPoly operator-() const;
    friend bool operator==(const UPoly& l, const UPoly& r) { return l.c_ == r.c_; }

    bool nonnegative_coeffs() const;
    std::string to_string(char var = 'm') const;

private:
    void trim();
    std::vector<Rational> c_;
};

UPoly pow(const UPoly& p, int e);
// Lagrange interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

using MUniPoly = UPoly;

// Sparse polynomial in x, y with coefficients in Q[m].
class MPoly {
public:
    using Key = std::pair<int, int>;   // (deg_x, deg_y)
    using Terms = std::map<Key, UPoly>;

    MPoly() = default;
    MPoly(long c);
    MPoly(const UPoly& c);

    static MPoly x();
    static MPoly y();
    static MPoly m();
    static MPoly term(int dx, int dy, const UPoly& c);

    const Terms& terms() const { return t_; }
    UPoly coeff(int dx, int dy) const;
    void add_term(int dx, int dy, const UPoly& c);

    bool is_zero() const { return t_.empty(); }
    int total_degree() const;    // -1 for zero
    int degree_x() const;
    int degree_y() const;

    MPoly eval_m(const Rational& m) const;
    MPoly deriv_y() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const UPoly& s);
    friend MPoly operator+(MPoly l, const MPoly& r) { return l += r; }
    friend MPoly operator-(MPoly l, const MPoly& r) { return l -= r; }
    friend MPoly operator*(const MPoly& l, const MPoly& r) { MPoly o = l; o *= r; return o; }
    friend MPoly operator*(MPoly l, const UPoly& s) { return l *= s; }
    friend MPoly operator*(const UPoly& s, MPoly l) { return l *= s; }
    MPoly operator-() const;
    friend bool operator==(const MPoly& l, const MPoly& r) { return l.t_ == r.t_; }

    // Largest m-degree over all coefficients.
    int degree_m() const;
    bool nonnegative_coeffs() const;

private:
    Terms t_;
};

MPoly pow(const MPoly& p, int e);
// p(x, y) -> p(ax + b, cy + d) with constant rational a, b, c, d.
MPoly affine_substitute(const MPoly& p, const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d);

// N(N-1)...(N-K+1)/K! for K >= 0, zero for K < 0.
UPoly gen_binomial(const UPoly& N, long K);
Rational gen_binomial(const Rational& N, long K);
inline Rational binom(long N, long K) { return gen_binomial(Rational(N), K); }

// (1 - xy)^n F(x(1+y)/(1-xy), xy/(1-xy)); DegreeError if deg F > n.
MPoly poly_eval_m(const MPoly& p, long m_value);
MPoly substitute_fm(const MPoly& F, int n);

} // namespace catwb
