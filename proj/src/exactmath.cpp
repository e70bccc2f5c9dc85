#include "catwb/exactmath.hpp"
#include "catwb/errors.hpp"

#include <algorithm>
#include <climits>
#include <optional>

namespace catwb {

Rational rat(long num, long den)
{
    if (den == 0) throw Error("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto bad = [&] { return ParseError("not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw bad();
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display(const Rational& q)
{
    return q.get_den() == 1 ? q.get_num().get_str() : to_string(q);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p()) throw Error("not a machine integer: " + to_string(q));
    return q.get_num().get_si();
}

// ---------------------------------------------------------------- QuadExt

QuadExt QuadExt::golden() { return {rat(1, 2), rat(1, 2)}; }

int QuadExt::sign() const
{
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 5 b^2
    int c = cmp(Rational(a * a), Rational(5 * b * b));
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) { a += o.a; b += o.b; return *this; }
QuadExt& QuadExt::operator-=(const QuadExt& o) { a -= o.a; b -= o.b; return *this; }

QuadExt& QuadExt::operator*=(const QuadExt& o)
{
    Rational na = a * o.a + 5 * b * o.b;
    Rational nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o)
{
    Rational n = o.norm();
    if (sgn(n) == 0) throw Error("QuadExt: division by zero");
    *this *= o.conj();
    a /= n;
    b /= n;
    return *this;
}

std::string to_string(const QuadExt& q)
{
    if (sgn(q.b) == 0) return to_display(q.a);
    return to_display(q.a) + (sgn(q.b) > 0 ? "+" : "") + to_display(q.b) + "*sqrt5";
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(long c)
{
    if (c != 0) c_.emplace_back(c);
}

UPoly::UPoly(const Rational& c)
{
    if (sgn(c) != 0) {
        c_.push_back(c);
        c_.back().canonicalize();
    }
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    for (auto& v : c_) v.canonicalize();
    trim();
}

UPoly UPoly::var() { return UPoly(std::vector<Rational>{0, 1}); }

UPoly UPoly::monomial(const Rational& c, int power)
{
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rational UPoly::eval(const Rational& v) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
    return r;
}

UPoly UPoly::compose(const UPoly& inner) const
{
    UPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + UPoly(*it);
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

UPoly UPoly::operator-() const
{
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

bool UPoly::nonnegative_coeffs() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return sgn(v) >= 0; });
}

std::string UPoly::to_string(char var) const
{
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& v = c_[i];
        if (sgn(v) == 0) continue;
        Rational a = abs(v);
        if (out.empty())
            out += sgn(v) < 0 ? "-" : "";
        else
            out += sgn(v) < 0 ? " - " : " + ";
        bool unit = a == 1 && i > 0;
        if (!unit) out += to_display(a);
        if (i > 0) {
            if (!unit) out += " ";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UPoly pow(const UPoly& p, int e)
{
    UPoly r(1);
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    UPoly r;
    for (size_t i = 0; i < xs.size(); ++i) {
        UPoly basis(1);
        Rational denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= UPoly(std::vector<Rational>{-xs[j], 1});
            denom *= xs[i] - xs[j];
        }
        r += basis * Rational(ys[i] / denom);
    }
    return r;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(long c) { add_term(0, 0, UPoly(c)); }
MPoly::MPoly(const UPoly& c) { add_term(0, 0, c); }

MPoly MPoly::x() { return term(1, 0, UPoly(1)); }
MPoly MPoly::y() { return term(0, 1, UPoly(1)); }
MPoly MPoly::m() { return MPoly(UPoly::var()); }

MPoly MPoly::term(int dx, int dy, const UPoly& c)
{
    MPoly p;
    p.add_term(dx, dy, c);
    return p;
}

UPoly MPoly::coeff(int dx, int dy) const
{
    auto it = t_.find({dx, dy});
    return it == t_.end() ? UPoly() : it->second;
}

void MPoly::add_term(int dx, int dy, const UPoly& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace({dx, dy}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

int MPoly::total_degree() const
{
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
}

int MPoly::degree_x() const
{
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
}

int MPoly::degree_y() const
{
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

int MPoly::degree_m() const
{
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, c.degree());
    return d;
}

bool MPoly::nonnegative_coeffs() const
{
    return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.nonnegative_coeffs(); });
}

MPoly MPoly::eval_m(const Rational& m) const
{
    MPoly r;
    for (const auto& [k, c] : t_) r.add_term(k.first, k.second, UPoly(c.eval(m)));
    return r;
}

MPoly MPoly::deriv_y() const
{
    MPoly r;
    for (const auto& [k, c] : t_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rational(k.second));
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o)
{
    MPoly r;
    for (const auto& [k1, c1] : t_)
        for (const auto& [k2, c2] : o.t_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    t_ = std::move(r.t_);
    return *this;
}

MPoly& MPoly::operator*=(const UPoly& s)
{
    MPoly r;
    for (const auto& [k, c] : t_) r.add_term(k.first, k.second, c * s);
    t_ = std::move(r.t_);
    return *this;
}

MPoly MPoly::operator-() const
{
    MPoly r;
    for (const auto& [k, c] : t_) r.add_term(k.first, k.second, -c);
    return r;
}

MPoly pow(const MPoly& p, int e)
{
    MPoly r(1);
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

MPoly affine_substitute(const MPoly& p, const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d)
{
    int dx = std::max(p.degree_x(), 0), dy = std::max(p.degree_y(), 0);
    MPoly X = MPoly::term(1, 0, UPoly(a)) + MPoly(UPoly(b));
    MPoly Y = MPoly::term(0, 1, UPoly(c)) + MPoly(UPoly(d));
    std::vector<MPoly> xp{MPoly(1)}, yp{MPoly(1)};
    for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * X);
    for (int i = 1; i <= dy; ++i) yp.push_back(yp.back() * Y);
    MPoly r;
    for (const auto& [k, co] : p.terms()) r += xp[k.first] * yp[k.second] * co;
    return r;
}

UPoly gen_binomial(const UPoly& N, long K)
{
    if (K < 0) return UPoly();
    UPoly r(1);
    Integer fact = 1;
    for (long i = 0; i < K; ++i) {
        r *= N - UPoly(i);
        fact *= i + 1;
    }
    return r * Rational(Integer(1), fact);
}

Rational gen_binomial(const Rational& N, long K)
{
    if (K < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < K; ++i) r *= (N - i) / Rational(i + 1);
    return r;
}

MPoly poly_eval_m(const MPoly& p, long m_value)
{
    if (m_value < 0) throw Error("poly_eval_m: m must be non-negative");
    return p.eval_m(m_value);
}

namespace {

// Exact division by (1 - xy); nullopt when a remainder is left.
std::optional<MPoly> divide_one_minus_xy(const MPoly& p)
{
    // Terms along each diagonal dx - dy = const form a polynomial in t = xy.
    std::map<int, std::map<int, UPoly>> diag;
    for (const auto& [k, c] : p.terms()) diag[k.first - k.second][std::min(k.first, k.second)] = c;
    MPoly q;
    for (auto& [delta, poly] : diag) {
        // q(t) = p(t) / (1 - t): q_i = p_i + q_{i-1}, remainder must vanish past the top degree.
        int top = poly.rbegin()->first;
        UPoly carry;
        for (int i = 0; i <= top; ++i) {
            auto it = poly.find(i);
            UPoly cur = carry + (it == poly.end() ? UPoly() : it->second);
            if (i == top) {
                if (!cur.is_zero()) return std::nullopt;
                break;
            }
            int dx = delta >= 0 ? i + delta : i;
            int dy = delta >= 0 ? i : i - delta;
            q.add_term(dx, dy, cur);
            carry = cur;
        }
    }
    return q;
}

} // namespace

MPoly substitute_fm(const MPoly& F, int n)
{
    // Each monomial x^k y^l becomes x^k (1+y)^k (xy)^l / (1-xy)^(k+l). Bring everything over
    // the common denominator (1-xy)^D, D = deg F, then cancel against (1-xy)^n.
    int D = std::max(F.total_degree(), 0);
    MPoly one_y = MPoly(1) + MPoly::y();
    MPoly one_mxy = MPoly(1) - MPoly::term(1, 1, UPoly(1));
    std::vector<MPoly> ypow{MPoly(1)}, dpow{MPoly(1)};
    for (int i = 1; i <= std::max(D, n); ++i) {
        ypow.push_back(ypow.back() * one_y);
        dpow.push_back(dpow.back() * one_mxy);
    }
    MPoly numer;
    for (const auto& [key, c] : F.terms()) {
        auto [k, l] = key;
        numer += MPoly::term(k + l, l, c) * ypow[k] * dpow[D - k - l];
    }
    if (D <= n) return numer * dpow[n - D];
    for (int i = n; i < D; ++i) {
        auto q = divide_one_minus_xy(numer);
        if (!q)
            throw DegreeError("substitute_fm: total degree " + std::to_string(D) + " exceeds rank " +
                              std::to_string(n) + " and the denominator does not clear");
        numer = std::move(*q);
    }
    return numer;
}

} // namespace catwb
