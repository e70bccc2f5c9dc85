#include "catwb/polyparse.hpp"
#include "catwb/errors.hpp"

#include <cctype>

namespace catwb {

namespace {

class Parser {
public:
    Parser(std::string_view s, const std::map<char, Rational>& b) : s_(s), bind_(b) {}

    MPoly run()
    {
        MPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip()
    {
        for (;;) {
            while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (s_.substr(pos_, 2) == "\\\\" || s_.substr(pos_, 2) == "\\," || s_.substr(pos_, 2) == "\\!" ||
                s_.substr(pos_, 2) == "\\;") {
                pos_ += 2;
                continue;
            }
            break;
        }
    }

    bool at_command(std::string_view cmd)
    {
        skip();
        if (s_.substr(pos_, cmd.size()) != cmd) return false;
        size_t after = pos_ + cmd.size();
        return after >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[after]));
    }

    bool eat_command(std::string_view cmd)
    {
        if (!at_command(cmd)) return false;
        pos_ += cmd.size();
        return true;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool starts_factor()
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
            c == '(' || c == '{')
            return true;
        return at_command("\\frac") || at_command("\\binom") || at_command("\\left");
    }

    MPoly expr()
    {
        MPoly r;
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        r = term();
        if (neg) r = -r;
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            MPoly t = term();
            if (c == '+')
                r += t;
            else
                r -= t;
        }
        return r;
    }

    MPoly term()
    {
        MPoly r = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                r *= factor();
            } else if (eat_command("\\cdot")) {
                r *= factor();
            } else if (starts_factor()) {
                r *= factor();
            } else {
                break;
            }
        }
        return r;
    }

    long exponent()
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ++pos_;
            return c - '0';
        }
        if (c == '{') {
            ++pos_;
            MPoly e = expr();
            expect('}');
            return constant_integer(e);
        }
        fail("bad exponent");
    }

    long constant_integer(const MPoly& p)
    {
        Rational v = constant_of(p);
        if (!is_integer(v) || v < 0) fail("exponent must be a non-negative integer");
        return to_long(v);
    }

    Rational constant_of(const MPoly& p)
    {
        if (p.is_zero()) return 0;
        if (p.terms().size() != 1 || p.terms().begin()->first != MPoly::Key{0, 0} ||
            !p.terms().begin()->second.is_constant())
            fail("expected a constant");
        return p.terms().begin()->second.coeff(0);
    }

    UPoly m_only(const MPoly& p)
    {
        if (p.is_zero()) return UPoly();
        if (p.terms().size() != 1 || p.terms().begin()->first != MPoly::Key{0, 0})
            fail("binomial upper argument must involve m only");
        return p.terms().begin()->second;
    }

    // Braced group, or a single digit/letter token as TeX reads macro arguments.
    MPoly argument()
    {
        char c = peek();
        if (c == '{') {
            ++pos_;
            MPoly r = expr();
            expect('}');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ++pos_;
            return MPoly(c - '0');
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            return variable(c);
        }
        fail("bad macro argument");
    }

    MPoly variable(char c)
    {
        switch (c) {
        case 'x': return MPoly::x();
        case 'y': return MPoly::y();
        case 'm': return MPoly::m();
        default: break;
        }
        auto it = bind_.find(c);
        if (it == bind_.end()) fail(std::string("unbound variable '") + c + "'");
        return MPoly(UPoly(it->second));
    }

    MPoly primary()
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MPoly(UPoly(Rational(Integer(std::string(s_.substr(start, pos_ - start))))));
        }
        if (c == '(') {
            ++pos_;
            MPoly r = expr();
            expect(')');
            return r;
        }
        if (c == '{') {
            ++pos_;
            MPoly r = expr();
            expect('}');
            return r;
        }
        if (eat_command("\\left")) {
            expect('(');
            MPoly r = expr();
            if (!eat_command("\\right")) fail("expected \\right");
            expect(')');
            return r;
        }
        if (eat_command("\\frac")) {
            MPoly num = argument();
            Rational den = constant_of(argument());
            if (sgn(den) == 0) fail("division by zero");
            return num * UPoly(Rational(1 / den));
        }
        if (eat_command("\\binom")) {
            UPoly top = m_only(argument());
            return MPoly(gen_binomial(top, constant_integer(argument())));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            return variable(c);
        }
        fail("unexpected character");
    }

    MPoly factor()
    {
        MPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            return pow(base, static_cast<int>(exponent()));
        }
        return base;
    }

    std::string_view s_;
    const std::map<char, Rational>& bind_;
    size_t pos_ = 0;
};

} // namespace

MPoly parse_mpoly(std::string_view text, const std::map<char, Rational>& bindings)
{
    return Parser(text, bindings).run();
}

} // namespace catwb
