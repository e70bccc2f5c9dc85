#include "catwb/serialize.hpp"
#include "catwb/errors.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <vector>

namespace catwb {

json upoly_to_json(const UPoly& p)
{
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

UPoly upoly_from_json(const json& j)
{
    if (!j.is_array()) throw ParseError("coefficient list must be an array");
    std::vector<Rational> v;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError("coefficients must be rational strings");
        v.push_back(parse_rational(e.get<std::string>()));
    }
    return UPoly(std::move(v));
}

json mpoly_to_json(const MPoly& p)
{
    json arr = json::array();
    for (const auto& [k, c] : p.terms())
        arr.push_back(json{{"dx", k.first}, {"dy", k.second}, {"coeff", upoly_to_json(c)}});
    return arr;
}

MPoly mpoly_from_json(const json& j)
{
    if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
    MPoly p;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("dx") || !t.contains("dy") || !t.contains("coeff"))
            throw ParseError("malformed polynomial term");
        int dx = t.at("dx").get<int>(), dy = t.at("dy").get<int>();
        if (dx < 0 || dy < 0) throw ParseError("negative exponent");
        p.add_term(dx, dy, upoly_from_json(t.at("coeff")));
    }
    return p;
}

namespace {

std::string latex_rational(const Rational& a)
{
    if (is_integer(a)) return a.get_num().get_str();
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string latex_power(char var, int e)
{
    if (e == 0) return "";
    std::string s(1, var);
    if (e > 1) s += e < 10 ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}";
    return s;
}

// Writes a polynomial in `var` without a leading sign; returns its sign via `negative`.
std::string latex_upoly_body(const UPoly& p, char var, bool& negative)
{
    std::string out;
    negative = false;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& v = p.coeffs()[i];
        if (sgn(v) == 0) continue;
        Rational a = abs(v);
        if (first) {
            negative = sgn(v) < 0;
        } else {
            out += sgn(v) < 0 ? "-" : "+";
        }
        first = false;
        std::string mono = latex_power(var, i);
        if (a != 1 || mono.empty()) out += latex_rational(a) + (mono.empty() ? "" : " ");
        out += mono;
    }
    return out;
}

} // namespace

std::string upoly_to_latex(const UPoly& p, char var)
{
    if (p.is_zero()) return "0";
    bool neg;
    std::string body = latex_upoly_body(p, var, neg);
    return (neg ? "-" : "") + body;
}

std::string mpoly_to_latex(const MPoly& p)
{
    if (p.is_zero()) return "0";
    std::vector<MPoly::Key> keys;
    for (const auto& [k, c] : p.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const MPoly::Key& a, const MPoly::Key& b) {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& k : keys) {
        const UPoly& c = p.terms().at(k);
        std::string mono = latex_power('x', k.first);
        std::string ym = latex_power('y', k.second);
        if (!mono.empty() && !ym.empty()) mono += " ";
        mono += ym;
        bool neg = false;
        std::string coeff;
        int nonzero = static_cast<int>(std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                                     [](const Rational& v) { return sgn(v) != 0; }));
        if (nonzero == 1) {
            coeff = latex_upoly_body(c, 'm', neg);
            if (coeff == "1" && !mono.empty()) coeff.clear();
        } else {
            coeff = "(" + latex_upoly_body(c, 'm', neg) + ")";
            if (neg) {
                coeff = "(" + latex_upoly_body(-c, 'm', neg) + ")";
                neg = true;
            }
        }
        std::string termtext = coeff;
        if (!coeff.empty() && !mono.empty()) termtext += " ";
        termtext += mono;
        if (out.empty())
            out += neg ? "-" + termtext : termtext;
        else
            out += (neg ? " - " : " + ") + termtext;
    }
    return out;
}

std::string mpoly_to_csv(const MPoly& p)
{
    std::string out = "k,l,coefficient\n";
    for (const auto& [k, c] : p.terms())
        out += std::to_string(k.first) + "," + std::to_string(k.second) + "," + c.to_string('m') + "\n";
    return out;
}

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

std::string mpoly_hash(const MPoly& p) { return sha256_hex(mpoly_to_json(p).dump()); }

} // namespace catwb
