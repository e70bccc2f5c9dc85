#include "catwb/errors.hpp"
#include "catwb/fmverify.hpp"
#include "catwb/ftriangle.hpp"
#include "catwb/ncposet.hpp"
#include "catwb/serialize.hpp"
#include "golden.hpp"

#include <doctest.h>

#include <set>

using namespace catwb;

namespace {

RootSystemType T(const std::string& s) { return RootSystemType::parse(s); }

} // namespace

TEST_CASE("transformed F-triangle of A1")
{
    MPoly m = MPoly::m(), x = MPoly::x(), y = MPoly::y();
    CHECK(fm_lhs(T("A1")) == MPoly(1) + m * x + m * x * y);
    CHECK(fm_lhs_type_a(1) == fm_lhs(T("A1")));
}

TEST_CASE("transformed F-triangles match the golden displays")
{
    for (auto [type, file] : std::vector<std::pair<std::string, std::string>>{
             {"H3", "fm_h3.tex"}, {"H4", "fm_h4.tex"}, {"F4", "fm_f4.tex"}, {"E6", "fm_e6.tex"}}) {
        CAPTURE(type);
        MPoly g = golden_poly(file);
        CHECK(fm_lhs(T(type)) == g);
        CHECK(mpoly_to_json(fm_lhs(T(type))).dump() == mpoly_to_json(g).dump());
    }
}

TEST_CASE("dihedral transform is affine in a")
{
    std::map<std::pair<std::pair<int, int>, int>, std::vector<Rational>> samples;
    std::vector<Rational> as;
    for (int a = 3; a <= 10; ++a) {
        CAPTURE(a);
        MPoly p = fm_lhs(RootSystemType::dihedral(a));
        CHECK(p == golden_poly("fm_i2a.tex", {{'a', a}}));
        as.emplace_back(a);
        for (int dx = 0; dx <= 2; ++dx)
            for (int dy = 0; dy <= 2; ++dy)
                for (int e = 0; e <= 2; ++e) samples[{{dx, dy}, e}].push_back(p.coeff(dx, dy).coeff(e));
    }
    for (const auto& [key, vals] : samples) CHECK(interpolate(as, vals).degree() <= 1);
}

TEST_CASE("closed classical forms")
{
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(verify_fm(RootSystemType(Family::A, n), FmMode::Closed).equal);
        if (n >= 2) CHECK(verify_fm(RootSystemType(Family::B, n), FmMode::Closed).equal);
        if (n >= 4) CHECK(verify_fm(RootSystemType(Family::D, n), FmMode::Closed).equal);
    }
    // the D_n double sum at n = 2, 3 agrees with the aliased types
    CHECK(fm_lhs_type_d(2) == fm_lhs(T("A1xA1")));
    CHECK(fm_lhs_type_d(3) == fm_lhs(T("A3")));
    CHECK_THROWS_AS(fm_lhs_closed_classical(T("H3")), UnsupportedType);
}

TEST_CASE("formula mode")
{
    for (const char* s : {"I2(3)", "I2(5)", "I2(8)", "H3", "B3", "D4"}) {
        CAPTURE(std::string(s));
        CHECK(verify_fm(T(s), FmMode::Formula).equal);
    }
    CHECK(verify_fm(T("A1xI2(5)"), FmMode::Formula).equal);
}

TEST_CASE("brute mode and reports")
{
    auto r = verify_fm(T("D4"), FmMode::Brute, 1);
    CHECK(r.equal);
    CHECK(r.mode == "brute");
    json j = r.to_json();
    CHECK(j["m"] == 1);
    CHECK(j["first_diff"].is_null());
    CHECK(j["lhs_hash"] == j["rhs_hash"]);
    CHECK_THROWS(verify_fm(T("A2"), FmMode::Brute));
    CHECK(verify_fm(T("A1xA2"), FmMode::Brute, 2).equal);
    CHECK_THROWS_AS(parse_fm_mode("fast"), ParseError);
}

TEST_CASE("type D at general m is reported empirically")
{
    for (long m = 1; m <= 3; ++m) CHECK(verify_fm_dn_general(2, m).equal);
    auto r1 = verify_fm_dn_general(4, 1);
    CHECK(r1.equal);
    CHECK_FALSE(r1.empirical);
    auto r2 = verify_fm_dn_general(4, 2);
    CHECK(r2.empirical);
    CHECK(r2.to_json()["empirical"] == true);
}
