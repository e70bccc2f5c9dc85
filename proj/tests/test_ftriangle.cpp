#include "catwb/errors.hpp"
#include "catwb/ftriangle.hpp"
#include "catwb/polyparse.hpp"
#include "golden.hpp"

#include <doctest.h>

using namespace catwb;

namespace {

RootSystemType T(const std::string& s) { return RootSystemType::parse(s); }

} // namespace

TEST_CASE("small closed forms")
{
    CHECK(f_closed(T("A1")).poly == parse_mpoly("mx+y+1"));
    CHECK(f_closed(T("D2")).poly == parse_mpoly("(mx+y+1)^2"));
    CHECK(f_type_d(2) == f_closed(T("A1xA1")).poly);
    CHECK(f_type_d(3) == f_type_a(3));
    CHECK(f_type_b(1) == f_type_a(1));
    CHECK(f_dihedral(3) == f_type_a(2));
    CHECK(f_dihedral(4) == f_type_b(2));
    CHECK(f_dihedral(2) == f_closed(T("A1xA1")).poly);
    CHECK(refined_face_number(T("D4"), 1, 0) == UPoly::var() * Rational(12));
    CHECK(refined_face_number(T("H3"), 1, 0) == UPoly::var() * Rational(15));
    CHECK(refined_face_number(T("A1"), 0, 0) == UPoly(1));
    CHECK(refined_face_number(T("D4"), 0, 0) == UPoly(1));
    CHECK(refined_face_number(T("A2"), 3, 0).is_zero());
    // f_{2,0}(A_2) = C(3m+1, 2)/3
    CHECK(refined_face_number(T("A2"), 2, 0) == rat(1, 3) * gen_binomial(UPoly::var() * Rational(3) + UPoly(1), 2));
}

TEST_CASE("golden exceptional F-triangles")
{
    for (long a = 3; a <= 10; ++a)
        CHECK(f_closed(RootSystemType::dihedral(static_cast<int>(a))).poly == golden_poly("f_i2a.tex", {{'a', a}}));
    const char* names[][2] = {{"H3", "f_h3.tex"}, {"H4", "f_h4.tex"}, {"F4", "f_f4.tex"},
                              {"E6", "f_e6.tex"}, {"E7", "f_e7.tex"}, {"E8", "f_e8.tex"}};
    for (auto& n : names) {
        CAPTURE(n[0]);
        CHECK(f_closed(T(n[0])).poly == golden_poly(n[1]));
    }
}

TEST_CASE("F-triangle invariants")
{
    const char* types[] = {"A1", "A4", "B3", "D5", "I2(7)", "H3", "H4", "F4", "E6", "E7", "E8", "B2xA3"};
    for (const char* s : types) {
        CAPTURE(s);
        MPoly F = f_closed(T(s)).poly;
        CHECK(F.total_degree() <= T(s).rank());
        CHECK(F.coeff(0, 0) == UPoly(1));
        CHECK(F.nonnegative_coeffs());
        // linear x coefficient is m times the number of positive roots
        CHECK(F.coeff(1, 0) == UPoly::var() * Rational(positive_root_count(T(s))));
    }
    CHECK(f_closed(T("B2xA3")).poly == f_closed(T("B2")).poly * f_closed(T("A3")).poly);
}

TEST_CASE("recurrence")
{
    const char* types[] = {"A1", "A3", "A8", "B2", "B8", "D4", "D8", "I2(5)", "I2(10)", "H3", "H4", "F4", "E6", "E7", "E8"};
    for (const char* s : types) {
        CAPTURE(s);
        CHECK(check_recurrence(T(s)).equal);
    }
    auto r = check_recurrence(T("A3"));
    CHECK(r.rhs == f_closed(T("A2")).poly * MPoly(2) + f_closed(T("A1xA1")).poly);
}

TEST_CASE("row sums")
{
    CHECK(row_sum(T("A5"), 0) == UPoly(1));
    CHECK(row_sum(T("B2"), 2) == (UPoly::var() + UPoly(1)) * (UPoly::var() * Rational(2) + UPoly(1)));
    CHECK(row_sum(T("D4"), 4) == gen_binomial(UPoly::var() * Rational(3) + UPoly(4), 4) +
                                     gen_binomial(UPoly::var() * Rational(3) + UPoly(3), 4));
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(row_sum(T("A" + std::to_string(n)), k) == row_sum_closed(T("A" + std::to_string(n)), k));
            if (n >= 2) CHECK(row_sum(T("B" + std::to_string(n)), k) == row_sum_closed(T("B" + std::to_string(n)), k));
            if (n >= 4) CHECK(row_sum(T("D" + std::to_string(n)), k) == row_sum_closed(T("D" + std::to_string(n)), k));
        }
    CHECK_THROWS_AS(row_sum_closed(T("H3"), 1), UnsupportedType);
}

TEST_CASE("dual F-triangle")
{
    CHECK(dual_f_triangle(T("A1")) == parse_mpoly("m + mx + y"));
    for (int n = 1; n <= 6; ++n) CHECK(verify_dual(T("A" + std::to_string(n))).equal);
    for (int n = 2; n <= 5; ++n) CHECK(verify_dual(T("B" + std::to_string(n))).equal);
}
