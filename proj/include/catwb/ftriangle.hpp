#pragma once

#include "catwb/exactmath.hpp"
#include "catwb/report.hpp"
#include "catwb/rootdata.hpp"

#include <vector>

namespace catwb {

struct Limits;

struct FTriangle {
    RootSystemType type;
    MPoly poly;     // symbolic in m
};

// Closed forms per family; products multiply.
FTriangle f_closed(const RootSystemType& t);
MPoly f_type_a(int n);
MPoly f_type_b(int n);
// Valid for n >= 2; the small cases agree with A1^2 and A3.
MPoly f_type_d(int n);
MPoly f_dihedral(int a);

UPoly refined_face_number(const RootSystemType& t, int k, int l);

// d/dy F against the sum of F over the deletion types.
VerificationReport check_recurrence(const RootSystemType& t);

// Coefficient of x^k in F(x, x).
UPoly row_sum(const RootSystemType& t, int k);
// Closed row sums for irreducible A, B, D; UnsupportedType otherwise.
UPoly row_sum_closed(const RootSystemType& t, int k);

// (-1)^n F(-1-x, -1-y)
MPoly dual_f_triangle(const RootSystemType& t);

// Symbolic Fuss-Narayana numbers for irreducible A_n and B_n, indexed by rank 0..n.
std::vector<UPoly> narayana_closed(const RootSystemType& t);
// Sum of Nar^m(k+l)/Nar^1(k+l) f_{k,l} x^k y^l with the given Narayana vectors.
MPoly dual_rhs(const MPoly& F, const std::vector<UPoly>& nar_m, const std::vector<Rational>& nar_1);

// Symbolic check for A_n, B_n with the closed Narayana numbers.
VerificationReport verify_dual(const RootSystemType& t);
// Concrete-m check with Narayana numbers from the rank census of NC^m.
VerificationReport verify_dual(const RootSystemType& t, long m_value, const Limits& limits);

} // namespace catwb
