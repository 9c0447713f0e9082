#pragma once

#include <string>
#include <vector>

#include "knotforge/invariants.hpp"
#include "knotforge/laurent.hpp"
#include "knotforge/rational.hpp"

namespace knotforge {

using IntMatrix = std::vector<std::vector<long long>>;
using IntVector = std::vector<long long>;

// Genus-g surface with one boundary component; omega is the intersection
// form on H_1 (skew-symmetric, determinant 1).
struct SurfaceModel {
    int genus = 0;
    int boundary_components = 1;
    IntMatrix omega;
};

// Simple closed curve known by its homology class on the fixed surface.
struct CurveClass {
    std::string name;
    IntVector h1;
};

// Dehn-twist word; letters are stored left to right as written, and the
// rightmost letter acts first.
struct TwistLetter {
    CurveClass curve;
    int exponent = 0;
};

struct TwistWord {
    std::vector<TwistLetter> letters;
};

// Contact (+-1)-surgery data: symmetric linking matrix, rotation numbers,
// and the number q of (+1)-contact-surgery components.
struct SurgeryDescription {
    IntMatrix linking;
    IntVector rotations;
    int q = 0;

    size_t size() const { return rotations.size(); }
};

// The fixed genus-2 model underlying the fibered family: four Hopf-band core
// curves a, b, c, d chained in order, plus the twist-region curves.
const SurfaceModel& genus2_surface();
const std::vector<CurveClass>& named_curves();  // a, b, c, d, e, c'1, c'2
CurveClass curve(const std::string& name);

// Monodromy of the untwisted fibered knot: t_d^{-1} t_b t_c^{-1} t_a.
TwistWord base_monodromy_word();
// Monodromy after n annulus twists: t_{c'2}^n t_{c'1}^{-n} prepended.
TwistWord word_for_An(int n);

// Homological shadow of the right-handed Dehn twist along c:
// x -> x + <x, [c]> [c].
IntMatrix transvection(const CurveClass& c);

// Ordered product of transvection powers for a word.
IntMatrix homological_action(const TwistWord& w);

// det(tI - h_*), unit-normalized.
AlexanderPoly alexander_from_monodromy(const TwistWord& w);

// Signature of a symmetric integer matrix by exact congruence
// diagonalization over the rationals.
int signature(const IntMatrix& m);

// d3 = (x.r - 3*signature(M) - 2(1+k))/4 + q where M x = r.
// Throws math_error when the linking matrix is singular.
Rational d3(const SurgeryDescription& desc);

// Surgery description of the contact structure supported by the open book
// (F, f_n); one +-1-contact-surgery component per expanded twist letter.
SurgeryDescription family_surgery_description(int n, int bound = 8);

// d3 of the family's contact structure, computed through the description.
Rational family_d3(int n);

// Whether the n-th and m-th twists give the same fibered knot:
// n == m or n + m == -1.
bool same_fibered_knot(int n, int m);

IntMatrix identity_matrix(size_t n);
IntMatrix matrix_mul(const IntMatrix& a, const IntMatrix& b);

}  // namespace knotforge
