#pragma once

#include <vector>

#include "knotforge/bigint.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/laurent.hpp"

namespace knotforge {

// Jones polynomial, stored in the variable q = t^{1/2}. For knots every
// q-exponent is even, so the value can be reported in t.
class JonesPoly {
public:
    JonesPoly() = default;
    explicit JonesPoly(LaurentPoly in_q) : q_(std::move(in_q)) {}

    const LaurentPoly& in_q() const { return q_; }
    // [exponent, coefficient] pairs in t; throws if a q-exponent is odd.
    std::vector<std::pair<int, BigInt>> t_pairs() const;
    LaurentPoly in_t() const;

    bool operator==(const JonesPoly& rhs) const { return q_ == rhs.q_; }
    bool operator!=(const JonesPoly& rhs) const { return !(*this == rhs); }

private:
    LaurentPoly q_;
};

// Alexander polynomial in unit normal form.
class AlexanderPoly {
public:
    AlexanderPoly() : value_(normalize(LaurentPoly::one())) {}
    explicit AlexanderPoly(UnitNormalForm v) : value_(std::move(v)) {}
    const LaurentPoly& poly() const { return value_.poly(); }
    const UnitNormalForm& normal_form() const { return value_; }
    bool operator==(const AlexanderPoly& rhs) const { return value_ == rhs.value_; }
    bool operator!=(const AlexanderPoly& rhs) const { return !(*this == rhs); }

private:
    UnitNormalForm value_;
};

// Kauffman bracket in the variable A: state sum over all smoothings with
// <unknot> = 1 and loop value -A^2 - A^{-2}. Evaluated by tangle contraction
// with memoization on boundary connectivity; the result is identical to full
// enumeration.
LaurentPoly kauffman_bracket(const PlanarDiagram& d);

// (-A^3)^{-writhe} * <D> with A = t^{-1/4}.
JonesPoly jones(const PlanarDiagram& d);

// Fox-calculus Alexander polynomial from the Wirtinger presentation,
// unit-normalized.
AlexanderPoly alexander(const PlanarDiagram& d);

// |Delta(-1)|
BigInt determinant(const PlanarDiagram& d);

// Fraction-free determinant of a matrix of Laurent polynomials.
LaurentPoly laurent_matrix_det(std::vector<std::vector<LaurentPoly>> m);

}  // namespace knotforge
