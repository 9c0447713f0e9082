#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotforge/bigint.hpp"

namespace knotforge {

// One-variable Laurent polynomial with exact integer coefficients.
// Invariant: the term map never stores a zero coefficient; the zero
// polynomial has an empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(BigInt c) { return monomial(std::move(c), 0); }
    static LaurentPoly constant(long long c) { return monomial(BigInt(c), 0); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly variable() { return monomial(BigInt(1), 1); }
    static LaurentPoly monomial(BigInt c, int exp);

    // Sparse [exponent, coefficient] pairs, ascending exponents.
    static LaurentPoly from_pairs(const std::vector<std::pair<int, BigInt>>& pairs);
    std::vector<std::pair<int, BigInt>> pairs() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const;  // +-t^k
    int min_exp() const;   // throws on zero polynomial
    int max_exp() const;   // throws on zero polynomial
    int span() const { return max_exp() - min_exp(); }
    size_t term_count() const { return terms_.size(); }

    BigInt coeff(int exp) const;
    const std::map<int, BigInt>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    LaurentPoly shifted(int k) const;  // multiply by t^k

    // Evaluation at an integer; requires min_exp() >= 0 unless x is +-1.
    BigInt evaluate(const BigInt& x) const;

    std::string to_string(const std::string& var = "t") const;

    void add_term(int exp, const BigInt& c);

private:
    std::map<int, BigInt> terms_;
};

// t -> t^{-1}
LaurentPoly involute(const LaurentPoly& p);

// Associate normal form: minimum exponent 0, positive lowest coefficient.
// Two Laurent polynomials are associate (equal up to +-t^k) iff their
// normal forms compare equal.
class UnitNormalForm {
public:
    const LaurentPoly& poly() const { return poly_; }
    bool operator==(const UnitNormalForm& rhs) const { return poly_ == rhs.poly_; }
    bool operator!=(const UnitNormalForm& rhs) const { return !(*this == rhs); }

    friend UnitNormalForm normalize(const LaurentPoly& p);

private:
    explicit UnitNormalForm(LaurentPoly p) : poly_(std::move(p)) {}
    LaurentPoly poly_;
};

UnitNormalForm normalize(const LaurentPoly& p);  // throws on zero polynomial
bool associate(const LaurentPoly& p, const LaurentPoly& q);

// Exact Laurent division: returns p/q when q divides p exactly.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q);

// Factorization over the integers. The unit is sign * t^unit_exp; factors
// are irreducible, in normal form, sorted, and constant prime factors carry
// any integer content. sign * t^unit_exp * prod(factors) == input, exactly.
struct Factorization {
    int sign = 1;
    int unit_exp = 0;
    std::vector<LaurentPoly> factors;

    LaurentPoly unit() const { return LaurentPoly::monomial(BigInt(sign), unit_exp); }
    LaurentPoly product() const;
};

Factorization factor(const LaurentPoly& p);  // throws on zero polynomial

// True iff factor(p) yields a single factor of full span. Constants are
// rejected as ill-posed.
bool is_irreducible(const LaurentPoly& p);

// Fox-Milnor witness: f with f(t) * f(t^{-1}) associate to p, if one exists.
std::optional<LaurentPoly> fox_milnor(const LaurentPoly& p);

// True iff some non-unit f in Z[t] satisfies f(t) * f(t^{-1}) | p, decided
// by enumerating sub-multisets of factor(p).
bool miyazaki_divisor(const LaurentPoly& p);

}  // namespace knotforge
