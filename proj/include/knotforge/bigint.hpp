#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotforge {

// Signed arbitrary-precision integer, little-endian limbs in base 10^9.
// Invariant: no trailing zero limbs; value 0 has empty limb vector and sign 0.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    // Truncated division (quotient rounds toward zero, remainder has the
    // sign of the dividend). Throws on division by zero.
    struct DivMod;
    DivMod divmod(const BigInt& rhs) const;
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;

    // Exact division; throws if the remainder is nonzero.
    BigInt div_exact(const BigInt& rhs) const;

    bool operator==(const BigInt& rhs) const;
    bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt& rhs) const;
    bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
    bool operator>(const BigInt& rhs) const { return rhs < *this; }
    bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

    bool fits_int64() const;
    long long to_int64() const;  // throws if out of range
    std::string to_string() const;

    static BigInt gcd(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, unsigned exp);

private:
    int sign_ = 0;
    std::vector<uint32_t> limbs_;

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    void trim();
    static BigInt make(int sign, std::vector<uint32_t> limbs);
};

struct BigInt::DivMod {
    BigInt quot;
    BigInt rem;
};

inline BigInt BigInt::operator/(const BigInt& rhs) const { return divmod(rhs).quot; }
inline BigInt BigInt::operator%(const BigInt& rhs) const { return divmod(rhs).rem; }

}  // namespace knotforge
