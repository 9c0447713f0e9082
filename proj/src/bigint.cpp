#include "knotforge/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotforge {

namespace {
constexpr uint64_t kBase = 1000000000ull;  // 10^9
constexpr int kBaseDigits = 9;
}  // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (m > 0) {
        limbs_.push_back(static_cast<uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    std::vector<uint32_t> limbs;
    int end = static_cast<int>(s.size());
    int begin = static_cast<int>(pos);
    for (int i = end; i > begin; i -= kBaseDigits) {
        int lo = std::max(begin, i - kBaseDigits);
        uint32_t limb = 0;
        for (int j = lo; j < i; ++j) {
            if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("BigInt: bad digit");
            limb = limb * 10 + static_cast<uint32_t>(s[j] - '0');
        }
        limbs.push_back(limb);
    }
    BigInt out = make(sign, std::move(limbs));
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::make(int sign, std::vector<uint32_t> limbs) {
    BigInt out;
    out.sign_ = sign;
    out.limbs_ = std::move(limbs);
    out.trim();
    return out;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t cur = carry;
        if (i < a.size()) cur += a[i];
        if (i < b.size()) cur += b[i];
        out[i] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    return out;
}

// Requires |a| >= |b|.
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (cur < 0) {
            cur += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(cur);
    }
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size() || carry; ++j) {
            uint64_t cur = out[i + j] + carry;
            if (j < b.size()) cur += static_cast<uint64_t>(a[i]) * b[j];
            out[i + j] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    return out;
}

// Schoolbook long division on magnitudes: a = q*b + r with 0 <= r < b.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t div = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = rem * kBase + a[i];
            q[i] = static_cast<uint32_t>(cur / div);
            rem = cur % div;
        }
        r.clear();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // Knuth algorithm D. Normalize so the divisor's top limb is >= kBase/2.
    uint32_t d = static_cast<uint32_t>((kBase - 1) / b.back());
    std::vector<uint32_t> u = mul_mag(a, {d});
    std::vector<uint32_t> bn = mul_mag(b, {d});
    while (!bn.empty() && bn.back() == 0) bn.pop_back();

    size_t n = bn.size();
    size_t m = (u.size() > n ? u.size() - n : 0);
    u.resize(n + m + 1, 0);
    q.assign(m + 1, 0);

    for (size_t step = 0; step <= m; ++step) {
        size_t j = m - step;
        unsigned __int128 top =
            static_cast<unsigned __int128>(u[j + n]) * kBase + u[j + n - 1];
        uint64_t qhat = static_cast<uint64_t>(top / bn[n - 1]);
        if (qhat > kBase - 1) qhat = kBase - 1;

        // Multiply-subtract qhat*bn from u[j..j+n].
        uint64_t carry = 0;
        int64_t borrow = 0;
        for (size_t i = 0; i <= n; ++i) {
            uint64_t mult = carry + (i < n ? qhat * bn[i] : 0);
            carry = mult / kBase;
            int64_t t = static_cast<int64_t>(u[j + i]) -
                        static_cast<int64_t>(mult % kBase) - borrow;
            if (t < 0) {
                t += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[j + i] = static_cast<uint32_t>(t);
        }
        // qhat was at most 2 too large; add the divisor back until the
        // window is nonnegative again.
        while (borrow) {
            --qhat;
            uint64_t c = 0;
            for (size_t i = 0; i <= n; ++i) {
                uint64_t cur = static_cast<uint64_t>(u[j + i]) + c + (i < n ? bn[i] : 0);
                u[j + i] = static_cast<uint32_t>(cur % kBase);
                c = cur / kBase;
            }
            borrow -= static_cast<int64_t>(c);
        }
        q[j] = static_cast<uint32_t>(qhat);
    }

    // Remainder is u[0..n-1]; undo the normalization.
    std::vector<uint32_t> rem(u.begin(), u.begin() + static_cast<long>(n));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (d == 1 || rem.empty()) {
        r = rem;
    } else {
        std::vector<uint32_t> rq, rr;
        divmod_mag(rem, {d}, rq, rr);
        r = rq;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (sign_ == 0) return rhs;
    if (rhs.sign_ == 0) return *this;
    if (sign_ == rhs.sign_) return make(sign_, add_mag(limbs_, rhs.limbs_));
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) return make(sign_, sub_mag(limbs_, rhs.limbs_));
    return make(rhs.sign_, sub_mag(rhs.limbs_, limbs_));
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (sign_ == 0 || rhs.sign_ == 0) return BigInt();
    return make(sign_ * rhs.sign_, mul_mag(limbs_, rhs.limbs_));
}

BigInt::DivMod BigInt::divmod(const BigInt& rhs) const {
    if (rhs.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    std::vector<uint32_t> q, r;
    divmod_mag(limbs_, rhs.limbs_, q, r);
    DivMod out;
    out.quot = make(sign_ * rhs.sign_, std::move(q));
    out.rem = make(sign_, std::move(r));
    return out;
}

BigInt BigInt::div_exact(const BigInt& rhs) const {
    DivMod dm = divmod(rhs);
    if (!dm.rem.is_zero()) throw std::domain_error("BigInt: inexact division");
    return dm.quot;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return sign_ == rhs.sign_ && limbs_ == rhs.limbs_;
}

bool BigInt::operator<(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_;
    int c = cmp_mag(limbs_, rhs.limbs_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

bool BigInt::fits_int64() const {
    static const BigInt lo = BigInt::from_string("-9223372036854775808");
    static const BigInt hi = BigInt::from_string("9223372036854775807");
    return lo <= *this && *this <= hi;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
    unsigned long long m = 0;
    for (size_t i = limbs_.size(); i-- > 0;) m = m * kBase + limbs_[i];
    if (sign_ < 0) return -static_cast<long long>(m);
    return static_cast<long long>(m);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(kBaseDigits - part.size(), '0') + part;
    }
    return out;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = y;
        y = r;
    }
    return x;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt out(1), b = base;
    while (exp) {
        if (exp & 1u) out *= b;
        b *= b;
        exp >>= 1u;
    }
    return out;
}

}  // namespace knotforge
