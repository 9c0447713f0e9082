#include "knotforge/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "knotforge/rational.hpp"

namespace knotforge {

LaurentPoly LaurentPoly::monomial(BigInt c, int exp) {
    LaurentPoly out;
    if (!c.is_zero()) out.terms_.emplace(exp, std::move(c));
    return out;
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, BigInt>>& pairs) {
    LaurentPoly out;
    for (const auto& [e, c] : pairs) out.add_term(e, c);
    return out;
}

std::vector<std::pair<int, BigInt>> LaurentPoly::pairs() const {
    std::vector<std::pair<int, BigInt>> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(e, c);
    return out;
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && terms_.begin()->second.abs().is_one();
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no degree");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no degree");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt() : it->second;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

BigInt LaurentPoly::evaluate(const BigInt& x) const {
    if (terms_.empty()) return BigInt();
    if (min_exp() < 0) {
        BigInt one(1);
        if (x != one && x != BigInt(-1))
            throw std::domain_error("LaurentPoly: negative exponents need x = +-1");
        BigInt acc;
        for (const auto& [e, c] : terms_) {
            bool odd = (e % 2) != 0;
            acc += (x.is_negative() && odd) ? -c : c;
        }
        return acc;
    }
    // Horner over the dense exponent range.
    BigInt acc;
    int prev = max_exp();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int k = prev; k > it->first; --k) acc *= x;
        acc += it->second;
        prev = it->first;
    }
    for (int k = prev; k > 0; --k) acc *= x;
    return acc;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mag = c.abs().to_string();
        if (out.empty()) {
            out += c.is_negative() ? "-" : "";
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        if (e == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly involute(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
    return out;
}

UnitNormalForm normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("normalize: zero polynomial has no normal form");
    LaurentPoly q = p.shifted(-p.min_exp());
    if (q.coeff(0).is_negative()) q = -q;
    return UnitNormalForm(std::move(q));
}

bool associate(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return normalize(p) == normalize(q);
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (p.is_zero()) return LaurentPoly();
    int shift = p.min_exp() - q.min_exp();
    LaurentPoly num = p.shifted(-p.min_exp());
    LaurentPoly den = q.shifted(-q.min_exp());
    LaurentPoly quot;
    const BigInt& lead = den.coeff(den.max_exp());
    while (!num.is_zero()) {
        if (num.max_exp() < den.max_exp()) return std::nullopt;
        BigInt::DivMod dm = num.coeff(num.max_exp()).divmod(lead);
        if (!dm.rem.is_zero()) return std::nullopt;
        LaurentPoly term = LaurentPoly::monomial(dm.quot, num.max_exp() - den.max_exp());
        quot += term;
        num -= term * den;
    }
    return quot.shifted(shift);
}

LaurentPoly Factorization::product() const {
    LaurentPoly out = unit();
    for (const auto& f : factors) out *= f;
    return out;
}

namespace {

// Integer content (gcd of coefficients), always positive for nonzero input.
BigInt content_of(const LaurentPoly& p) {
    BigInt g;
    for (const auto& [e, c] : p.terms()) g = BigInt::gcd(g, c);
    return g;
}

std::vector<BigInt> positive_divisors(const BigInt& v) {
    BigInt a = v.abs();
    std::vector<BigInt> out;
    BigInt i(1);
    for (; (i * i) <= a; i += BigInt(1)) {
        BigInt::DivMod dm = a.divmod(i);
        if (dm.rem.is_zero()) {
            out.push_back(i);
            if (dm.quot != i) out.push_back(dm.quot);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void prime_factors(BigInt n, std::vector<BigInt>& out) {
    BigInt two(2);
    while ((n % two).is_zero()) {
        out.push_back(two);
        n = n.div_exact(two);
    }
    BigInt p(3);
    while ((p * p) <= n) {
        if ((n % p).is_zero()) {
            out.push_back(p);
            n = n.div_exact(p);
        } else {
            p += two;
        }
    }
    if (!n.is_one()) out.push_back(n);
}

// Dense coefficient view of a polynomial with min_exp 0.
std::vector<BigInt> dense(const LaurentPoly& p) {
    std::vector<BigInt> out(static_cast<size_t>(p.max_exp()) + 1);
    for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e)] = c;
    return out;
}

// Newton interpolation through (xs[i], ys[i]); returns the polynomial when
// all coefficients are integers.
std::optional<LaurentPoly> interpolate_integer(const std::vector<long long>& xs,
                                               const std::vector<BigInt>& ys) {
    size_t n = xs.size();
    std::vector<Rational> divided(ys.begin(), ys.end());
    // divided differences
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            Rational dx(BigInt(xs[i] - xs[i - level]));
            divided[i] = (divided[i] - divided[i - 1]) / dx;
            if (i == level) break;
        }
    }
    // Expand the Newton form; coefficients stay rational until the end.
    std::vector<Rational> coeffs(n, Rational(0));
    std::vector<Rational> basis(n, Rational(0));  // running product (x-x0)...(x-x_{k-1})
    basis[0] = Rational(1);
    size_t basis_deg = 0;
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i <= basis_deg; ++i) coeffs[i] += divided[k] * basis[i];
        if (k + 1 < n) {
            // basis *= (x - xs[k])
            Rational root(BigInt(xs[k]));
            for (size_t i = basis_deg + 1; i > 0; --i)
                basis[i] = basis[i - 1] - root * basis[i];
            basis[0] = -root * basis[0];
            ++basis_deg;
        }
    }
    LaurentPoly out;
    for (size_t i = 0; i < n; ++i) {
        if (!coeffs[i].den().is_one()) return std::nullopt;
        out.add_term(static_cast<int>(i), coeffs[i].num());
    }
    return out;
}

// Finds integer roots p/q (as primitive linear factors q*t - p) of a
// primitive polynomial; returns the factor in normal form, or nullopt.
std::optional<LaurentPoly> rational_root_factor(const LaurentPoly& poly) {
    std::vector<BigInt> cs = dense(poly);
    const BigInt& c0 = cs.front();
    const BigInt& lead = cs.back();
    for (const BigInt& pnum : positive_divisors(c0)) {
        for (const BigInt& pden : positive_divisors(lead)) {
            if (!BigInt::gcd(pnum, pden).is_one()) continue;
            for (int s = 0; s < 2; ++s) {
                BigInt num = s ? -pnum : pnum;
                // candidate factor pden*t - num
                LaurentPoly lin;
                lin.add_term(1, pden);
                lin.add_term(0, -num);
                auto q = divide_exact(poly, lin);
                if (q) return lin;
            }
        }
    }
    return std::nullopt;
}

// Smallest-degree nontrivial divisor of a primitive polynomial with no
// rational roots, via Kronecker interpolation; nullopt when irreducible.
std::optional<LaurentPoly> kronecker_divisor(const LaurentPoly& poly) {
    int deg = poly.max_exp();
    std::vector<long long> points;
    points.push_back(0);
    for (long long k = 1; static_cast<int>(points.size()) < deg + 1; ++k) {
        points.push_back(k);
        points.push_back(-k);
    }
    std::vector<BigInt> values;
    for (long long x : points) values.push_back(poly.evaluate(BigInt(x)));

    for (int m = 2; m <= deg / 2; ++m) {
        std::vector<long long> xs(points.begin(), points.begin() + m + 1);
        std::vector<std::vector<BigInt>> choices(static_cast<size_t>(m) + 1);
        for (int i = 0; i <= m; ++i) {
            std::vector<BigInt> ds = positive_divisors(values[static_cast<size_t>(i)]);
            if (i == 0) {
                choices[static_cast<size_t>(i)] = ds;  // sign fixed: g or -g divides alike
            } else {
                for (const BigInt& d : ds) {
                    choices[static_cast<size_t>(i)].push_back(d);
                    choices[static_cast<size_t>(i)].push_back(-d);
                }
            }
        }
        std::vector<size_t> idx(static_cast<size_t>(m) + 1, 0);
        std::vector<BigInt> ys(static_cast<size_t>(m) + 1);
        while (true) {
            for (int i = 0; i <= m; ++i) ys[static_cast<size_t>(i)] = choices[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
            auto g = interpolate_integer(xs, ys);
            if (g && !g->is_zero() && g->max_exp() == m) {
                LaurentPoly cand = *g;
                BigInt cont = content_of(cand);
                if (!cont.is_one()) {
                    LaurentPoly prim;
                    for (const auto& [e, c] : cand.terms()) prim.add_term(e, c.div_exact(cont));
                    cand = prim;
                }
                if (divide_exact(poly, cand)) return cand;
            }
            // advance the odometer
            int pos = 0;
            while (pos <= m) {
                if (++idx[static_cast<size_t>(pos)] < choices[static_cast<size_t>(pos)].size()) break;
                idx[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos > m) break;
        }
    }
    return std::nullopt;
}

// Normal form for an irreducible polynomial factor: constant term positive.
// Returns the sign flip applied.
int make_factor_canonical(LaurentPoly& f) {
    if (f.coeff(f.min_exp()).is_negative()) {
        f = -f;
        return -1;
    }
    return 1;
}

}  // namespace

Factorization factor(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor: zero polynomial");
    Factorization out;
    out.unit_exp = p.min_exp();
    LaurentPoly poly = p.shifted(-p.min_exp());
    if (poly.coeff(0).is_negative()) {
        out.sign = -1;
        poly = -poly;
    }
    BigInt cont = content_of(poly);
    if (!cont.is_one()) {
        std::vector<BigInt> primes;
        prime_factors(cont, primes);
        for (const BigInt& q : primes) out.factors.push_back(LaurentPoly::constant(q));
        LaurentPoly prim;
        for (const auto& [e, c] : poly.terms()) prim.add_term(e, c.div_exact(cont));
        poly = prim;
    }

    // Split off linear factors from rational roots, then Kronecker.
    while (poly.max_exp() >= 1) {
        std::optional<LaurentPoly> f = rational_root_factor(poly);
        if (!f && poly.max_exp() >= 4) f = kronecker_divisor(poly);
        if (!f) break;  // irreducible
        LaurentPoly fac = *f;
        make_factor_canonical(fac);  // sign lands in the quotient
        out.factors.push_back(fac);
        auto q = divide_exact(poly, fac);
        poly = *q;
        if (poly.coeff(poly.min_exp()).is_negative()) {
            out.sign = -out.sign;
            poly = -poly;
        }
    }
    if (poly.max_exp() >= 1) {
        LaurentPoly fac = poly;
        out.sign *= make_factor_canonical(fac);
        out.factors.push_back(fac);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const LaurentPoly& a, const LaurentPoly& b) {
                  if (a.max_exp() != b.max_exp()) return a.max_exp() < b.max_exp();
                  auto pa = a.pairs(), pb = b.pairs();
                  for (size_t i = 0; i < std::min(pa.size(), pb.size()); ++i) {
                      if (pa[i].first != pb[i].first) return pa[i].first < pb[i].first;
                      if (pa[i].second != pb[i].second) return pa[i].second < pb[i].second;
                  }
                  return pa.size() < pb.size();
              });
    return out;
}

bool is_irreducible(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("is_irreducible: zero polynomial");
    if (p.span() < 1) throw std::domain_error("is_irreducible: constant is ill-posed");
    Factorization f = factor(p);
    return f.factors.size() == 1 && f.factors[0].span() == p.span();
}

namespace {

// Factor classes with multiplicities, keyed by normal form.
std::vector<std::pair<LaurentPoly, int>> factor_classes(const Factorization& f) {
    std::vector<std::pair<LaurentPoly, int>> out;
    for (const auto& g : f.factors) {
        bool found = false;
        for (auto& [h, m] : out) {
            if (h == g) {
                ++m;
                found = true;
                break;
            }
        }
        if (!found) out.emplace_back(g, 1);
    }
    return out;
}

LaurentPoly conjugate_class(const LaurentPoly& g) {
    return normalize(involute(g)).poly();
}

}  // namespace

std::optional<LaurentPoly> fox_milnor(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("fox_milnor: zero polynomial");
    auto classes = factor_classes(factor(p));
    std::vector<bool> used(classes.size(), false);
    LaurentPoly witness = LaurentPoly::one();
    for (size_t i = 0; i < classes.size(); ++i) {
        if (used[i]) continue;
        const auto& [g, mult] = classes[i];
        LaurentPoly conj = conjugate_class(g);
        if (conj == g) {
            if (mult % 2 != 0) return std::nullopt;
            for (int k = 0; k < mult / 2; ++k) witness *= g;
            used[i] = true;
            continue;
        }
        size_t j = classes.size();
        for (size_t t = 0; t < classes.size(); ++t) {
            if (t != i && !used[t] && classes[t].first == conj) {
                j = t;
                break;
            }
        }
        if (j == classes.size() || classes[j].second != mult) return std::nullopt;
        for (int k = 0; k < mult; ++k) witness *= g;
        used[i] = used[j] = true;
    }
    return witness;
}

bool miyazaki_divisor(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("miyazaki_divisor: zero polynomial");
    auto classes = factor_classes(factor(p));
    size_t n = classes.size();
    if (n == 0) return false;
    // Odometer over sub-multiset exponents 0..mult per class.
    std::vector<int> take(n, 0);
    while (true) {
        int pos = 0;
        while (pos < static_cast<int>(n)) {
            if (++take[static_cast<size_t>(pos)] <= classes[static_cast<size_t>(pos)].second) break;
            take[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos >= static_cast<int>(n)) break;
        LaurentPoly f = LaurentPoly::one();
        for (size_t i = 0; i < n; ++i)
            for (int k = 0; k < take[i]; ++k) f *= classes[i].first;
        if (divide_exact(p, f * involute(f))) return true;
    }
    return false;
}

}  // namespace knotforge
