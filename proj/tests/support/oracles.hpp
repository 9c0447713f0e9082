#pragma once

// Independent test oracles. Everything here stays deliberately naive so the
// production implementations are checked against a different code path.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotforge/bigint.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/laurent.hpp"

namespace oracles {

using knotforge::BigInt;
using knotforge::LaurentPoly;
using knotforge::PlanarDiagram;

// Minimal-degree factor by exhaustive search over bounded integer
// coefficients, with leading/trailing coefficients restricted to divisors.
// Input: polynomial with min exponent 0 and nonzero constant term.
std::optional<LaurentPoly> brute_force_divisor(const LaurentPoly& p, long long coeff_bound);

// Full factor multiset via repeated brute-force minimal divisors; returns
// normal-form factors, sorted the same way as knotforge::factor.
std::vector<LaurentPoly> brute_force_factors(const LaurentPoly& p, long long coeff_bound);

// Kauffman bracket by full enumeration of all 2^n smoothings.
LaurentPoly naive_bracket(const PlanarDiagram& d);

// Closure of a braid word on `strands` strands; generators are +-1, +-2, ...
PlanarDiagram braid_closure(int strands, const std::vector<int>& word,
                            std::string name = "");

// -------------------------------------------------------------------------

inline std::vector<BigInt> divisors_signed(const BigInt& v) {
    std::vector<BigInt> out;
    BigInt a = v.abs();
    for (BigInt i(1); i * i <= a; i += BigInt(1)) {
        if ((a % i).is_zero()) {
            out.push_back(i);
            out.push_back(-i);
            BigInt j = a.div_exact(i);
            if (j != i) {
                out.push_back(j);
                out.push_back(-j);
            }
        }
    }
    return out;
}

inline std::optional<LaurentPoly> brute_force_divisor(const LaurentPoly& p,
                                                      long long coeff_bound) {
    int deg = p.max_exp();
    BigInt c0 = p.coeff(0);
    BigInt lead = p.coeff(deg);
    for (int m = 1; m <= deg / 2; ++m) {
        // coefficients g_0..g_m: g_0 | c0, g_m | lead, middle in [-B, B]
        std::vector<BigInt> low = divisors_signed(c0);
        std::vector<BigInt> high = divisors_signed(lead);
        std::vector<BigInt> g(static_cast<size_t>(m) + 1);
        std::vector<long long> mid(static_cast<size_t>(std::max(0, m - 1)), -coeff_bound);
        for (const BigInt& glow : low) {
            if (glow.is_negative()) continue;  // sign normalized: g and -g divide alike
            for (const BigInt& ghigh : high) {
                g[0] = glow;
                g[static_cast<size_t>(m)] = ghigh;
                bool more_mid = true;
                std::fill(mid.begin(), mid.end(), -coeff_bound);
                while (more_mid) {
                    for (int i = 1; i < m; ++i) g[static_cast<size_t>(i)] = BigInt(mid[static_cast<size_t>(i - 1)]);
                    LaurentPoly cand;
                    for (int i = 0; i <= m; ++i) cand.add_term(i, g[static_cast<size_t>(i)]);
                    if (!cand.is_zero() && cand.max_exp() == m) {
                        if (knotforge::divide_exact(p, cand)) return cand;
                    }
                    if (m <= 1) break;
                    int pos = 0;
                    while (pos < m - 1) {
                        if (++mid[static_cast<size_t>(pos)] <= coeff_bound) break;
                        mid[static_cast<size_t>(pos)] = -coeff_bound;
                        ++pos;
                    }
                    if (pos >= m - 1) more_mid = false;
                }
            }
        }
    }
    return std::nullopt;
}

inline std::vector<LaurentPoly> brute_force_factors(const LaurentPoly& p,
                                                    long long coeff_bound) {
    LaurentPoly poly = p.shifted(-p.min_exp());
    if (poly.coeff(0).is_negative()) poly = -poly;
    std::vector<LaurentPoly> out;
    // integer content
    BigInt content;
    for (const auto& [e, c] : poly.terms()) content = BigInt::gcd(content, c);
    if (!content.is_one()) {
        BigInt n = content;
        for (BigInt q(2); q * q <= n;) {
            if ((n % q).is_zero()) {
                out.push_back(LaurentPoly::constant(q));
                n = n.div_exact(q);
            } else {
                q += BigInt(1);
            }
        }
        if (!n.is_one()) out.push_back(LaurentPoly::constant(n));
        LaurentPoly prim;
        for (const auto& [e, c] : poly.terms()) prim.add_term(e, c.div_exact(content));
        poly = prim;
    }
    while (poly.max_exp() >= 1) {
        auto f = brute_force_divisor(poly, coeff_bound);
        if (!f) break;
        LaurentPoly fac = *f;
        if (fac.coeff(fac.min_exp()).is_negative()) fac = -fac;
        out.push_back(fac);
        poly = *knotforge::divide_exact(poly, fac);
        if (poly.coeff(poly.min_exp()).is_negative()) poly = -poly;
    }
    if (poly.max_exp() >= 1) out.push_back(poly);
    std::sort(out.begin(), out.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
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

inline LaurentPoly naive_bracket(const PlanarDiagram& d) {
    int n = d.crossing_count();
    if (n == 0) return LaurentPoly::one();
    LaurentPoly delta;
    delta.add_term(2, BigInt(-1));
    delta.add_term(-2, BigInt(-1));

    LaurentPoly total;
    for (unsigned long state = 0; state < (1ul << n); ++state) {
        // union-find over the 4n slot occurrences
        std::vector<int> parent(static_cast<size_t>(4 * n));
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
            return x;
        };
        auto unite = [&](int a, int b) {
            int ra = find(a), rb = find(b);
            if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
        };
        // arcs join their two occurrences
        std::map<int, std::vector<int>> arc_occ;
        for (int c = 0; c < n; ++c)
            for (int s = 0; s < 4; ++s)
                arc_occ[d.crossings()[static_cast<size_t>(c)].arcs[static_cast<size_t>(s)]]
                    .push_back(4 * c + s);
        for (const auto& [arc, occ] : arc_occ) unite(occ[0], occ[1]);
        int exponent = 0;
        for (int c = 0; c < n; ++c) {
            bool a_smoothing = ((state >> c) & 1u) == 0;
            exponent += a_smoothing ? 1 : -1;
            if (a_smoothing) {
                unite(4 * c + 0, 4 * c + 1);
                unite(4 * c + 2, 4 * c + 3);
            } else {
                unite(4 * c + 0, 4 * c + 3);
                unite(4 * c + 1, 4 * c + 2);
            }
        }
        std::set<int> roots;
        for (int i = 0; i < 4 * n; ++i) roots.insert(find(i));
        LaurentPoly term = LaurentPoly::monomial(BigInt(1), exponent);
        for (size_t k = 1; k < roots.size(); ++k) term *= delta;
        total += term;
    }
    return total;
}

inline PlanarDiagram braid_closure(int strands, const std::vector<int>& word,
                                   std::string name) {
    // Arc labels live on strand positions between braid letters; the closure
    // identifies top and bottom labels per position.
    int n = static_cast<int>(word.size());
    if (n == 0) throw std::invalid_argument("braid_closure: empty word");
    std::vector<int> current(static_cast<size_t>(strands));
    int next_label = 0;
    for (int p = 0; p < strands; ++p) current[static_cast<size_t>(p)] = ++next_label;
    std::vector<int> bottom = current;
    std::vector<std::array<int, 4>> tuples;
    for (int letter : word) {
        int i = std::abs(letter) - 1;  // position index of sigma_i
        if (i < 0 || i + 1 >= strands) throw std::invalid_argument("braid_closure: bad letter");
        int a_in = current[static_cast<size_t>(i)];
        int b_in = current[static_cast<size_t>(i + 1)];
        int a_out = ++next_label;
        int b_out = ++next_label;
        // both strands travel upward; positive letter: lower-left strand over
        if (letter > 0)
            tuples.push_back({b_in, a_out, b_out, a_in});
        else
            tuples.push_back({a_in, b_in, a_out, b_out});
        current[static_cast<size_t>(i)] = b_out;
        current[static_cast<size_t>(i + 1)] = a_out;
    }
    // Closure: rename top labels back to the bottom ones.
    std::map<int, int> rename;
    for (int p = 0; p < strands; ++p)
        rename[current[static_cast<size_t>(p)]] = bottom[static_cast<size_t>(p)];
    for (auto& t : tuples)
        for (int s = 0; s < 4; ++s) {
            auto it = rename.find(t[static_cast<size_t>(s)]);
            if (it != rename.end()) t[static_cast<size_t>(s)] = it->second;
        }
    // Compact labels.
    std::map<int, int> compact;
    for (auto& t : tuples)
        for (int s = 0; s < 4; ++s) {
            int a = t[static_cast<size_t>(s)];
            if (!compact.count(a)) compact[a] = static_cast<int>(compact.size()) + 1;
        }
    for (auto& t : tuples)
        for (int s = 0; s < 4; ++s) t[static_cast<size_t>(s)] = compact[t[static_cast<size_t>(s)]];
    return PlanarDiagram::from_pd(tuples, std::move(name)).canonical();
}

}  // namespace oracles
