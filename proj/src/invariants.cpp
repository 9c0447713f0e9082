#include "knotforge/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace knotforge {

std::vector<std::pair<int, BigInt>> JonesPoly::t_pairs() const {
    std::vector<std::pair<int, BigInt>> out;
    for (const auto& [e, c] : q_.terms()) {
        if (e % 2 != 0)
            throw math_error("JonesPoly: odd q-exponent, value is not a polynomial in t");
        out.emplace_back(e / 2, c);
    }
    return out;
}

LaurentPoly JonesPoly::in_t() const {
    LaurentPoly out;
    for (const auto& [e, c] : t_pairs()) out.add_term(e, c);
    return out;
}

namespace {

const LaurentPoly& loop_value() {
    static const LaurentPoly delta = [] {
        LaurentPoly d;
        d.add_term(2, BigInt(-1));
        d.add_term(-2, BigInt(-1));
        return d;
    }();
    return delta;
}

// Deterministic contraction order: repeatedly pick the crossing that closes
// the most boundary arcs (ties to the lowest index).
std::vector<int> contraction_order(const PlanarDiagram& d) {
    int n = d.crossing_count();
    std::vector<int> order;
    std::vector<bool> done(static_cast<size_t>(n), false);
    std::set<int> open;  // arcs with exactly one processed endpoint
    for (int step = 0; step < n; ++step) {
        int best = -1, best_score = -1;
        for (int c = 0; c < n; ++c) {
            if (done[static_cast<size_t>(c)]) continue;
            int score = 0;
            for (int s = 0; s < 4; ++s)
                if (open.count(d.crossings()[static_cast<size_t>(c)].arcs[static_cast<size_t>(s)]))
                    ++score;
            if (score > best_score) {
                best_score = score;
                best = c;
            }
        }
        order.push_back(best);
        done[static_cast<size_t>(best)] = true;
        for (int s = 0; s < 4; ++s) {
            int a = d.crossings()[static_cast<size_t>(best)].arcs[static_cast<size_t>(s)];
            if (open.count(a))
                open.erase(a);
            else
                open.insert(a);
        }
    }
    return order;
}

using Matching = std::map<int, int>;  // open arc end -> path partner

std::vector<int> matching_key(const Matching& m) {
    std::vector<int> key;
    for (const auto& [a, b] : m)
        if (a < b) {
            key.push_back(a);
            key.push_back(b);
        }
    return key;
}

struct SmoothingResult {
    Matching matching;
    int loops = 0;
};

// Applies one smoothing of a crossing to a pending matching. `pairs` are the
// slot indices joined by the two smoothing arcs; `arcs` the crossing's arc
// labels; `is_open` marks labels already on the boundary.
SmoothingResult apply_smoothing(const Matching& pending, const std::array<int, 4>& arcs,
                                const std::array<std::pair<int, int>, 2>& pairs,
                                const std::set<int>& open_before) {
    SmoothingResult out;
    out.matching = pending;

    // Local wiring: each slot connects to one smoothing arc and, through its
    // arc label, either to another slot (label repeated in this crossing) or
    // to an external token.
    std::array<int, 4> smooth_to{};
    for (const auto& [x, y] : pairs) {
        smooth_to[static_cast<size_t>(x)] = y;
        smooth_to[static_cast<size_t>(y)] = x;
    }
    std::array<int, 4> internal_to{};
    internal_to.fill(-1);
    for (int s = 0; s < 4; ++s)
        for (int t = s + 1; t < 4; ++t)
            if (arcs[static_cast<size_t>(s)] == arcs[static_cast<size_t>(t)]) {
                internal_to[static_cast<size_t>(s)] = t;
                internal_to[static_cast<size_t>(t)] = s;
            }

    std::array<bool, 4> used{};
    // Trace open paths: enter at a slot whose arc leads outside, follow
    // smoothing arcs and internal links until exiting.
    for (int s0 = 0; s0 < 4; ++s0) {
        if (used[static_cast<size_t>(s0)] || internal_to[static_cast<size_t>(s0)] != -1) continue;
        int entry_label = arcs[static_cast<size_t>(s0)];
        int cur = s0;
        used[static_cast<size_t>(cur)] = true;
        int exit_label = -1;
        while (true) {
            int nxt = smooth_to[static_cast<size_t>(cur)];
            used[static_cast<size_t>(nxt)] = true;
            if (internal_to[static_cast<size_t>(nxt)] == -1) {
                exit_label = arcs[static_cast<size_t>(nxt)];
                break;
            }
            cur = internal_to[static_cast<size_t>(nxt)];
            used[static_cast<size_t>(cur)] = true;
        }
        // Connect entry_label and exit_label through the pending matching.
        bool entry_open = open_before.count(entry_label) > 0;
        bool exit_open = open_before.count(exit_label) > 0;
        if (entry_open && exit_open && out.matching.at(entry_label) == exit_label) {
            out.matching.erase(entry_label);
            out.matching.erase(exit_label);
            ++out.loops;
            continue;
        }
        int lhs = entry_label;
        if (entry_open) {
            lhs = out.matching.at(entry_label);
            out.matching.erase(entry_label);
        }
        int rhs = exit_label;
        if (exit_open) {
            rhs = out.matching.at(exit_label);
            out.matching.erase(exit_label);
        }
        out.matching[lhs] = rhs;
        out.matching[rhs] = lhs;
    }
    // Slots not reached from outside form closed loops.
    for (int s = 0; s < 4; ++s) {
        if (used[static_cast<size_t>(s)]) continue;
        int cur = s;
        while (!used[static_cast<size_t>(cur)]) {
            used[static_cast<size_t>(cur)] = true;
            int nxt = smooth_to[static_cast<size_t>(cur)];
            used[static_cast<size_t>(nxt)] = true;
            cur = internal_to[static_cast<size_t>(nxt)];
        }
        ++out.loops;
    }
    return out;
}

}  // namespace

LaurentPoly kauffman_bracket(const PlanarDiagram& d) {
    if (d.crossing_count() == 0) return LaurentPoly::one();

    std::vector<int> order = contraction_order(d);
    std::map<std::vector<int>, LaurentPoly> states;
    states[{}] = LaurentPoly::one();

    std::set<int> open;
    static const std::array<std::pair<int, int>, 2> kPairsA = {{{0, 1}, {2, 3}}};
    static const std::array<std::pair<int, int>, 2> kPairsB = {{{0, 3}, {1, 2}}};

    for (int ci : order) {
        const auto& arcs = d.crossings()[static_cast<size_t>(ci)].arcs;
        std::map<std::vector<int>, LaurentPoly> next;
        for (const auto& [key, weight] : states) {
            Matching pending;
            for (size_t i = 0; i + 1 < key.size(); i += 2) {
                pending[key[i]] = key[i + 1];
                pending[key[i + 1]] = key[i];
            }
            for (int which = 0; which < 2; ++which) {
                SmoothingResult res = apply_smoothing(
                    pending, arcs, which == 0 ? kPairsA : kPairsB, open);
                LaurentPoly w = weight * LaurentPoly::monomial(BigInt(1), which == 0 ? 1 : -1);
                for (int k = 0; k < res.loops; ++k) w *= loop_value();
                auto key2 = matching_key(res.matching);
                auto it = next.find(key2);
                if (it == next.end())
                    next.emplace(std::move(key2), std::move(w));
                else
                    it->second += w;
            }
        }
        states = std::move(next);
        for (int s = 0; s < 4; ++s) {
            int a = arcs[static_cast<size_t>(s)];
            if (open.count(a))
                open.erase(a);
            else
                open.insert(a);
        }
    }
    if (states.size() != 1 || !states.begin()->first.empty())
        throw std::logic_error("kauffman_bracket: contraction left open boundary");
    // Every state closed all loops, so the accumulated weight carries one
    // factor of the loop value per loop; the bracket normalizes the first
    // loop away.
    auto q = divide_exact(states.begin()->second, loop_value());
    if (!q) throw std::logic_error("kauffman_bracket: loop normalization failed");
    return *q;
}

JonesPoly jones(const PlanarDiagram& d) {
    LaurentPoly br = kauffman_bracket(d);
    int w = d.writhe();
    LaurentPoly norm = LaurentPoly::monomial(BigInt(w % 2 == 0 ? 1 : -1), -3 * w);
    LaurentPoly f = norm * br;
    LaurentPoly in_q;
    for (const auto& [e, c] : f.terms()) {
        if (e % 2 != 0) throw std::logic_error("jones: odd bracket exponent");
        in_q.add_term(-e / 2, c);
    }
    return JonesPoly(std::move(in_q));
}

LaurentPoly laurent_matrix_det(std::vector<std::vector<LaurentPoly>> m) {
    size_t n = m.size();
    if (n == 0) return LaurentPoly::one();
    LaurentPoly prev = LaurentPoly::one();
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = n;
            for (size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return LaurentPoly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = divide_exact(num, prev);
                if (!q) throw std::logic_error("laurent_matrix_det: inexact Bareiss step");
                m[i][j] = std::move(*q);
            }
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    return sign == 1 ? det : -det;
}

AlexanderPoly alexander(const PlanarDiagram& d) {
    int n = d.crossing_count();
    if (n == 0) return AlexanderPoly(normalize(LaurentPoly::one()));

    PlanarDiagram::Overarcs oa = d.overarcs();
    if (oa.count != n)
        throw std::logic_error("alexander: overarc count mismatch");

    LaurentPoly t = LaurentPoly::variable();
    LaurentPoly one = LaurentPoly::one();
    std::vector<std::vector<LaurentPoly>> m(static_cast<size_t>(n),
                                            std::vector<LaurentPoly>(static_cast<size_t>(n)));
    for (int c = 0; c < n; ++c) {
        const Crossing& cr = d.crossings()[static_cast<size_t>(c)];
        int over = oa.arc_to_overarc[static_cast<size_t>(cr.arcs[1])];
        int in = oa.arc_to_overarc[static_cast<size_t>(cr.arcs[0])];
        int out = oa.arc_to_overarc[static_cast<size_t>(cr.arcs[2])];
        auto& row = m[static_cast<size_t>(c)];
        if (cr.sign > 0) {
            row[static_cast<size_t>(over)] += one - t;
            row[static_cast<size_t>(in)] += t;
            row[static_cast<size_t>(out)] -= one;
        } else {
            // row scaled by t to stay in Z[t]
            row[static_cast<size_t>(over)] += t - one;
            row[static_cast<size_t>(in)] += one;
            row[static_cast<size_t>(out)] -= t;
        }
    }
    // Any one generator column and one relation row are redundant.
    std::vector<std::vector<LaurentPoly>> minor;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<LaurentPoly> row;
        for (int j = 0; j + 1 < n; ++j) row.push_back(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        minor.push_back(std::move(row));
    }
    LaurentPoly det = laurent_matrix_det(std::move(minor));
    if (det.is_zero()) throw std::logic_error("alexander: vanishing determinant");
    return AlexanderPoly(normalize(det));
}

BigInt determinant(const PlanarDiagram& d) {
    return alexander(d).poly().evaluate(BigInt(-1)).abs();
}

}  // namespace knotforge
