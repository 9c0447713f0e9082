#include "knotforge/openbook.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "knotforge/diagram.hpp"

namespace knotforge {

namespace {

// Homology classes on the genus-2 fiber surface in the chain basis
// (a, b, c, d): consecutive curves intersect once, all other pairs are
// disjoint. The curves e, c'1, c'2 from the twist region are parallel to
// b resp. c in homology; the base monodromy word then reproduces the
// family's Alexander polynomial and the two published forms of f_n agree.
const IntMatrix kOmega = {
    {0, 1, 0, 0},
    {-1, 0, 1, 0},
    {0, -1, 0, 1},
    {0, 0, -1, 0},
};

// Seifert linking form of the fiber surface in the same basis: plumbing
// chain of two positive and two negative Hopf bands.
const IntMatrix kSeifert = {
    {-1, 1, 0, 0},
    {0, -1, 1, 0},
    {0, 0, 1, 1},
    {0, 0, 0, 1},
};

// Rotation numbers of the Legendrian-realized twist curves, one entry per
// named curve. Pinned against the closed form for d3 of the family.
struct RotationEntry {
    const char* name;
    long long rot;
};
const RotationEntry kRotations[] = {
    {"a", 0}, {"b", 0}, {"c", 2}, {"d", -2}, {"e", 0}, {"c'1", 2}, {"c'2", 0},
};

long long rotation_of(const std::string& name) {
    for (const auto& r : kRotations)
        if (name == r.name) return r.rot;
    throw input_error("openbook: unknown curve " + name);
}

long long seifert_pairing(const IntVector& x, const IntVector& y) {
    long long acc = 0;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) acc += x[i] * kSeifert[i][j] * y[j];
    return acc;
}

}  // namespace

const SurfaceModel& genus2_surface() {
    static const SurfaceModel model = [] {
        SurfaceModel m;
        m.genus = 2;
        m.boundary_components = 1;
        m.omega = kOmega;
        return m;
    }();
    return model;
}

const std::vector<CurveClass>& named_curves() {
    static const std::vector<CurveClass> curves = {
        {"a", {1, 0, 0, 0}},    {"b", {0, 1, 0, 0}},  {"c", {0, 0, 1, 0}},
        {"d", {0, 0, 0, 1}},    {"e", {0, 1, 0, 0}},  {"c'1", {0, 0, 1, 0}},
        {"c'2", {0, 0, 1, 0}},
    };
    return curves;
}

CurveClass curve(const std::string& name) {
    for (const auto& c : named_curves())
        if (c.name == name) return c;
    throw input_error("openbook: unknown curve " + name);
}

TwistWord base_monodromy_word() {
    TwistWord w;
    w.letters = {{curve("d"), -1}, {curve("b"), 1}, {curve("c"), -1}, {curve("a"), 1}};
    return w;
}

TwistWord word_for_An(int n) {
    TwistWord w;
    if (n != 0) {
        w.letters.push_back({curve("c'2"), n});
        w.letters.push_back({curve("c'1"), -n});
    }
    TwistWord base = base_monodromy_word();
    w.letters.insert(w.letters.end(), base.letters.begin(), base.letters.end());
    return w;
}

IntMatrix identity_matrix(size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix matrix_mul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size(), k = b.size(), c = b[0].size();
    IntMatrix out(n, IntVector(c, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

namespace {

// T_c^k = I + k * v (omega v)^T; the rank-one part is nilpotent because
// <v, v> = 0.
IntMatrix transvection_power(const CurveClass& c, long long k) {
    const IntMatrix& omega = genus2_surface().omega;
    size_t n = omega.size();
    IntVector ov(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) ov[i] += omega[i][j] * c.h1[j];
    IntMatrix out = identity_matrix(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] += k * c.h1[i] * ov[j];
    return out;
}

}  // namespace

IntMatrix transvection(const CurveClass& c) { return transvection_power(c, 1); }

IntMatrix homological_action(const TwistWord& w) {
    IntMatrix out = identity_matrix(genus2_surface().omega.size());
    for (const TwistLetter& l : w.letters)
        out = matrix_mul(out, transvection_power(l.curve, l.exponent));
    return out;
}

AlexanderPoly alexander_from_monodromy(const TwistWord& w) {
    IntMatrix h = homological_action(w);
    size_t n = h.size();
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            LaurentPoly entry = LaurentPoly::constant(-h[i][j]);
            if (i == j) entry += LaurentPoly::variable();
            m[i][j] = std::move(entry);
        }
    LaurentPoly det = laurent_matrix_det(std::move(m));
    if (det.is_zero()) throw math_error("alexander_from_monodromy: vanishing determinant");
    return AlexanderPoly(normalize(det));
}

int signature(const IntMatrix& m) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw input_error("signature: matrix not square");
        for (size_t j = 0; j < n; ++j)
            if (m[i][j] != m[j][i]) throw input_error("signature: matrix not symmetric");
    }
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(BigInt(m[i][j]));

    int sig = 0;
    for (size_t i = 0; i < n; ++i) {
        if (a[i][i].is_zero()) {
            size_t pivot = n;
            for (size_t j = i + 1; j < n; ++j)
                if (!a[j][j].is_zero()) {
                    pivot = j;
                    break;
                }
            if (pivot < n) {
                std::swap(a[i], a[pivot]);
                for (size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][pivot]);
            } else {
                size_t partner = n;
                for (size_t j = i + 1; j < n; ++j)
                    if (!a[i][j].is_zero()) {
                        partner = j;
                        break;
                    }
                if (partner == n) continue;  // zero row/column contributes nothing
                for (size_t c2 = 0; c2 < n; ++c2) a[i][c2] += a[partner][c2];
                for (size_t r = 0; r < n; ++r) a[r][i] += a[r][partner];
            }
        }
        Rational pivot = a[i][i];
        for (size_t j = i + 1; j < n; ++j) {
            if (a[j][i].is_zero()) continue;
            Rational f = a[j][i] / pivot;
            for (size_t c2 = 0; c2 < n; ++c2) a[j][c2] -= f * a[i][c2];
            for (size_t r = 0; r < n; ++r) a[r][j] -= f * a[r][i];
        }
        sig += pivot.signum();
    }
    return sig;
}

namespace {

std::vector<Rational> solve_linear(const IntMatrix& m, const IntVector& rhs) {
    size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(BigInt(m[i][j]));
        a[i][n] = Rational(BigInt(rhs[i]));
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = n;
        for (size_t r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == n) throw math_error("d3: singular linking matrix");
        std::swap(a[col], a[pivot]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c2 = col; c2 <= n; ++c2) a[r][c2] -= f * a[col][c2];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

}  // namespace

Rational d3(const SurgeryDescription& desc) {
    size_t k = desc.size();
    if (desc.linking.size() != k) throw input_error("d3: linking matrix size mismatch");
    for (size_t i = 0; i < k; ++i) {
        if (desc.linking[i].size() != k) throw input_error("d3: linking matrix not square");
        for (size_t j = 0; j < k; ++j)
            if (desc.linking[i][j] != desc.linking[j][i])
                throw input_error("d3: linking matrix not symmetric");
    }
    Rational c_squared(0);
    int sig = 0;
    if (k > 0) {
        std::vector<Rational> x = solve_linear(desc.linking, desc.rotations);
        for (size_t i = 0; i < k; ++i)
            c_squared += x[i] * Rational(BigInt(desc.rotations[i]));
        sig = signature(desc.linking);
    }
    Rational out = (c_squared - Rational(3 * sig) - Rational(2 * (1 + static_cast<long long>(k)))) /
                   Rational(4);
    return out + Rational(desc.q);
}

SurgeryDescription family_surgery_description(int n, int bound) {
    if (std::abs(n) > bound)
        throw input_error("family_surgery_description: |n| exceeds bound " +
                          std::to_string(bound));
    // Expanded twist letters in action order (rightmost first); each letter
    // becomes one contact-surgery component on its own page.
    struct Unit {
        CurveClass curve;
        int eps;  // +1 right-handed twist -> (-1)-contact surgery
    };
    std::vector<Unit> units;
    TwistWord word = word_for_An(n);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        int count = std::abs(it->exponent);
        int eps = it->exponent > 0 ? 1 : -1;
        for (int i = 0; i < count; ++i) units.push_back({it->curve, eps});
    }

    SurgeryDescription desc;
    size_t k = units.size();
    desc.linking.assign(k, IntVector(k, 0));
    desc.rotations.assign(k, 0);
    desc.q = 0;
    for (size_t i = 0; i < k; ++i) {
        desc.linking[i][i] = seifert_pairing(units[i].curve.h1, units[i].curve.h1) -
                             units[i].eps;
        desc.rotations[i] = rotation_of(units[i].curve.name);
        if (units[i].eps < 0) ++desc.q;
        for (size_t j = i + 1; j < k; ++j) {
            long long lk = seifert_pairing(units[i].curve.h1, units[j].curve.h1);
            desc.linking[i][j] = lk;
            desc.linking[j][i] = lk;
        }
    }
    return desc;
}

Rational family_d3(int n) { return d3(family_surgery_description(n)); }

bool same_fibered_knot(int n, int m) { return n == m || n + m == -1; }

}  // namespace knotforge
