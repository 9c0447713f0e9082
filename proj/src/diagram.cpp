#include "knotforge/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace knotforge {

namespace {

struct Occurrence {
    int crossing;
    int slot;
};

// Role of a slot given the crossing's over-in flag: true = the arc ends here.
bool slot_is_head(int slot, bool over_in_at_3) {
    switch (slot) {
        case 0: return true;
        case 2: return false;
        case 1: return !over_in_at_3;
        default: return over_in_at_3;
    }
}

}  // namespace

PlanarDiagram PlanarDiagram::unknot(std::string name) {
    PlanarDiagram d;
    d.name_ = std::move(name);
    return d;
}

PlanarDiagram PlanarDiagram::from_pd(const std::vector<std::array<int, 4>>& tuples,
                                     std::string name) {
    PlanarDiagram d;
    d.name_ = std::move(name);
    for (const auto& t : tuples) {
        Crossing c;
        c.arcs = t;
        d.crossings_.push_back(c);
    }
    d.validate_and_orient();
    return d;
}

PlanarDiagram PlanarDiagram::parse(const std::string& text, std::string name) {
    std::vector<std::array<int, 4>> tuples;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto skip_sep = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_sep();
    while (i < text.size()) {
        if (text[i] == 'X' || text[i] == 'x') ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '(')
            throw input_error("PD parse: expected '(' in crossing tuple");
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            bool neg = false;
            if (i < text.size() && text[i] == '-') {
                neg = true;
                ++i;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw input_error("PD parse: malformed tuple, expected arc label");
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            t[static_cast<size_t>(k)] = static_cast<int>(neg ? -v : v);
            skip_ws();
            if (k < 3) {
                if (i >= text.size() || text[i] != ',')
                    throw input_error("PD parse: malformed tuple, expected ','");
                ++i;
            }
        }
        if (i >= text.size() || text[i] != ')')
            throw input_error("PD parse: malformed tuple, expected ')'");
        ++i;
        tuples.push_back(t);
        skip_sep();
    }
    return from_pd(tuples, std::move(name));
}

void PlanarDiagram::validate_and_orient() {
    int n = crossing_count();
    if (n == 0) {
        arc_count_ = 0;
        return;
    }
    arc_count_ = 2 * n;

    std::map<int, std::vector<Occurrence>> occ;
    for (int c = 0; c < n; ++c) {
        for (int s = 0; s < 4; ++s) {
            int a = crossings_[static_cast<size_t>(c)].arcs[static_cast<size_t>(s)];
            if (a < 1 || a > arc_count_)
                throw input_error("PD validation: arc " + std::to_string(a) +
                                  " out of range 1.." + std::to_string(arc_count_));
            occ[a].push_back({c, s});
        }
    }
    for (int a = 1; a <= arc_count_; ++a) {
        size_t count = occ.count(a) ? occ[a].size() : 0;
        if (count != 2)
            throw input_error("PD validation: arc " + std::to_string(a) + " appears " +
                              std::to_string(count) + " times, expected 2");
    }

    // Determine where the over-strand enters each crossing. Slot roles for
    // the under-strand are fixed; each arc needs one head and one tail, which
    // propagates the over-strand direction across the diagram.
    std::vector<int> over_state(static_cast<size_t>(n), -1);  // -1 unknown, else 0/1
    auto set_state = [&](int c, int v) {
        if (over_state[static_cast<size_t>(c)] == -1) {
            over_state[static_cast<size_t>(c)] = v;
            return true;
        }
        if (over_state[static_cast<size_t>(c)] != v)
            throw input_error("PD validation: inconsistent strand orientation");
        return false;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = 1; a <= arc_count_; ++a) {
            const auto& os = occ[a];
            const Occurrence &o1 = os[0], &o2 = os[1];
            bool v1 = (o1.slot % 2) == 0;  // fixed role slot
            bool v2 = (o2.slot % 2) == 0;
            auto fixed_role = [&](const Occurrence& o) { return slot_is_head(o.slot, false); };
            if (v1 && v2) {
                if (fixed_role(o1) == fixed_role(o2))
                    throw input_error("PD validation: arc " + std::to_string(a) +
                                      " is inconsistently oriented");
                continue;
            }
            auto known = [&](const Occurrence& o) {
                return (o.slot % 2) == 0 || over_state[static_cast<size_t>(o.crossing)] != -1;
            };
            auto role_of = [&](const Occurrence& o) {
                bool flag = (o.slot % 2) == 0
                                ? false
                                : over_state[static_cast<size_t>(o.crossing)] == 1;
                return slot_is_head(o.slot, flag);
            };
            auto force = [&](const Occurrence& o, bool head) {
                // head at slot 3 or tail at slot 1 means the over-strand
                // enters at slot 3.
                int v = (o.slot == 3) == head ? 1 : 0;
                if (set_state(o.crossing, v)) progress = true;
            };
            if (known(o1) && known(o2)) {
                if (role_of(o1) == role_of(o2))
                    throw input_error("PD validation: arc " + std::to_string(a) +
                                      " is inconsistently oriented");
            } else if (known(o1)) {
                force(o2, !role_of(o1));
            } else if (known(o2)) {
                force(o1, !role_of(o2));
            }
        }
    }
    // Components with no under-strand anchor get an arbitrary direction; the
    // single-cycle check below rejects them as extra components.
    for (auto& s : over_state)
        if (s == -1) s = 0;

    for (int c = 0; c < n; ++c) {
        crossings_[static_cast<size_t>(c)].over_in_at_3 = over_state[static_cast<size_t>(c)] == 1;
        crossings_[static_cast<size_t>(c)].sign = over_state[static_cast<size_t>(c)] == 1 ? 1 : -1;
    }

    // Successor map and single-component check.
    std::vector<int> succ(static_cast<size_t>(arc_count_) + 1, 0);
    for (const Crossing& c : crossings_) {
        succ[static_cast<size_t>(c.arcs[0])] = c.arcs[2];
        int head = c.over_in_at_3 ? c.arcs[3] : c.arcs[1];
        int tail = c.over_in_at_3 ? c.arcs[1] : c.arcs[3];
        succ[static_cast<size_t>(head)] = tail;
    }
    int steps = 0, cur = 1;
    do {
        cur = succ[static_cast<size_t>(cur)];
        ++steps;
    } while (cur != 1 && steps <= arc_count_);
    if (steps != arc_count_)
        throw input_error("PD validation: diagram has multiple components");
}

int PlanarDiagram::successor(int arc) const {
    for (const Crossing& c : crossings_) {
        if (c.arcs[0] == arc) return c.arcs[2];
        int head = c.over_in_at_3 ? c.arcs[3] : c.arcs[1];
        int tail = c.over_in_at_3 ? c.arcs[1] : c.arcs[3];
        if (head == arc) return tail;
    }
    throw input_error("successor: unknown arc " + std::to_string(arc));
}

PlanarDiagram::Overarcs PlanarDiagram::overarcs() const {
    Overarcs out;
    out.arc_to_overarc.assign(static_cast<size_t>(arc_count_) + 1, -1);
    // Union arcs joined by an over-passage.
    std::vector<int> parent(static_cast<size_t>(arc_count_) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const Crossing& c : crossings_) {
        int a = find(c.arcs[1]), b = find(c.arcs[3]);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
    std::map<int, int> index;
    for (int a = 1; a <= arc_count_; ++a) {
        int r = find(a);
        auto it = index.find(r);
        if (it == index.end()) it = index.emplace(r, static_cast<int>(index.size())).first;
        out.arc_to_overarc[static_cast<size_t>(a)] = it->second;
    }
    out.count = static_cast<int>(index.size());
    return out;
}

int PlanarDiagram::writhe() const {
    int w = 0;
    for (const Crossing& c : crossings_) w += c.sign;
    return w;
}

PlanarDiagram PlanarDiagram::mirrored() const {
    std::vector<std::array<int, 4>> tuples;
    for (const Crossing& c : crossings_) {
        const auto& a = c.arcs;
        if (c.over_in_at_3) {
            tuples.push_back({a[3], a[0], a[1], a[2]});
        } else {
            tuples.push_back({a[1], a[2], a[3], a[0]});
        }
    }
    return from_pd(tuples, name_.empty() ? "" : "mirror(" + name_ + ")").canonical();
}

PlanarDiagram PlanarDiagram::reversed() const {
    std::vector<std::array<int, 4>> tuples;
    for (const Crossing& c : crossings_) {
        const auto& a = c.arcs;
        tuples.push_back({a[2], a[3], a[0], a[1]});
    }
    return from_pd(tuples, name_.empty() ? "" : "reverse(" + name_ + ")").canonical();
}

PlanarDiagram PlanarDiagram::canonical() const {
    if (crossings_.empty()) return *this;
    // Relabel arcs 1..2n in traversal order; among all starting arcs pick the
    // one giving the lexicographically least sorted tuple list, which makes
    // the form independent of the input labeling.
    std::vector<int> succ(static_cast<size_t>(arc_count_) + 1, 0);
    for (const Crossing& c : crossings_) {
        succ[static_cast<size_t>(c.arcs[0])] = c.arcs[2];
        int head = c.over_in_at_3 ? c.arcs[3] : c.arcs[1];
        int tail = c.over_in_at_3 ? c.arcs[1] : c.arcs[3];
        succ[static_cast<size_t>(head)] = tail;
    }
    std::vector<std::array<int, 4>> best;
    for (int start = 1; start <= arc_count_; ++start) {
        std::vector<int> relabel(static_cast<size_t>(arc_count_) + 1, 0);
        int cur = start;
        int next_label = 1;
        do {
            relabel[static_cast<size_t>(cur)] = next_label++;
            cur = succ[static_cast<size_t>(cur)];
        } while (cur != start);
        std::vector<std::array<int, 4>> tuples;
        for (const Crossing& c : crossings_) {
            std::array<int, 4> t{};
            for (int s = 0; s < 4; ++s)
                t[static_cast<size_t>(s)] =
                    relabel[static_cast<size_t>(c.arcs[static_cast<size_t>(s)])];
            tuples.push_back(t);
        }
        std::sort(tuples.begin(), tuples.end());
        if (best.empty() || tuples < best) best = std::move(tuples);
    }
    return from_pd(best, name_);
}

bool PlanarDiagram::same_diagram(const PlanarDiagram& rhs) const {
    PlanarDiagram a = canonical(), b = rhs.canonical();
    if (a.arc_count_ != b.arc_count_ || a.crossings_.size() != b.crossings_.size()) return false;
    for (size_t i = 0; i < a.crossings_.size(); ++i)
        if (a.crossings_[i].arcs != b.crossings_[i].arcs) return false;
    return true;
}

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2) {
    std::string name;
    if (!d1.name().empty() || !d2.name().empty())
        name = d1.name() + " # " + d2.name();
    if (d1.crossing_count() == 0) {
        PlanarDiagram out = d2;
        if (!name.empty()) out.set_name(name);
        return out;
    }
    if (d2.crossing_count() == 0) {
        PlanarDiagram out = d1;
        if (!name.empty()) out.set_name(name);
        return out;
    }
    PlanarDiagram a = d1.canonical(), b = d2.canonical();
    int shift = a.arc_count();
    int e1 = 1;
    int e2 = shift + 1;

    std::vector<std::array<int, 4>> tuples;
    for (const Crossing& c : a.crossings()) tuples.push_back(c.arcs);
    for (const Crossing& c : b.crossings()) {
        std::array<int, 4> t{};
        for (int s = 0; s < 4; ++s) t[static_cast<size_t>(s)] = c.arcs[static_cast<size_t>(s)] + shift;
        tuples.push_back(t);
    }
    // Splice: swap the labels at the two head slots so each strand flows
    // into the other diagram.
    auto head_slot_of = [](const PlanarDiagram& d, int arc) {
        for (size_t i = 0; i < d.crossings().size(); ++i) {
            const Crossing& c = d.crossings()[i];
            if (c.arcs[0] == arc) return std::pair<size_t, int>(i, 0);
            int head = c.over_in_at_3 ? c.arcs[3] : c.arcs[1];
            if (head == arc) return std::pair<size_t, int>(i, c.over_in_at_3 ? 3 : 1);
        }
        throw input_error("connected_sum: arc head not found");
    };
    auto [i1, s1] = head_slot_of(a, e1);
    auto [i2, s2] = head_slot_of(b, e2 - shift);
    tuples[i1][static_cast<size_t>(s1)] = e2;
    tuples[a.crossings().size() + i2][static_cast<size_t>(s2)] = e1;

    return PlanarDiagram::from_pd(tuples, name).canonical();
}

namespace {

// Rebuild a diagram after removing crossings, merging arc labels per the
// union-find map.
PlanarDiagram rebuild(const PlanarDiagram& d, const std::vector<bool>& removed,
                      std::vector<int>& parent, const std::string& name) {
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    std::vector<std::array<int, 4>> tuples;
    for (size_t i = 0; i < d.crossings().size(); ++i) {
        if (removed[i]) continue;
        std::array<int, 4> t{};
        for (int s = 0; s < 4; ++s)
            t[static_cast<size_t>(s)] = find(d.crossings()[i].arcs[static_cast<size_t>(s)]);
        tuples.push_back(t);
    }
    if (tuples.empty()) return PlanarDiagram::unknot(name);
    // Compact labels to 1..2n before validation.
    std::map<int, int> compact;
    for (auto& t : tuples)
        for (int s = 0; s < 4; ++s) {
            int a = t[static_cast<size_t>(s)];
            if (!compact.count(a)) compact[a] = static_cast<int>(compact.size()) + 1;
        }
    for (auto& t : tuples)
        for (int s = 0; s < 4; ++s) t[static_cast<size_t>(s)] = compact[t[static_cast<size_t>(s)]];
    return PlanarDiagram::from_pd(tuples, name).canonical();
}

bool try_reidemeister1(const PlanarDiagram& d, PlanarDiagram& out) {
    for (size_t i = 0; i < d.crossings().size(); ++i) {
        const auto& a = d.crossings()[i].arcs;
        for (int s = 0; s < 4; ++s) {
            if (a[static_cast<size_t>(s)] != a[static_cast<size_t>((s + 1) % 4)]) continue;
            if (d.crossing_count() == 1) {
                out = PlanarDiagram::unknot(d.name());
                return true;
            }
            int o1 = a[static_cast<size_t>((s + 2) % 4)];
            int o2 = a[static_cast<size_t>((s + 3) % 4)];
            std::vector<bool> removed(d.crossings().size(), false);
            removed[i] = true;
            std::vector<int> parent(static_cast<size_t>(d.arc_count()) + 1);
            std::iota(parent.begin(), parent.end(), 0);
            parent[static_cast<size_t>(std::max(o1, o2))] = std::min(o1, o2);
            out = rebuild(d, removed, parent, d.name());
            return true;
        }
    }
    return false;
}

bool try_reidemeister2(const PlanarDiagram& d, PlanarDiagram& out) {
    int n = d.crossing_count();
    for (size_t i = 0; i + 1 < static_cast<size_t>(n); ++i) {
        for (size_t j = i + 1; j < static_cast<size_t>(n); ++j) {
            const auto& ai = d.crossings()[i].arcs;
            const auto& aj = d.crossings()[j].arcs;
            // arcs shared by both crossings, with their slots
            std::vector<std::array<int, 3>> shared;  // arc, slot_i, slot_j
            for (int si = 0; si < 4; ++si)
                for (int sj = 0; sj < 4; ++sj)
                    if (ai[static_cast<size_t>(si)] == aj[static_cast<size_t>(sj)])
                        shared.push_back({ai[static_cast<size_t>(si)], si, sj});
            for (size_t x = 0; x < shared.size(); ++x) {
                for (size_t y = x + 1; y < shared.size(); ++y) {
                    if (shared[x][0] == shared[y][0]) continue;
                    int se_i = shared[x][1], se_j = shared[x][2];
                    int sf_i = shared[y][1], sf_j = shared[y][2];
                    // adjacent slots at both crossings
                    if ((se_i + sf_i) % 2 == 0 || (se_j + sf_j) % 2 == 0) continue;
                    // one strand over at both crossings, the other under
                    if ((se_i % 2) != (se_j % 2)) continue;
                    if (d.crossing_count() == 2) {
                        out = PlanarDiagram::unknot(d.name());
                        return true;
                    }
                    std::vector<bool> removed(d.crossings().size(), false);
                    removed[i] = removed[j] = true;
                    std::vector<int> parent(static_cast<size_t>(d.arc_count()) + 1);
                    std::iota(parent.begin(), parent.end(), 0);
                    auto unite = [&](int u, int v) {
                        std::function<int(int)> find = [&](int z) {
                            while (parent[static_cast<size_t>(z)] != z) z = parent[static_cast<size_t>(z)];
                            return z;
                        };
                        int ru = find(u), rv = find(v);
                        if (ru != rv) parent[static_cast<size_t>(std::max(ru, rv))] = std::min(ru, rv);
                    };
                    unite(ai[static_cast<size_t>((se_i + 2) % 4)], aj[static_cast<size_t>((se_j + 2) % 4)]);
                    unite(ai[static_cast<size_t>((sf_i + 2) % 4)], aj[static_cast<size_t>((sf_j + 2) % 4)]);
                    out = rebuild(d, removed, parent, d.name());
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

PlanarDiagram simplified(const PlanarDiagram& d) {
    PlanarDiagram cur = d.canonical();
    bool changed = true;
    while (changed) {
        changed = false;
        PlanarDiagram next;
        if (try_reidemeister1(cur, next)) {
            cur = next;
            changed = true;
            continue;
        }
        if (try_reidemeister2(cur, next)) {
            cur = next;
            changed = true;
        }
    }
    return cur;
}

}  // namespace knotforge
