#include "knotforge/annulus.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace knotforge {

namespace {

struct SlotRef {
    size_t crossing;
    int slot;
};

// Head slot (where the arc ends) for every arc of a validated diagram.
std::map<int, SlotRef> head_slots(const PlanarDiagram& d) {
    std::map<int, SlotRef> out;
    for (size_t i = 0; i < d.crossings().size(); ++i) {
        const Crossing& c = d.crossings()[i];
        out[c.arcs[0]] = {i, 0};
        int head = c.over_in_at_3 ? c.arcs[3] : c.arcs[1];
        out[head] = {i, c.over_in_at_3 ? 3 : 1};
    }
    return out;
}

// Tail slot (where the arc starts).
std::map<int, SlotRef> tail_slots(const PlanarDiagram& d) {
    std::map<int, SlotRef> out;
    for (size_t i = 0; i < d.crossings().size(); ++i) {
        const Crossing& c = d.crossings()[i];
        out[c.arcs[2]] = {i, 2};
        int tail = c.over_in_at_3 ? c.arcs[1] : c.arcs[3];
        out[tail] = {i, c.over_in_at_3 ? 1 : 3};
    }
    return out;
}

// Crossing tuple for two strands crossing once. The "A" strand enters at the
// lower left, "B" at the lower right; directions are relative to the sweep.
// Slots are listed counterclockwise from the incoming under-strand.
std::array<int, 4> twist_crossing(bool a_over, bool a_up, bool b_up, int a_in, int a_out,
                                  int b_in, int b_out) {
    if (a_over) {
        if (b_up) return a_up ? std::array<int, 4>{b_in, a_out, b_out, a_in}
                              : std::array<int, 4>{b_in, a_in, b_out, a_out};
        return a_up ? std::array<int, 4>{b_in, a_in, b_out, a_out}
                    : std::array<int, 4>{b_in, a_out, b_out, a_in};
    }
    if (a_up) return b_up ? std::array<int, 4>{a_in, b_in, a_out, b_out}
                          : std::array<int, 4>{a_in, b_out, a_out, b_in};
    return b_up ? std::array<int, 4>{a_in, b_out, a_out, b_in}
                : std::array<int, 4>{a_in, b_in, a_out, b_out};
}

struct StrandState {
    int id;           // index into the site's strand list
    bool up;          // travel direction through the block
    int label_below;  // dangling segment label under the sweep front
};

bool is_double_pass(const TwistSite& site) {
    return site.strands.size() == 2 && site.strands[0].arc == site.strands[1].arc;
}

void check_site(const PlanarDiagram& d, const TwistSite& site) {
    if (site.strands.empty()) throw input_error("twist site: no strands");
    std::set<int> distinct;
    for (const TwistStrand& s : site.strands) {
        if (s.arc < 1 || s.arc > d.arc_count())
            throw input_error("twist site: arc " + std::to_string(s.arc) +
                              " missing from diagram");
        distinct.insert(s.arc);
    }
    // A disk crossed twice by one arc is listed as that arc twice.
    if (distinct.size() != site.strands.size() && !is_double_pass(site))
        throw input_error("twist site: repeated arc");
    for (const TwistStrand& s : site.strands)
        if (s.orientation != 1 && s.orientation != -1)
            throw input_error("twist site: orientation must be +-1");
}

// Splices the twist block into the raw tuple list, preserving every existing
// label; fresh labels continue from next_label. Spliced strands keep their
// label on the segment below the block, so repeated insertions at the same
// site stack.
void splice_twists(std::vector<std::array<int, 4>>& tuples, int& next_label,
                   const std::map<int, SlotRef>& heads, const std::map<int, SlotRef>& tails,
                   const TwistSite& site, int m) {
    if (m == 0) return;
    size_t k = site.strands.size();
    if (k == 1) return;  // a single strand through the disk only gains kinks
    auto fresh = [&] { return ++next_label; };
    bool a_over_everywhere = m > 0;
    int full_twists = std::abs(m);

    bool double_pass = is_double_pass(site);
    std::vector<StrandState> pos(k);
    std::vector<int> entry_label(k, 0);  // down strands: label entering the block top
    for (size_t i = 0; i < k; ++i) {
        bool up = site.strands[i].orientation == site.strands[0].orientation;
        bool fresh_below = double_pass && i == 1;
        pos[i] = {static_cast<int>(i), up, fresh_below ? fresh() : site.strands[i].arc};
        if (fresh_below) entry_label[i] = pos[i].label_below;
        if (!up && !double_pass) entry_label[i] = fresh();
    }

    // One full twist on k strands is (sigma_1 ... sigma_{k-1})^k.
    for (int t = 0; t < full_twists; ++t) {
        for (size_t rep = 0; rep < k; ++rep) {
            for (size_t i = 0; i + 1 < k; ++i) {
                StrandState left = pos[i];
                StrandState right = pos[i + 1];
                int a_in, a_out, b_in, b_out;
                if (left.up) {
                    a_in = left.label_below;
                    a_out = fresh();
                    left.label_below = a_out;
                } else {
                    a_out = left.label_below;
                    a_in = fresh();
                    left.label_below = a_in;
                }
                if (right.up) {
                    b_in = right.label_below;
                    b_out = fresh();
                    right.label_below = b_out;
                } else {
                    b_out = right.label_below;
                    b_in = fresh();
                    right.label_below = b_in;
                }
                tuples.push_back(twist_crossing(a_over_everywhere, left.up, right.up,
                                                a_in, a_out, b_in, b_out));
                pos[i] = right;
                pos[i + 1] = left;
            }
        }
    }

    // Wire the block's top and bottom back into the host diagram.
    std::map<int, int> relabel;
    if (double_pass) {
        // One arc passes twice: the strand leaves the block and loops back in.
        const StrandState& first = pos[0].id == 0 ? pos[0] : pos[1];
        const StrandState& second = pos[0].id == 0 ? pos[1] : pos[0];
        int arc = site.strands[0].arc;
        SlotRef head = heads.at(arc);
        if (second.up) {
            // same-direction double pass: top of pass one feeds the bottom
            // of pass two, the top of pass two feeds the head slot
            relabel[entry_label[1]] = first.label_below;
            tuples[head.crossing][static_cast<size_t>(head.slot)] = second.label_below;
        } else {
            // U-turn: the two tops join, the second pass exits downward
            relabel[second.label_below] = first.label_below;
            tuples[head.crossing][static_cast<size_t>(head.slot)] = entry_label[1];
        }
    } else {
        for (size_t i = 0; i < k; ++i) {
            const StrandState& st = pos[i];
            int orig_arc = site.strands[static_cast<size_t>(st.id)].arc;
            if (st.up) {
                SlotRef head = heads.at(orig_arc);
                tuples[head.crossing][static_cast<size_t>(head.slot)] = st.label_below;
            } else {
                // Downward strand: the block's top input is a new segment
                // leaving the tail slot; the exit keeps the original label.
                int entry = entry_label[static_cast<size_t>(st.id)];
                relabel[st.label_below] = entry;
                SlotRef tail = tails.at(orig_arc);
                tuples[tail.crossing][static_cast<size_t>(tail.slot)] = entry;
            }
        }
    }
    if (!relabel.empty()) {
        for (auto& tup : tuples)
            for (int s = 0; s < 4; ++s) {
                auto it = relabel.find(tup[static_cast<size_t>(s)]);
                if (it != relabel.end()) tup[static_cast<size_t>(s)] = it->second;
            }
    }
}

// Compacts labels to 1..2n, keeping labels below `stable` fixed.
void compact_labels(std::vector<std::array<int, 4>>& tuples, int stable) {
    std::map<int, int> compact;
    for (int a = 1; a <= stable; ++a) compact[a] = a;
    for (auto& tup : tuples)
        for (int s = 0; s < 4; ++s) {
            int a = tup[static_cast<size_t>(s)];
            if (!compact.count(a)) compact[a] = static_cast<int>(compact.size()) + 1;
        }
    for (auto& tup : tuples)
        for (int s = 0; s < 4; ++s) tup[static_cast<size_t>(s)] = compact[tup[static_cast<size_t>(s)]];
}

}  // namespace

PlanarDiagram insert_full_twists(const PlanarDiagram& d, const TwistSite& site, int m) {
    check_site(d, site);
    if (m == 0) return d;
    std::map<int, SlotRef> heads = head_slots(d);
    std::map<int, SlotRef> tails = tail_slots(d);
    std::vector<std::array<int, 4>> tuples;
    for (const Crossing& c : d.crossings()) tuples.push_back(c.arcs);
    int next_label = d.arc_count();
    splice_twists(tuples, next_label, heads, tails, site, m);
    compact_labels(tuples, d.arc_count());
    return PlanarDiagram::from_pd(tuples, d.name());
}

PlanarDiagram annulus_twist(const AnnulusPresentation& ap, int n, int bound) {
    if (std::abs(n) > bound)
        throw input_error("annulus_twist: |n| exceeds bound " + std::to_string(bound));
    const PlanarDiagram& d = ap.diagram;
    check_site(d, ap.site1);
    check_site(d, ap.site2);
    std::set<int> arcs1;
    for (const TwistStrand& s : ap.site1.strands) arcs1.insert(s.arc);
    for (const TwistStrand& s : ap.site2.strands)
        if (arcs1.count(s.arc)) throw input_error("annulus_twist: twist sites share arc");
    if (n == 0) return simplified(d);

    std::map<int, SlotRef> heads = head_slots(d);
    std::map<int, SlotRef> tails = tail_slots(d);
    std::vector<std::array<int, 4>> tuples;
    for (const Crossing& c : d.crossings()) tuples.push_back(c.arcs);
    int next_label = d.arc_count();
    splice_twists(tuples, next_label, heads, tails, ap.site1, -n);
    splice_twists(tuples, next_label, heads, tails, ap.site2, n);
    compact_labels(tuples, d.arc_count());
    return simplified(PlanarDiagram::from_pd(tuples, d.name()).canonical());
}

const AnnulusPresentation& annulus_presentation_63() {
    // Base data of the twist family: 6_3 rendered as the boundary of its
    // genus-2 surface (a disk with four chained bands, two per handedness),
    // with the two blow-down circles around the disk between band feet, each
    // crossed by two antiparallel strands. The two circles cancel on first
    // homology of the surface, which keeps the family's Alexander polynomial
    // fixed; every member is a planar diagram. Pinned by the family's
    // invariant behavior for |n| <= 8.
    static const AnnulusPresentation ap = [] {
        AnnulusPresentation out;
        out.diagram = PlanarDiagram::from_pd(
            {{32, 2, 33, 1},  {25, 2, 26, 3},   {31, 30, 32, 31}, {26, 30, 27, 29},
             {6, 34, 7, 33},  {19, 34, 20, 35}, {5, 24, 6, 25},   {20, 24, 21, 23},
             {38, 8, 39, 7},  {13, 8, 14, 9},   {37, 18, 38, 19}, {14, 18, 15, 17},
             {27, 5, 28, 4},  {3, 29, 4, 28},   {21, 37, 22, 36}, {35, 23, 36, 22},
             {10, 15, 11, 16}, {16, 9, 17, 10}, {40, 11, 1, 12},  {12, 39, 13, 40}},
            "6_3");
        out.site1.strands = {{5, 1}, {11, -1}};
        out.site2.strands = {{15, 1}, {21, -1}};
        return out;
    }();
    return ap;
}

PlanarDiagram family_63(int n, int bound) {
    PlanarDiagram out = annulus_twist(annulus_presentation_63(), n, bound);
    out.set_name("A^" + std::to_string(n) + "(6_3)");
    return out;
}

}  // namespace knotforge
