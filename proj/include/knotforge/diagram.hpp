#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotforge {

// Raised for malformed or inconsistent user input (bad PD codes, out-of-range
// twist parameters, unreadable files). The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a computation is mathematically inapplicable (e.g. a singular
// linking matrix). The CLI maps this to exit code 3.
class math_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One crossing of an oriented diagram. Arc labels are listed counterclockwise
// starting at the incoming under-strand, so arcs[0] is the under-strand head
// and arcs[2] its tail. Whether the over-strand enters at slot 3 or slot 1
// (and with it the sign) is derived during validation.
struct Crossing {
    std::array<int, 4> arcs{};
    int sign = 0;             // +1 when the over-strand enters at slot 3
    bool over_in_at_3 = false;
};

// Oriented knot diagram as a PD code. Valid diagrams have every arc label in
// 1..arc_count appearing exactly twice and a single closed component; the
// 0-crossing diagram is the unknot.
class PlanarDiagram {
public:
    static PlanarDiagram unknot(std::string name = "unknot");
    static PlanarDiagram from_pd(const std::vector<std::array<int, 4>>& tuples,
                                 std::string name = "");
    // Text form: whitespace-separated X(a,b,c,d) tuples; "" is the unknot.
    static PlanarDiagram parse(const std::string& text, std::string name = "");

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int arc_count() const { return arc_count_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Arc that follows `arc` along the orientation.
    int successor(int arc) const;

    // Wirtinger generators: overarc index for every arc, plus the count.
    struct Overarcs {
        std::vector<int> arc_to_overarc;  // 1-based arc labels; index 0 unused
        int count = 0;
    };
    Overarcs overarcs() const;

    int writhe() const;

    PlanarDiagram mirrored() const;
    PlanarDiagram reversed() const;

    // Renumbers arcs 1..2n in traversal order and sorts crossings; all
    // operations return diagrams in this form.
    PlanarDiagram canonical() const;

    bool same_diagram(const PlanarDiagram& rhs) const;

private:
    std::vector<Crossing> crossings_;
    int arc_count_ = 0;
    std::string name_;

    void validate_and_orient();
    friend PlanarDiagram connected_sum(const PlanarDiagram&, const PlanarDiagram&);
    friend PlanarDiagram simplified(const PlanarDiagram&);
    friend class TwistSplicer;
};

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2);

// Exhaustive Reidemeister I and II reduction; never increases the crossing
// count and preserves the knot type.
PlanarDiagram simplified(const PlanarDiagram& d);

}  // namespace knotforge
