#pragma once

#include <vector>

#include "knotforge/diagram.hpp"

namespace knotforge {

// One strand passing through the disk bounded by an annulus boundary circle:
// the arc label in the host diagram and the sign of the passage.
struct TwistStrand {
    int arc = 0;
    int orientation = 1;
};

struct TwistSite {
    std::vector<TwistStrand> strands;
};

// A diagram together with the two marked twist sites for the annulus
// boundary circles c1 and c2.
struct AnnulusPresentation {
    PlanarDiagram diagram;
    TwistSite site1;
    TwistSite site2;
};

// n-fold annulus twist: blowing down the two surgery circles inserts -n full
// twists on the strands through site1 and +n through site2, followed by
// Reidemeister I/II simplification.
PlanarDiagram annulus_twist(const AnnulusPresentation& ap, int n, int bound = 8);

// Built-in annulus presentation of the 6-crossing fibered knot 6_3; the twist
// family generator K_n.
const AnnulusPresentation& annulus_presentation_63();
PlanarDiagram family_63(int n, int bound = 8);

// Inserts m full twists (right-handed for m > 0) on the listed strands,
// splicing a 2|m|-crossing braid block into the diagram. Arc labels of the
// host diagram are preserved, so sites stay addressable afterwards.
PlanarDiagram insert_full_twists(const PlanarDiagram& d, const TwistSite& site, int m);

}  // namespace knotforge
