#ifndef MODCAT_LABELS_HPP
#define MODCAT_LABELS_HPP

#include <string>
#include <utility>
#include <vector>

#include "modcat/context.hpp"

namespace modcat {

/// Position of an indecomposable in the AR mesh: rows by length (y = len-1),
/// within a row the top vertex decreases left to right, diagonals interleave.
struct MeshCoord {
    int x = 0;
    int y = 0;
};
MeshCoord mesh_coord(const NakayamaAlgebra& a, const Interval& iv);

/// Arrows of the AR quiver: (t,l) -> (t-1,l+1) and (t,l) -> (t,l-1) when the
/// targets are valid intervals.
std::vector<std::pair<Interval, Interval>> ar_quiver_arrows(const NakayamaAlgebra& a);

/// Named positions in the AR mesh of the n=9, m=4 algebra. The name grid is
/// fixed data; the interval attached to each name is derived from the mesh:
/// row of length l, position p from the left, top vertex n-l+1-p. Validated:
/// the names carrying the regular module are exactly the projectives, the
/// mesh source and sink carry the expected names.
std::vector<std::pair<std::string, Interval>> derived_label_table(const NakayamaAlgebra& a);

/// Resolve "(t,l)" or a published mesh name such as "P_1", "M^4_3", "H_2".
Interval resolve_label(const AlgebraContext& ctx, const std::string& s);

/// Preferred display name: the mesh name when the algebra has one, else "(t,l)".
std::string display_label(const AlgebraContext& ctx, int index);

} // namespace modcat

#endif
