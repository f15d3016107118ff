#ifndef MODCAT_REP_HPP
#define MODCAT_REP_HPP

#include <optional>
#include <vector>

#include "modcat/algebra.hpp"
#include "modcat/matrix.hpp"

namespace modcat {

/// Matrix representation of a module: one vector space per vertex and one
/// matrix per arrow v -> v+1. Vertices are 0-based internally.
struct Rep {
    std::vector<int> dims;      // size n
    std::vector<Mat> arrows;    // size n-1; arrows[v]: dims[v+1] x dims[v]

    int n() const { return static_cast<int>(dims.size()); }
};

/// A morphism of representations M -> N: comps[v] has shape dimsN[v] x dimsM[v].
struct RepMap {
    std::vector<Mat> comps;
};

/// Where each summand's strand sits in the per-vertex bases of build_rep.
struct RepLayout {
    std::vector<std::vector<int>> parts_at;  // parts_at[v] = part indices supported at v
    int slot_of(int vertex, int part) const;
};

/// Scalar matrix of a module map over the canonical hom bases: entry (q, p)
/// is the coefficient of the canonical map parts[p] of M -> parts[q] of N.
struct CoeffMat {
    int nparts_dom = 0;
    int nparts_cod = 0;
    Mat c;  // nparts_cod x nparts_dom
};

Rep build_rep(const NakayamaAlgebra& a, const ModuleObj& m);
RepLayout build_layout(const NakayamaAlgebra& a, const ModuleObj& m);

/// Relations hold: every m-fold composite of arrows vanishes.
bool rep_satisfies_relations(const NakayamaAlgebra& a, const PrimeField& F, const Rep& r);

bool repmap_commutes(const PrimeField& F, const Rep& dom, const Rep& cod, const RepMap& f);
bool repmap_is_mono(const PrimeField& F, const RepMap& f, const Rep& dom);
bool repmap_is_epi(const PrimeField& F, const RepMap& f, const Rep& cod);
bool repmap_is_zero(const RepMap& f);

RepMap repmap_compose(const PrimeField& F, const RepMap& g, const RepMap& f);  // g after f
RepMap assemble_map(const NakayamaAlgebra& a, const ModuleObj& dom, const ModuleObj& cod,
                    const Mat& coeffs);
/// Inverse of assemble_map for genuine module maps; checks block consistency.
Mat extract_coeffs(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& dom,
                   const ModuleObj& cod, const RepMap& f);

/// Interval decomposition of a representation with an explicit isomorphism:
/// iso maps build_rep(module) onto r (per-vertex invertible).
struct Decomposition {
    ModuleObj module;
    RepMap iso;
};
Decomposition decompose_rep(const NakayamaAlgebra& a, const PrimeField& F, const Rep& r);

/// Kernel of a module map with its embedding into dom (as a module map).
struct SubObject {
    ModuleObj module;
    RepMap incl;  // build_rep(module) -> rep(dom)
};
SubObject kernel_of(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& dom,
                    const ModuleObj& cod, const RepMap& f);

/// Cokernel of a module map with the projection out of cod.
struct QuotObject {
    ModuleObj module;
    RepMap proj;  // rep(cod) -> build_rep(module)
};
QuotObject cokernel_of(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& dom,
                       const ModuleObj& cod, const RepMap& f);

/// Image of a module map as a multiset of intervals.
ModuleObj image_of(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& dom,
                   const ModuleObj& cod, const RepMap& f);

} // namespace modcat

#endif
