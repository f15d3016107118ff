#ifndef MODCAT_HOM_HPP
#define MODCAT_HOM_HPP

#include <vector>

#include "modcat/rep.hpp"

namespace modcat {

/// A full intertwiner space Hom(M, N): dimension and a basis of module maps.
struct HomSpace {
    int dim = 0;
    std::vector<RepMap> basis;
};

/// Solve the intertwiner linear system F_{v+1} A^M_v = A^N_v F_v at every arrow.
HomSpace hom_space(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& M,
                   const ModuleObj& N);

int hom_dim_solver(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& M,
                   const ModuleObj& N);

} // namespace modcat

#endif
