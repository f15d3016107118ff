#include "modcat/hom.hpp"

namespace modcat {

HomSpace hom_space(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& M,
                   const ModuleObj& N) {
    Rep rm = build_rep(a, M);
    Rep rn = build_rep(a, N);
    int n = a.n;

    // unknown layout: per vertex v, matrix F_v of shape rn.dims[v] x rm.dims[v]
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + rn.dims[v] * rm.dims[v];
    int nunk = offset[n];

    int neq = 0;
    for (int v = 0; v + 1 < n; ++v) neq += rn.dims[v + 1] * rm.dims[v];

    Mat sys(neq, nunk);
    int eq = 0;
    for (int v = 0; v + 1 < n; ++v) {
        // F_{v+1} A^M_v - A^N_v F_v = 0, entry (i, j): i < rn.dims[v+1], j < rm.dims[v]
        for (int i = 0; i < rn.dims[v + 1]; ++i) {
            for (int j = 0; j < rm.dims[v]; ++j) {
                for (int k = 0; k < rm.dims[v + 1]; ++k) {
                    uint8_t c = rm.arrows[v].at(k, j);
                    if (c) {
                        int u = offset[v + 1] + i * rm.dims[v + 1] + k;
                        sys.at(eq, u) = F.add(sys.at(eq, u), c);
                    }
                }
                for (int k = 0; k < rn.dims[v]; ++k) {
                    uint8_t c = rn.arrows[v].at(i, k);
                    if (c) {
                        int u = offset[v] + k * rm.dims[v] + j;
                        sys.at(eq, u) = F.sub(sys.at(eq, u), c);
                    }
                }
                ++eq;
            }
        }
    }

    Mat null = nullspace(F, sys);
    HomSpace hs;
    hs.dim = null.cols;
    for (int b = 0; b < null.cols; ++b) {
        RepMap f;
        f.comps.resize(n);
        for (int v = 0; v < n; ++v) {
            Mat m(rn.dims[v], rm.dims[v]);
            for (int i = 0; i < rn.dims[v]; ++i)
                for (int j = 0; j < rm.dims[v]; ++j)
                    m.at(i, j) = null.at(offset[v] + i * rm.dims[v] + j, b);
            f.comps[v] = std::move(m);
        }
        hs.basis.push_back(std::move(f));
    }
    return hs;
}

int hom_dim_solver(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& M,
                   const ModuleObj& N) {
    return hom_space(a, F, M, N).dim;
}

} // namespace modcat
