#ifndef MODCAT_QUOTIENT_HPP
#define MODCAT_QUOTIENT_HPP

#include <string>
#include <vector>

#include "modcat/cotorsion.hpp"

namespace modcat {

/// The additive quotient of a proper 2-term subcategory G by [Sigma W],
/// realized through the category algebra of W modulo injectives: objects of
/// the quotient are G-indecomposables outside the ideal, and every morphism
/// question becomes pointwise linear algebra over the quotient hom tables.
struct QuotientCtx {
    const AlgebraContext* base = nullptr;
    Subcat G, W, ideal;
    std::vector<int> verts;   // members of W outside the ideal (the quotient projectives)
    std::vector<int> objs;    // members of G outside the ideal
    std::vector<std::pair<int, int>> arrows;  // (vi, vj) positions with qhom != 0, vi != vj

    // quotient hom dims between all indecomposables (0 or 1)
    std::vector<uint8_t> qhom_table;

    struct Presentation {
        ModuleObj W1, W0, M;
        Mat incl;  // coefficients of W1 -> W0 over the canonical bases
        Mat epi;   // coefficients of W0 -> M
    };
    std::vector<Presentation> presentations;  // indexed like members(G)
    std::vector<int> gpos;                    // indec index -> position in members(G), or -1

    int qhom(int x, int y) const { return qhom_table[x * base->count() + y]; }
    int vert_pos(int indec) const;
    /// composite of canonical classes x -> y -> z is nonzero in the quotient
    bool qcomp(int x, int y, int z) const {
        return base->hom_dim(x, y) && base->hom_dim(y, z) && qhom(x, z);
    }
    const Presentation& presentation_of(int indec) const;
};

QuotientCtx build_quotient_ctx(const AlgebraContext& ctx, const Subcat& G, const Subcat& W,
                               const Subcat& ideal);

/// A module over the category algebra of the quotient projectives: one space
/// per vertex and one matrix per basis morphism, contravariantly.
struct GammaModule {
    std::vector<int> dims;     // per QuotientCtx::verts
    std::vector<Mat> action;   // per QuotientCtx::arrows; action[e]: dims[vj] -> dims[vi]
};

/// Hom_quotient(-, M) restricted to the quotient projectives, with the slot
/// bookkeeping needed to apply morphisms.
struct FModule {
    GammaModule gm;
    std::vector<std::vector<int>> slots;  // per vertex: part indices of M
    ModuleObj M;
};
FModule f_module(const QuotientCtx& q, const ModuleObj& M);

/// action matrices respect the composition table on generators
bool gamma_module_valid(const QuotientCtx& q, const GammaModule& g);

/// F applied to a morphism class given by canonical-basis coefficients.
std::vector<Mat> f_map(const QuotientCtx& q, const FModule& dom, const FModule& cod,
                       const Mat& class_coeffs);

/// Basis of module maps A -> B over the category algebra.
std::vector<std::vector<Mat>> gamma_hom(const QuotientCtx& q, const GammaModule& A,
                                        const GammaModule& B);

struct GammaSub {
    GammaModule K;
    std::vector<Mat> incl;  // pointwise inclusion into the ambient module
};
GammaSub gamma_kernel(const QuotientCtx& q, const GammaModule& A, const GammaModule& B,
                      const std::vector<Mat>& phi);

struct GammaQuot {
    GammaModule Q;
    std::vector<Mat> proj;
};
GammaQuot gamma_cokernel(const QuotientCtx& q, const GammaModule& A, const GammaModule& B,
                         const std::vector<Mat>& phi);

/// Ext^1 over the category algebra between the images of two quotient
/// objects, via the two-term presentation and a pointwise kernel.
int ext1_gbar(const QuotientCtx& q, int x, int y);

/// The presentation sequences become right exact after applying F.
bool quotient_right_exact(const QuotientCtx& q, std::string* fail = nullptr);

} // namespace modcat

#endif
