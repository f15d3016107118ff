#ifndef MODCAT_TAUTILT_HPP
#define MODCAT_TAUTILT_HPP

#include "modcat/quotient.hpp"

namespace modcat {

/// Fac closure inside the quotient: classes receiving a quotient-epimorphism
/// from add of the given classes; epis are detected by the projective
/// generators (surjectivity of Hom(w, -) at every quotient projective).
Subcat fac_closure(const QuotientCtx& q, const Subcat& Mset);

struct TauRigidResult {
    bool rigid = false;
    bool presentations_decider = false;  // surjectivity of Hom(f, M')
    bool ext_decider = false;            // Ext^1(M, Fac M) = 0 over the category algebra
};
/// Both deciders are always evaluated; disagreement is a hard failure.
TauRigidResult is_tau_rigid(const QuotientCtx& q, const Subcat& Mset);

struct SttCandidate {
    Subcat members;
    bool tau_rigid = false;
    bool support = false;
};
SttCandidate is_support_tau_tilting(const QuotientCtx& q, const Subcat& Mset);

/// Members of Nset whose quotient Ext^1 into all of Nset vanishes.
Subcat p_of(const QuotientCtx& q, const Subcat& Nset);

/// All support tau-tilting subcategories of the quotient. The pruned search
/// skips supersets of non-tau-rigid sets; the unpruned mode exists for
/// oracle comparison.
std::vector<SttCandidate> enumerate_stt(const QuotientCtx& q, bool prune = true);

/// Fac Mset closed under extensions inside the quotient's exact structure
/// (ambient short exact sequences whose image is exact in the quotient).
bool fac_extension_closed(const QuotientCtx& q, const Subcat& Fbits, std::string* fail = nullptr);

/// The correspondence between cotorsion pairs in G and support tau-tilting
/// subcategories of the quotient, with all per-pair sub-checks.
TheoremReport verify_main2(const AlgebraContext& ctx, const Subcat& W);

} // namespace modcat

#endif
