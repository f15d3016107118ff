#ifndef MODCAT_CONE_HPP
#define MODCAT_CONE_HPP

#include <optional>

#include "modcat/approx.hpp"
#include "modcat/ses.hpp"

namespace modcat {

enum class ConeDir { Cone, CoCone };

/// Object-level membership in Cone(S1, S2) = {X : 0 -> S1obj -> S2obj -> X -> 0}
/// (or the CoCone dual). Uses the minimal-approximation fast path when
/// Ext^1(S2, S1) = 0, falling back to bounded witness search otherwise.
struct ConeAnswer {
    bool member = false;
    Certainty certainty = Certainty::Exhaustive;
};
ConeAnswer cone_contains(const AlgebraContext& ctx, const Subcat& S1, const Subcat& S2,
                         const ModuleObj& X, ConeDir dir, const SearchPolicy& pol = {});

/// Membership via witness search only (the oracle the fast path is checked against).
ConeAnswer cone_contains_by_search(const AlgebraContext& ctx, const Subcat& S1, const Subcat& S2,
                                   const ModuleObj& X, ConeDir dir, const SearchPolicy& pol = {});

/// Summand-closed cone subcategory over the indecomposables.
Subcat cone_cocone(const AlgebraContext& ctx, const Subcat& S1, const Subcat& S2, ConeDir dir,
                   const SearchPolicy& pol = {});

/// Sigma^i S = add(cosyzygy(S) + injectives), iterated; Omega dual with projectives.
Subcat sigma_subcat(const AlgebraContext& ctx, const Subcat& S, int i);
Subcat omega_subcat(const AlgebraContext& ctx, const Subcat& S, int i);

/// star(S1, S2): summand closure of {X : 0 -> S1obj -> X -> S2obj -> 0},
/// witness search bounded by dimension-vector additivity (indecomposable X).
Subcat star_add(const AlgebraContext& ctx, const Subcat& S1, const Subcat& S2,
                const SearchPolicy& pol = {});
ConeAnswer star_contains(const AlgebraContext& ctx, const Subcat& S1, const Subcat& S2,
                         const ModuleObj& X, const SearchPolicy& pol = {});

/// Closure of add(S) under extensions (iterated middle terms, exhaustive).
Subcat extension_closure(const AlgebraContext& ctx, const Subcat& S);

/// Is add(S) closed under extensions? Counterexample returned on failure.
struct ExtClosedResult {
    bool closed = true;
    Certainty certainty = Certainty::Exhaustive;
    std::optional<SesWitness> counterexample;
};
ExtClosedResult is_extension_closed(const AlgebraContext& ctx, const Subcat& S);

} // namespace modcat

#endif
