#ifndef MODCAT_APPROX_HPP
#define MODCAT_APPROX_HPP

#include "modcat/subcat.hpp"

namespace modcat {

/// A left or right approximation of `object` by the additive closure of a
/// subcategory. For side == Right the map goes target -> object, for Left
/// object -> target.
struct ApproxMap {
    ModuleObj object;
    ModuleObj target;
    RepMap map;
    Mat coeffs;  // canonical-basis coefficients of the map
    Side side = Side::Right;
    bool minimal = false;
};

/// Minimal approximation, built on the radical quotient of the hom functor:
/// one copy of s per generator of Hom(s, X) (resp. Hom(X, s)) modulo maps
/// factoring through other members of S.
ApproxMap min_approx(const AlgebraContext& ctx, const ModuleObj& X, const Subcat& S, Side side);

/// Definitional check: every map from (to) a member of S factors through it.
bool is_approximation(const AlgebraContext& ctx, const Subcat& S, const ApproxMap& ap);

/// Necessary minimality check by summand stripping: no single copy of the
/// target can be dropped while keeping the approximation property.
bool strip_verify_minimal(const AlgebraContext& ctx, const Subcat& S, const ApproxMap& ap);

} // namespace modcat

#endif
