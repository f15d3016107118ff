#ifndef MODCAT_COTORSION_HPP
#define MODCAT_COTORSION_HPP

#include <string>
#include <utility>
#include <vector>

#include "modcat/cone.hpp"

namespace modcat {

/// A validated cotorsion pair (U, V) in an extension-closed ambient, with
/// per-object approximation-triangle certificates
/// (V_B -> U_B -> B and B -> V^B -> U^B, all terms inside the ambient).
struct CotorsionPair {
    Subcat ambient;
    Subcat U, V;
    std::vector<std::pair<SesWitness, SesWitness>> certificates;  // per members(ambient)
};

struct PairCheck {
    bool ok = false;
    CotorsionPair pair;
    std::string failure;
    Certainty certainty = Certainty::Exhaustive;
};

/// Validate (U, V) as a cotorsion pair in the ambient: Ext-orthogonality,
/// the Galois fixed-point identities, and completeness via minimal
/// approximations (epi with kernel in V; mono with cokernel in U).
PairCheck check_cotorsion_pair(const AlgebraContext& ctx, const Subcat& ambient, const Subcat& U,
                               const Subcat& V, bool with_certificates = true);

/// Independent bounded ses-search cross-check of one completeness verdict.
bool cross_check_completeness(const AlgebraContext& ctx, const Subcat& ambient, const Subcat& U,
                              const Subcat& V, const SearchPolicy& pol = {});

std::vector<CotorsionPair> enumerate_cotorsion_pairs(const AlgebraContext& ctx,
                                                     const Subcat& ambient);

/// Four equivalent hereditariness conditions, evaluated independently and
/// required to agree: syzygies of U stay in U, cosyzygies of V stay in V,
/// Ext^2(U, V) = 0, and Ext^i(U, V) = 0 up to the global dimension.
bool hereditary_check(const AlgebraContext& ctx, const CotorsionPair& pair);

struct WTower {
    Subcat W;
    std::vector<Subcat> levels;  // levels[0] = W, levels[i+1] = Cone(levels[i], W)
};
WTower w_tower(const AlgebraContext& ctx, const CotorsionPair& pair, int k);
Subcat tower_level_from(const AlgebraContext& ctx, const Subcat& W, int steps);

struct ImpCheck {
    bool equal = false;
    Subcat lhs, rhs;  // V cap perp(Sigma^i V) vs the tower level
};
ImpCheck lemma_imp_check(const AlgebraContext& ctx, const CotorsionPair& pair, const WTower& tower,
                         int i);

struct CheckItem {
    std::string name;
    bool pass = false;
    bool exhaustive = true;
    std::string detail;
};

struct TheoremReport {
    std::string id;
    std::vector<CheckItem> preconditions;
    bool applicable = false;
    std::string rejected_hypothesis;
    std::vector<CheckItem> checks;
    std::vector<std::pair<int, int>> forward, backward;
    int count_a = 0, count_b = 0;
    bool verdict = false;
    std::string counterexample;
    std::vector<std::string> notes;

    bool all_checks_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct MapResult {
    bool ok = false;
    std::string error;
    Subcat first, second;
};

/// (U', V') -> (V cap U', V' cap perp(Sigma^i V)), a cotorsion pair in W_i.
MapResult main1_phi(const AlgebraContext& ctx, const CotorsionPair& base, int i,
                    const WTower& tower, const Subcat& U1, const Subcat& V1);
/// (X, Y) -> (add(U * X), add(Y * Sigma^i V)), an intermediate cotorsion pair.
MapResult main1_psi(const AlgebraContext& ctx, const CotorsionPair& base, int i,
                    const WTower& tower, const Subcat& X, const Subcat& Y);

/// Bijection between intermediate cotorsion pairs and cotorsion pairs in the
/// i-th tower level, with the shifted-perp pairs checked as preconditions.
TheoremReport verify_main1(const AlgebraContext& ctx, const CotorsionPair& base, int i);

/// (W_i, Sigma^i W_{j-i-1}) as a hereditary cotorsion pair in W_j, 0 < i < j,
/// with the enough-projectives/injectives and Ext-vanishing sub-checks.
TheoremReport verify_main5(const AlgebraContext& ctx, const CotorsionPair& base, int i, int j);

struct WakamatsuResult {
    bool precondition_ok = false;
    std::string precondition_detail;
    bool holds = false;
};
/// Minimal left D-approximation X -> D mono implies Ext^1(coker, D) = 0.
WakamatsuResult wakamatsu_check(const AlgebraContext& ctx, const Subcat& D, const ModuleObj& X);

struct MTermReport {
    bool ok = false;
    std::string error;
    Subcat G;
    std::vector<CheckItem> checks;
};
/// Iterated-cone subcategory of a rigid W with its structure report.
/// usage_convention: m-term = m-1 cone steps (the tower-level reading);
/// otherwise m cone steps.
MTermReport proper_mterm(const AlgebraContext& ctx, const Subcat& W, int m,
                         bool usage_convention = true);

Subcat relative_projectives(const AlgebraContext& ctx, const Subcat& ambient);
Subcat relative_injectives(const AlgebraContext& ctx, const Subcat& ambient);

/// Operative form of the injectives-containment hypothesis on a coheart W
/// with ambient cone subcategory G: every injective lying in G belongs to W,
/// and W is strictly larger than those injectives.
bool coheart_hypothesis(const AlgebraContext& ctx, const Subcat& W, const Subcat& G,
                        std::string* detail = nullptr);

} // namespace modcat

#endif
