#ifndef MODCAT_SES_HPP
#define MODCAT_SES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcat/subcat.hpp"

namespace modcat {

/// Witness of a short exact sequence 0 -> A -> B -> C -> 0: the inclusion map.
struct SesWitness {
    ModuleObj A, B, C;
    RepMap inj;  // rep(A) -> rep(B)
};

/// inj is mono and its cokernel decomposes as C.
bool validate_witness(const AlgebraContext& ctx, const SesWitness& w);

enum class Certainty { Exhaustive, Probabilistic };

struct SearchPolicy {
    long long element_budget = 1 << 16;  // enumerate Hom elements when q^dim fits
    int samples = 10000;                 // probabilistic fallback
    uint64_t seed = 0x9e3779b97f4a7c15ull;
};

struct SesSearchResult {
    bool found = false;
    bool definite = true;      // a negative answer is definite (dims or exhaustive)
    Certainty certainty = Certainty::Exhaustive;
    std::optional<SesWitness> witness;
};

/// Does a short exact sequence 0 -> A -> B -> C -> 0 exist? Exhaustive over
/// Hom(A, B) when the element count fits the budget, else randomized.
SesSearchResult ses_search(const AlgebraContext& ctx, const ModuleObj& A, const ModuleObj& B,
                           const ModuleObj& C, const SearchPolicy& pol = {});

/// All middle terms of extensions of C (an indecomposable) by A, obtained by
/// pushing the projective presentation of C out along every class in
/// Ext^1(C, A). Includes the split middle. Exhaustive.
struct MiddleTerm {
    ModuleObj B;
    SesWitness witness;
};
std::vector<MiddleTerm> middle_terms(const AlgebraContext& ctx, int c_index, const ModuleObj& A);

/// Middle terms for class tuples whose component at every summand of A is
/// nonzero (the reduced witnesses for extension-closure checking).
std::vector<MiddleTerm> middle_terms_nondegenerate(const AlgebraContext& ctx, int c_index,
                                                   const ModuleObj& A);

} // namespace modcat

#endif
