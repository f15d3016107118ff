#ifndef MODCAT_CONTEXT_HPP
#define MODCAT_CONTEXT_HPP

#include <cstdint>
#include <vector>

#include "modcat/algebra.hpp"
#include "modcat/hom.hpp"
#include "modcat/rep.hpp"

namespace modcat {

/// Immutable computation context for one algebra and characteristic.
///
/// Holds the ordered indecomposable list (sorted by (top, len)) and the
/// hom/ext tables between indecomposables, validated against the matrix
/// oracle at construction time. All higher-level operations read this.
class AlgebraContext {
public:
    explicit AlgebraContext(const NakayamaAlgebra& alg);

    const NakayamaAlgebra& alg() const { return alg_; }
    const PrimeField& field() const { return F_; }

    int count() const { return k_; }
    const std::vector<Interval>& indecomposables() const { return ind_; }
    const Interval& interval(int i) const { return ind_[i]; }
    int index_of(const Interval& iv) const;  // -1 if not an indecomposable

    int hom_dim(int x, int y) const { return homdim_[x * k_ + y]; }
    int ext1(int x, int y) const { return ext1_[x * k_ + y]; }
    /// dim Ext^i between indecomposables, i >= 1 (via the minimal resolution).
    int ext_dim(int i, int x, int y) const;

    int hom_dim(const ModuleObj& M, const ModuleObj& N) const;
    int ext_dim(int i, const ModuleObj& M, const ModuleObj& N) const;

    bool projective(int i) const { return (proj_bits_ >> i) & 1; }
    bool injective(int i) const { return (inj_bits_ >> i) & 1; }
    uint64_t projective_bits() const { return proj_bits_; }
    uint64_t injective_bits() const { return inj_bits_; }
    uint64_t all_bits() const { return k_ == 64 ? ~0ull : ((1ull << k_) - 1); }

    int cover(int i) const { return cover_idx_[i]; }         // projective cover
    int envelope(int i) const { return envelope_idx_[i]; }   // injective envelope
    int syzygy(int i) const { return syzygy_idx_[i]; }       // -1 when zero
    int cosyzygy(int i) const { return cosyzygy_idx_[i]; }   // -1 when zero

    ModuleObj syzygy(const ModuleObj& M) const;
    ModuleObj cosyzygy(const ModuleObj& M) const;

    int global_dimension() const { return gldim_; }
    int proj_dim(int i) const { return pd_[i]; }

    /// Composition of canonical maps x -> y -> z is the canonical map x -> z
    /// when nonzero; it is nonzero exactly when all three homs are nonzero.
    bool comp_nonzero(int x, int y, int z) const {
        return hom_dim(x, y) && hom_dim(y, z) && hom_dim(x, z);
    }

    ModuleObj module_of_bits(uint64_t bits) const;
    uint64_t bits_of_module(const ModuleObj& m) const;  // every part must be valid

private:
    NakayamaAlgebra alg_;
    PrimeField F_;
    std::vector<Interval> ind_;
    int k_ = 0;
    std::vector<int> idx_table_;  // (top-1)*m + (len-1) -> index or -1
    std::vector<uint8_t> homdim_;
    std::vector<uint8_t> ext1_;
    uint64_t proj_bits_ = 0, inj_bits_ = 0;
    std::vector<int> cover_idx_, envelope_idx_, syzygy_idx_, cosyzygy_idx_;
    std::vector<int> pd_;
    int gldim_ = 0;

    void validate_against_matrix_oracle() const;
};

/// Matrix-oracle Ext^1 between indecomposables: rank computation on the
/// restriction map Hom(P, y) -> Hom(Omega x, y) along the kernel inclusion.
int ext1_dim_matrix(const AlgebraContext& ctx, int x, int y);

/// Injective-coresolution route: coker(Hom(x, I(y)) -> Hom(x, coszygy y)).
int ext1_dim_matrix_inj(const AlgebraContext& ctx, int x, int y);

/// Cover and envelope with explicit maps.
struct CoverData {
    ModuleObj cover;
    RepMap epi;     // rep(cover) -> rep(M)
};
struct EnvelopeData {
    ModuleObj envelope;
    RepMap mono;    // rep(M) -> rep(envelope)
};
CoverData projective_cover(const AlgebraContext& ctx, const ModuleObj& M);
EnvelopeData injective_envelope(const AlgebraContext& ctx, const ModuleObj& M);

} // namespace modcat

#endif
