#include "modcat/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace modcat {

AlgebraContext::AlgebraContext(const NakayamaAlgebra& alg) : alg_(alg), F_(alg.p) {
    alg_.validate();
    for (int t = 1; t <= alg_.n; ++t) {
        int maxlen = std::min(alg_.m, alg_.n - t + 1);
        for (int l = 1; l <= maxlen; ++l) ind_.push_back(Interval{t, l});
    }
    std::sort(ind_.begin(), ind_.end());
    k_ = static_cast<int>(ind_.size());
    if (k_ > 64)
        throw std::invalid_argument("algebra has more than 64 indecomposables; out of supported range");

    idx_table_.assign(static_cast<size_t>(alg_.n) * alg_.m, -1);
    for (int i = 0; i < k_; ++i)
        idx_table_[(ind_[i].top - 1) * alg_.m + (ind_[i].len - 1)] = i;

    homdim_.assign(static_cast<size_t>(k_) * k_, 0);
    for (int x = 0; x < k_; ++x)
        for (int y = 0; y < k_; ++y)
            homdim_[x * k_ + y] = static_cast<uint8_t>(hom_dim_formula(ind_[x], ind_[y]));

    cover_idx_.resize(k_);
    envelope_idx_.resize(k_);
    syzygy_idx_.resize(k_);
    cosyzygy_idx_.resize(k_);
    for (int i = 0; i < k_; ++i) {
        const Interval& iv = ind_[i];
        if (is_projective(alg_, iv)) proj_bits_ |= 1ull << i;
        if (is_injective(alg_, iv)) inj_bits_ |= 1ull << i;
        cover_idx_[i] = index_of(cover_interval(alg_, iv));
        envelope_idx_[i] = index_of(envelope_interval(alg_, iv));
        Interval s = syzygy_interval(alg_, iv);
        syzygy_idx_[i] = s.len > 0 ? index_of(s) : -1;
        Interval c = cosyzygy_interval(alg_, iv);
        cosyzygy_idx_[i] = c.len > 0 ? index_of(c) : -1;
    }

    // Ext^1(x, y) = [x non-projective] * hom(Omega x, y) * (1 - hom(P(x), y)):
    // the restriction along Omega x -> P(x) hits the one-dimensional
    // Hom(Omega x, y) exactly when the canonical map P(x) -> y is nonzero.
    ext1_.assign(static_cast<size_t>(k_) * k_, 0);
    for (int x = 0; x < k_; ++x) {
        if (projective(x)) continue;
        int s = syzygy_idx_[x];
        for (int y = 0; y < k_; ++y)
            ext1_[x * k_ + y] =
                static_cast<uint8_t>(hom_dim(s, y) && !hom_dim(cover_idx_[x], y));
    }

    pd_.assign(k_, 0);
    gldim_ = 0;
    for (int i = 0; i < k_; ++i) {
        int d = 0, j = i;
        while (!projective(j)) {
            j = syzygy_idx_[j];
            ++d;
        }
        pd_[i] = d;
        gldim_ = std::max(gldim_, d);
    }

    validate_against_matrix_oracle();
}

int AlgebraContext::index_of(const Interval& iv) const {
    if (!iv.valid_in(alg_)) return -1;
    return idx_table_[(iv.top - 1) * alg_.m + (iv.len - 1)];
}

int AlgebraContext::ext_dim(int i, int x, int y) const {
    assert(i >= 1);
    int j = x;
    for (int step = 1; step < i; ++step) {
        if (j < 0 || projective(j)) return 0;
        j = syzygy_idx_[j];
    }
    if (j < 0) return 0;
    return ext1(j, y);
}

int AlgebraContext::hom_dim(const ModuleObj& M, const ModuleObj& N) const {
    int d = 0;
    for (const auto& x : M.parts)
        for (const auto& y : N.parts) d += hom_dim(index_of(x), index_of(y));
    return d;
}

int AlgebraContext::ext_dim(int i, const ModuleObj& M, const ModuleObj& N) const {
    int d = 0;
    for (const auto& x : M.parts)
        for (const auto& y : N.parts) d += ext_dim(i, index_of(x), index_of(y));
    return d;
}

ModuleObj AlgebraContext::syzygy(const ModuleObj& M) const {
    ModuleObj r;
    for (const auto& iv : M.parts) {
        Interval s = syzygy_interval(alg_, iv);
        if (s.len > 0) r.parts.push_back(s);
    }
    r.normalize();
    return r;
}

ModuleObj AlgebraContext::cosyzygy(const ModuleObj& M) const {
    ModuleObj r;
    for (const auto& iv : M.parts) {
        Interval c = cosyzygy_interval(alg_, iv);
        if (c.len > 0) r.parts.push_back(c);
    }
    r.normalize();
    return r;
}

ModuleObj AlgebraContext::module_of_bits(uint64_t bits) const {
    ModuleObj m;
    for (int i = 0; i < k_; ++i)
        if ((bits >> i) & 1) m.parts.push_back(ind_[i]);
    return m;
}

uint64_t AlgebraContext::bits_of_module(const ModuleObj& m) const {
    uint64_t b = 0;
    for (const auto& iv : m.parts) {
        int i = index_of(iv);
        if (i < 0) throw std::invalid_argument("interval is not a module of this algebra");
        b |= 1ull << i;
    }
    return b;
}

void AlgebraContext::validate_against_matrix_oracle() const {
    for (int x = 0; x < k_; ++x) {
        // indecomposability: local endomorphism ring (here: End of dimension 1)
        ModuleObj mx{ind_[x]};
        if (hom_dim_solver(alg_, F_, mx, mx) != 1)
            throw std::logic_error("indecomposability oracle failed");
        for (int y = 0; y < k_; ++y) {
            ModuleObj my{ind_[y]};
            if (hom_dim_solver(alg_, F_, mx, my) != hom_dim(x, y))
                throw std::logic_error("hom table disagrees with the intertwiner solver");
            if (ext1_dim_matrix(*this, x, y) != ext1(x, y))
                throw std::logic_error("ext table disagrees with the resolution oracle");
        }
    }
}

int ext1_dim_matrix(const AlgebraContext& ctx, int x, int y) {
    const NakayamaAlgebra& a = ctx.alg();
    const PrimeField& F = ctx.field();
    if (ctx.projective(x)) return 0;
    ModuleObj X{ctx.interval(x)}, Y{ctx.interval(y)};
    CoverData cov = projective_cover(ctx, X);
    SubObject ker = kernel_of(a, F, cov.cover, X, cov.epi);
    HomSpace hk = hom_space(a, F, ker.module, Y);
    HomSpace hp = hom_space(a, F, cov.cover, Y);
    if (hk.dim == 0) return 0;
    // rank of the restriction Hom(P, Y) -> Hom(Omega X, Y), f -> f o incl
    Mat restr(hk.dim == 0 ? 0 : hk.dim, hp.dim);
    for (int j = 0; j < hp.dim; ++j) {
        RepMap comp = repmap_compose(F, hp.basis[j], ker.incl);
        // express comp in the basis of Hom(Omega X, Y): stack coordinates
        // (bases from nullspace are echelon; solve a small linear system)
        int nvert = a.n;
        std::vector<int> off(nvert + 1, 0);
        for (int v = 0; v < nvert; ++v)
            off[v + 1] = off[v] + comp.comps[v].rows * comp.comps[v].cols;
        Mat sys(off[nvert], hk.dim);
        std::vector<uint8_t> rhs(off[nvert], 0);
        for (int v = 0; v < nvert; ++v)
            for (int r = 0; r < comp.comps[v].rows; ++r)
                for (int c = 0; c < comp.comps[v].cols; ++c) {
                    int row = off[v] + r * comp.comps[v].cols + c;
                    rhs[row] = comp.comps[v].at(r, c);
                    for (int b = 0; b < hk.dim; ++b)
                        sys.at(row, b) = hk.basis[b].comps[v].at(r, c);
                }
        std::vector<uint8_t> sol = solve(F, sys, rhs);
        if (sol.empty()) throw std::logic_error("restriction does not land in Hom(Omega,Y)");
        for (int b = 0; b < hk.dim; ++b) restr.at(b, j) = sol[b];
    }
    return hk.dim - rank(F, restr);
}

int ext1_dim_matrix_inj(const AlgebraContext& ctx, int x, int y) {
    const NakayamaAlgebra& a = ctx.alg();
    const PrimeField& F = ctx.field();
    if (ctx.injective(y)) return 0;
    ModuleObj X{ctx.interval(x)}, Y{ctx.interval(y)};
    EnvelopeData env = injective_envelope(ctx, Y);
    QuotObject cok = cokernel_of(a, F, Y, env.envelope, env.mono);
    HomSpace hc = hom_space(a, F, X, cok.module);
    HomSpace hi = hom_space(a, F, X, env.envelope);
    if (hc.dim == 0) return 0;
    Mat corr(hc.dim, hi.dim);
    for (int j = 0; j < hi.dim; ++j) {
        RepMap comp = repmap_compose(F, cok.proj, hi.basis[j]);
        int nvert = a.n;
        std::vector<int> off(nvert + 1, 0);
        for (int v = 0; v < nvert; ++v)
            off[v + 1] = off[v] + comp.comps[v].rows * comp.comps[v].cols;
        Mat sys(off[nvert], hc.dim);
        std::vector<uint8_t> rhs(off[nvert], 0);
        for (int v = 0; v < nvert; ++v)
            for (int r = 0; r < comp.comps[v].rows; ++r)
                for (int c = 0; c < comp.comps[v].cols; ++c) {
                    int row = off[v] + r * comp.comps[v].cols + c;
                    rhs[row] = comp.comps[v].at(r, c);
                    for (int b = 0; b < hc.dim; ++b)
                        sys.at(row, b) = hc.basis[b].comps[v].at(r, c);
                }
        std::vector<uint8_t> sol = solve(F, sys, rhs);
        if (sol.empty()) throw std::logic_error("corestriction failure");
        for (int b = 0; b < hc.dim; ++b) corr.at(b, j) = sol[b];
    }
    return hc.dim - rank(F, corr);
}

CoverData projective_cover(const AlgebraContext& ctx, const ModuleObj& M) {
    const NakayamaAlgebra& a = ctx.alg();
    std::vector<std::pair<Interval, int>> cov;
    for (int i = 0; i < M.summand_count(); ++i)
        cov.emplace_back(cover_interval(a, M.parts[i]), i);
    std::sort(cov.begin(), cov.end());
    ModuleObj cover;
    for (auto& [iv, orig] : cov) cover.parts.push_back(iv);
    Mat coeffs(M.summand_count(), M.summand_count());
    for (int pos = 0; pos < static_cast<int>(cov.size()); ++pos)
        coeffs.at(cov[pos].second, pos) = 1;
    RepMap epi = assemble_map(a, cover, M, coeffs);
    return CoverData{std::move(cover), std::move(epi)};
}

EnvelopeData injective_envelope(const AlgebraContext& ctx, const ModuleObj& M) {
    const NakayamaAlgebra& a = ctx.alg();
    std::vector<std::pair<Interval, int>> env;
    for (int i = 0; i < M.summand_count(); ++i)
        env.emplace_back(envelope_interval(a, M.parts[i]), i);
    std::sort(env.begin(), env.end());
    ModuleObj envelope;
    for (auto& [iv, orig] : env) envelope.parts.push_back(iv);
    Mat coeffs(M.summand_count(), M.summand_count());
    for (int pos = 0; pos < static_cast<int>(env.size()); ++pos)
        coeffs.at(pos, env[pos].second) = 1;
    RepMap mono = assemble_map(a, M, envelope, coeffs);
    return EnvelopeData{std::move(envelope), std::move(mono)};
}

} // namespace modcat
