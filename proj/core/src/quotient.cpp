#include "modcat/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace modcat {

int QuotientCtx::vert_pos(int indec) const {
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == indec) return static_cast<int>(i);
    return -1;
}

const QuotientCtx::Presentation& QuotientCtx::presentation_of(int indec) const {
    int p = gpos[indec];
    if (p < 0) throw std::invalid_argument("object is not a member of G");
    return presentations[p];
}

QuotientCtx build_quotient_ctx(const AlgebraContext& ctx, const Subcat& G, const Subcat& W,
                               const Subcat& ideal) {
    if (!W.subset_of(G)) throw std::invalid_argument("W must lie inside G");
    QuotientCtx q;
    q.base = &ctx;
    q.G = G;
    q.W = W;
    q.ideal = ideal;

    int k = ctx.count();
    q.qhom_table.assign(static_cast<size_t>(k) * k, 0);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            if (!ctx.hom_dim(x, y)) continue;
            bool factors = false;
            for (int t : members(ideal))
                if (ctx.hom_dim(x, t) && ctx.hom_dim(t, y)) { factors = true; break; }
            q.qhom_table[x * k + y] = factors ? 0 : 1;
        }

    for (int w : members(W))
        if (!ideal.contains(w)) q.verts.push_back(w);
    for (int g : members(G))
        if (!ideal.contains(g)) q.objs.push_back(g);
    for (size_t i = 0; i < q.verts.size(); ++i)
        for (size_t j = 0; j < q.verts.size(); ++j)
            if (i != j && q.qhom(q.verts[i], q.verts[j]))
                q.arrows.emplace_back(static_cast<int>(i), static_cast<int>(j));

    // identities of ideal members vanish in the quotient
    for (int t : members(ideal))
        if (q.qhom(t, t)) throw std::logic_error("ideal member survives in the quotient");

    // presentations: minimal right W-approximation with kernel in add W
    q.gpos.assign(k, -1);
    const NakayamaAlgebra& a = ctx.alg();
    const PrimeField& F = ctx.field();
    int pos = 0;
    for (int g : members(G)) {
        q.gpos[g] = pos++;
        ModuleObj M{ctx.interval(g)};
        ApproxMap ap = min_approx(ctx, M, W, Side::Right);
        Rep rm = build_rep(a, M);
        if (!repmap_is_epi(F, ap.map, rm))
            throw std::invalid_argument("W does not generate G: no deflation onto " +
                                        interval_label(ctx.interval(g)));
        SubObject ker = kernel_of(a, F, ap.target, M, ap.map);
        if (!module_in(ctx, W, ker.module))
            throw std::invalid_argument("presentation kernel escapes add W at " +
                                        interval_label(ctx.interval(g)));
        QuotientCtx::Presentation pr;
        pr.W1 = ker.module;
        pr.W0 = ap.target;
        pr.M = M;
        pr.incl = extract_coeffs(a, F, ker.module, ap.target, ker.incl);
        pr.epi = ap.coeffs;
        q.presentations.push_back(std::move(pr));
    }
    return q;
}

FModule f_module(const QuotientCtx& q, const ModuleObj& M) {
    const AlgebraContext& ctx = *q.base;
    FModule f;
    f.M = M;
    int nv = static_cast<int>(q.verts.size());
    f.slots.resize(nv);
    f.gm.dims.resize(nv);
    for (int v = 0; v < nv; ++v) {
        for (int p = 0; p < M.summand_count(); ++p)
            if (q.qhom(q.verts[v], ctx.index_of(M.parts[p]))) f.slots[v].push_back(p);
        f.gm.dims[v] = static_cast<int>(f.slots[v].size());
    }
    f.gm.action.resize(q.arrows.size());
    for (size_t e = 0; e < q.arrows.size(); ++e) {
        auto [vi, vj] = q.arrows[e];
        Mat m(f.gm.dims[vi], f.gm.dims[vj]);
        for (int col = 0; col < f.gm.dims[vj]; ++col) {
            int part = f.slots[vj][col];
            int pi = ctx.index_of(M.parts[part]);
            if (!q.qcomp(q.verts[vi], q.verts[vj], pi)) continue;
            // composite lands on the same part's slot at vi
            for (int row = 0; row < f.gm.dims[vi]; ++row)
                if (f.slots[vi][row] == part) m.at(row, col) = 1;
        }
        f.gm.action[e] = std::move(m);
    }
    return f;
}

bool gamma_module_valid(const QuotientCtx& q, const GammaModule& g) {
    const PrimeField& F = q.base->field();
    // composable arrow pairs must satisfy act(i->j) o act(j->l) = qcomp * act(i->l)
    for (size_t e1 = 0; e1 < q.arrows.size(); ++e1)
        for (size_t e2 = 0; e2 < q.arrows.size(); ++e2) {
            auto [i1, j1] = q.arrows[e1];
            auto [i2, j2] = q.arrows[e2];
            if (j1 != i2) continue;
            Mat lhs = mat_mul(F, g.action[e1], g.action[e2]);
            // the composite class i1 -> j2
            bool nonzero = q.qcomp(q.verts[i1], q.verts[j1], q.verts[j2]);
            Mat rhs(g.dims[i1], g.dims[j2]);
            if (nonzero) {
                int e3 = -1;
                for (size_t e = 0; e < q.arrows.size(); ++e)
                    if (q.arrows[e].first == i1 && q.arrows[e].second == j2) e3 = static_cast<int>(e);
                if (e3 >= 0) rhs = g.action[e3];
            }
            if (!(lhs == rhs)) return false;
        }
    return true;
}

std::vector<Mat> f_map(const QuotientCtx& q, const FModule& dom, const FModule& cod,
                       const Mat& class_coeffs) {
    const AlgebraContext& ctx = *q.base;
    int nv = static_cast<int>(q.verts.size());
    std::vector<Mat> out(nv);
    for (int v = 0; v < nv; ++v) {
        Mat m(cod.gm.dims[v], dom.gm.dims[v]);
        for (int col = 0; col < dom.gm.dims[v]; ++col) {
            int ps = dom.slots[v][col];
            int s = ctx.index_of(dom.M.parts[ps]);
            for (int row = 0; row < cod.gm.dims[v]; ++row) {
                int pt = cod.slots[v][row];
                int t = ctx.index_of(cod.M.parts[pt]);
                if (!q.qhom(s, t)) continue;
                if (!q.qcomp(q.verts[v], s, t)) continue;
                m.at(row, col) = class_coeffs.at(pt, ps);
            }
        }
        out[v] = std::move(m);
    }
    return out;
}

std::vector<std::vector<Mat>> gamma_hom(const QuotientCtx& q, const GammaModule& A,
                                        const GammaModule& B) {
    const PrimeField& F = q.base->field();
    int nv = static_cast<int>(q.verts.size());
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + B.dims[v] * A.dims[v];
    int nunk = off[nv];
    int neq = 0;
    for (auto [vi, vj] : q.arrows) neq += B.dims[vi] * A.dims[vj];
    Mat sys(neq, nunk);
    int eq = 0;
    for (size_t e = 0; e < q.arrows.size(); ++e) {
        auto [vi, vj] = q.arrows[e];
        // T_vi * A.act[e] = B.act[e] * T_vj, entries (r, c): r < B.dims[vi], c < A.dims[vj]
        for (int r = 0; r < B.dims[vi]; ++r)
            for (int c = 0; c < A.dims[vj]; ++c) {
                for (int t = 0; t < A.dims[vi]; ++t) {
                    uint8_t coef = A.action[e].at(t, c);
                    if (coef) {
                        int u = off[vi] + r * A.dims[vi] + t;
                        sys.at(eq, u) = F.add(sys.at(eq, u), coef);
                    }
                }
                for (int t = 0; t < B.dims[vj]; ++t) {
                    uint8_t coef = B.action[e].at(r, t);
                    if (coef) {
                        int u = off[vj] + t * A.dims[vj] + c;
                        sys.at(eq, u) = F.sub(sys.at(eq, u), coef);
                    }
                }
                ++eq;
            }
    }
    Mat null = nullspace(F, sys);
    std::vector<std::vector<Mat>> basis;
    for (int b = 0; b < null.cols; ++b) {
        std::vector<Mat> t(nv);
        for (int v = 0; v < nv; ++v) {
            Mat m(B.dims[v], A.dims[v]);
            for (int r = 0; r < B.dims[v]; ++r)
                for (int c = 0; c < A.dims[v]; ++c)
                    m.at(r, c) = null.at(off[v] + r * A.dims[v] + c, b);
            t[v] = std::move(m);
        }
        basis.push_back(std::move(t));
    }
    return basis;
}

GammaSub gamma_kernel(const QuotientCtx& q, const GammaModule& A, const GammaModule& B,
                      const std::vector<Mat>& phi) {
    (void)B;
    const PrimeField& F = q.base->field();
    int nv = static_cast<int>(q.verts.size());
    GammaSub out;
    out.incl.resize(nv);
    out.K.dims.resize(nv);
    for (int v = 0; v < nv; ++v) {
        out.incl[v] = nullspace(F, phi[v]);
        out.K.dims[v] = out.incl[v].cols;
    }
    out.K.action.resize(q.arrows.size());
    for (size_t e = 0; e < q.arrows.size(); ++e) {
        auto [vi, vj] = q.arrows[e];
        Mat img = mat_mul(F, A.action[e], out.incl[vj]);
        Mat act(out.K.dims[vi], out.K.dims[vj]);
        for (int c = 0; c < img.cols; ++c) {
            std::vector<uint8_t> b(img.rows);
            for (int r = 0; r < img.rows; ++r) b[r] = img.at(r, c);
            std::vector<uint8_t> x = solve(F, out.incl[vi], b);
            if (x.empty() && img.rows > 0) {
                bool zero = std::all_of(b.begin(), b.end(), [](uint8_t t) { return t == 0; });
                if (!zero) throw std::logic_error("kernel not preserved by the action");
            }
            for (int r = 0; r < act.rows && !x.empty(); ++r) act.at(r, c) = x[r];
        }
        out.K.action[e] = std::move(act);
    }
    return out;
}

GammaQuot gamma_cokernel(const QuotientCtx& q, const GammaModule& A, const GammaModule& B,
                         const std::vector<Mat>& phi) {
    (void)A;
    const PrimeField& F = q.base->field();
    int nv = static_cast<int>(q.verts.size());
    GammaQuot out;
    out.proj.resize(nv);
    out.Q.dims.resize(nv);
    std::vector<Mat> section(nv);
    for (int v = 0; v < nv; ++v) {
        int d = B.dims[v];
        Mat img = phi[v];
        std::vector<int> comp_idx;
        Mat work = img;
        for (int e = 0; e < d; ++e) {
            Mat unit(d, 1);
            unit.at(e, 0) = 1;
            Mat test = work.cols ? mat_hstack(work, unit) : unit;
            if (rank(F, test) > rank(F, work)) {
                comp_idx.push_back(e);
                work = test;
            }
        }
        int qd = static_cast<int>(comp_idx.size());
        out.Q.dims[v] = qd;
        section[v] = Mat(d, qd);
        for (int c = 0; c < qd; ++c) section[v].at(comp_idx[c], c) = 1;
        Mat m = img.cols ? mat_hstack(img, section[v]) : section[v];
        out.proj[v] = Mat(qd, d);
        for (int j = 0; j < d; ++j) {
            std::vector<uint8_t> b(d, 0);
            b[j] = 1;
            std::vector<uint8_t> x = solve(F, m, b);
            for (int c = 0; c < qd && !x.empty(); ++c) out.proj[v].at(c, j) = x[img.cols + c];
        }
    }
    out.Q.action.resize(q.arrows.size());
    for (size_t e = 0; e < q.arrows.size(); ++e) {
        auto [vi, vj] = q.arrows[e];
        out.Q.action[e] = mat_mul(F, out.proj[vi], mat_mul(F, B.action[e], section[vj]));
    }
    return out;
}

int ext1_gbar(const QuotientCtx& q, int x, int y) {
    const AlgebraContext& ctx = *q.base;
    const PrimeField& F = ctx.field();
    if (q.ideal.contains(x) || q.ideal.contains(y)) return 0;
    const QuotientCtx::Presentation& pr = q.presentation_of(x);
    FModule fw0 = f_module(q, pr.W0);
    FModule fm = f_module(q, pr.M);
    FModule fy = f_module(q, ModuleObj{ctx.interval(y)});
    std::vector<Mat> fepi = f_map(q, fw0, fm, pr.epi);
    GammaSub K = gamma_kernel(q, fw0.gm, fm.gm, fepi);

    auto homKY = gamma_hom(q, K.K, fy.gm);
    if (homKY.empty()) return 0;
    auto homW0Y = gamma_hom(q, fw0.gm, fy.gm);

    // restriction Hom(F W0, F y) -> Hom(K, F y) in the hom bases
    int nv = static_cast<int>(q.verts.size());
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + fy.gm.dims[v] * K.K.dims[v];
    Mat restr(static_cast<int>(homKY.size()), static_cast<int>(homW0Y.size()));
    for (size_t jb = 0; jb < homW0Y.size(); ++jb) {
        // composite with the inclusion
        Mat sys(off[nv], static_cast<int>(homKY.size()));
        std::vector<uint8_t> rhs(off[nv], 0);
        for (int v = 0; v < nv; ++v) {
            Mat comp = mat_mul(F, homW0Y[jb][v], K.incl[v]);
            for (int r = 0; r < comp.rows; ++r)
                for (int c = 0; c < comp.cols; ++c) {
                    int row = off[v] + r * K.K.dims[v] + c;
                    rhs[row] = comp.at(r, c);
                    for (size_t b = 0; b < homKY.size(); ++b)
                        sys.at(row, static_cast<int>(b)) = homKY[b][v].at(r, c);
                }
        }
        std::vector<uint8_t> sol = solve(F, sys, rhs);
        if (sol.empty()) throw std::logic_error("restriction escapes Hom(K, Fy)");
        for (size_t b = 0; b < homKY.size(); ++b)
            restr.at(static_cast<int>(b), static_cast<int>(jb)) = sol[b];
    }
    return static_cast<int>(homKY.size()) - rank(F, restr);
}

bool quotient_right_exact(const QuotientCtx& q, std::string* fail) {
    const AlgebraContext& ctx = *q.base;
    const PrimeField& F = ctx.field();
    for (int g : members(q.G)) {
        const QuotientCtx::Presentation& pr = q.presentation_of(g);
        FModule f1 = f_module(q, pr.W1);
        FModule f0 = f_module(q, pr.W0);
        FModule fm = f_module(q, pr.M);
        std::vector<Mat> incl = f_map(q, f1, f0, pr.incl);
        std::vector<Mat> epi = f_map(q, f0, fm, pr.epi);
        for (size_t v = 0; v < q.verts.size(); ++v) {
            // surjectivity of F(epi) and im F(incl) = ker F(epi)
            if (rank(F, epi[v]) != fm.gm.dims[v]) {
                if (fail) *fail = "F(epi) not surjective at " + interval_label(ctx.interval(g));
                return false;
            }
            Mat comp = mat_mul(F, epi[v], incl[v]);
            if (!comp.is_zero()) {
                if (fail) *fail = "composite not zero at " + interval_label(ctx.interval(g));
                return false;
            }
            int rk_incl = rank(F, incl[v]);
            int nullity = f0.gm.dims[v] - rank(F, epi[v]);
            if (rk_incl != nullity) {
                if (fail) *fail = "image/kernel mismatch at " + interval_label(ctx.interval(g));
                return false;
            }
        }
    }
    return true;
}

} // namespace modcat
