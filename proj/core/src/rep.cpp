#include "modcat/rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace modcat {

int RepLayout::slot_of(int vertex, int part) const {
    const auto& ps = parts_at[vertex];
    for (size_t i = 0; i < ps.size(); ++i)
        if (ps[i] == part) return static_cast<int>(i);
    return -1;
}

RepLayout build_layout(const NakayamaAlgebra& a, const ModuleObj& m) {
    RepLayout lay;
    lay.parts_at.assign(a.n, {});
    for (int p = 0; p < m.summand_count(); ++p) {
        const Interval& iv = m.parts[p];
        for (int v = iv.top; v <= iv.bot(); ++v)
            lay.parts_at[v - 1].push_back(p);
    }
    return lay;
}

Rep build_rep(const NakayamaAlgebra& a, const ModuleObj& m) {
    RepLayout lay = build_layout(a, m);
    Rep r;
    r.dims.resize(a.n);
    for (int v = 0; v < a.n; ++v) r.dims[v] = static_cast<int>(lay.parts_at[v].size());
    r.arrows.resize(a.n > 0 ? a.n - 1 : 0);
    for (int v = 0; v + 1 < a.n; ++v) {
        Mat arr(r.dims[v + 1], r.dims[v]);
        for (int c = 0; c < r.dims[v]; ++c) {
            int part = lay.parts_at[v][c];
            int row = lay.slot_of(v + 1, part);
            if (row >= 0) arr.at(row, c) = 1;
        }
        r.arrows[v] = std::move(arr);
    }
    return r;
}

bool rep_satisfies_relations(const NakayamaAlgebra& a, const PrimeField& F, const Rep& r) {
    for (int v = 0; v + a.m < a.n; ++v) {
        Mat comp = Mat::identity(r.dims[v]);
        for (int s = 0; s < a.m; ++s) comp = mat_mul(F, r.arrows[v + s], comp);
        if (!comp.is_zero()) return false;
    }
    return true;
}

bool repmap_commutes(const PrimeField& F, const Rep& dom, const Rep& cod, const RepMap& f) {
    int n = dom.n();
    for (int v = 0; v + 1 < n; ++v) {
        Mat lhs = mat_mul(F, f.comps[v + 1], dom.arrows[v]);
        Mat rhs = mat_mul(F, cod.arrows[v], f.comps[v]);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool repmap_is_mono(const PrimeField& F, const RepMap& f, const Rep& dom) {
    for (size_t v = 0; v < f.comps.size(); ++v)
        if (rank(F, f.comps[v]) != dom.dims[v]) return false;
    return true;
}

bool repmap_is_epi(const PrimeField& F, const RepMap& f, const Rep& cod) {
    for (size_t v = 0; v < f.comps.size(); ++v)
        if (rank(F, f.comps[v]) != cod.dims[v]) return false;
    return true;
}

bool repmap_is_zero(const RepMap& f) {
    for (const Mat& m : f.comps)
        if (!m.is_zero()) return false;
    return true;
}

RepMap repmap_compose(const PrimeField& F, const RepMap& g, const RepMap& f) {
    RepMap r;
    r.comps.resize(f.comps.size());
    for (size_t v = 0; v < f.comps.size(); ++v)
        r.comps[v] = mat_mul(F, g.comps[v], f.comps[v]);
    return r;
}

RepMap assemble_map(const NakayamaAlgebra& a, const ModuleObj& dom, const ModuleObj& cod,
                    const Mat& coeffs) {
    RepLayout ld = build_layout(a, dom);
    RepLayout lc = build_layout(a, cod);
    RepMap f;
    f.comps.resize(a.n);
    for (int v = 0; v < a.n; ++v) {
        Mat m(static_cast<int>(lc.parts_at[v].size()), static_cast<int>(ld.parts_at[v].size()));
        for (int col = 0; col < m.cols; ++col) {
            int p = ld.parts_at[v][col];
            const Interval& x = dom.parts[p];
            for (int row = 0; row < m.rows; ++row) {
                int q = lc.parts_at[v][row];
                const Interval& y = cod.parts[q];
                if (!hom_dim_formula(x, y)) continue;
                // canonical map supported on [x.top, y.bot()]
                int vv = v + 1;
                if (vv >= x.top && vv <= y.bot()) m.at(row, col) = coeffs.at(q, p);
            }
        }
        f.comps[v] = std::move(m);
    }
    return f;
}

Mat extract_coeffs(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& dom,
                   const ModuleObj& cod, const RepMap& f) {
    RepLayout ld = build_layout(a, dom);
    RepLayout lc = build_layout(a, cod);
    Mat coeffs(cod.summand_count(), dom.summand_count());
    for (int p = 0; p < dom.summand_count(); ++p) {
        const Interval& x = dom.parts[p];
        for (int q = 0; q < cod.summand_count(); ++q) {
            const Interval& y = cod.parts[q];
            if (!hom_dim_formula(x, y)) continue;
            int v = x.top - 1;  // leftmost vertex of the canonical support
            int col = ld.slot_of(v, p);
            int row = lc.slot_of(v, q);
            coeffs.at(q, p) = f.comps[v].at(row, col);
        }
    }
#ifndef NDEBUG
    // the map must be exactly the assembled block form
    RepMap back = assemble_map(a, dom, cod, coeffs);
    for (int v = 0; v < a.n; ++v)
        assert(back.comps[v] == f.comps[v]);
    (void)F;
#endif
    return coeffs;
}

Decomposition decompose_rep(const NakayamaAlgebra& a, const PrimeField& F, const Rep& r) {
    struct Strand {
        int birth;                       // 0-based vertex
        int death = -1;                  // 0-based, inclusive
        std::vector<std::vector<uint8_t>> vecs;  // one per vertex from birth
    };
    std::vector<Strand> strands;
    std::vector<int> live;  // indices into strands, kept ordered by (birth, id)

    int n = r.n();
    for (int v = 0; v < n; ++v) {
        std::vector<int> next_live;
        // images of live strands under the arrow into v
        Mat kept(r.dims[v], 0);             // kept image columns, for dependence tests
        std::vector<int> kept_strands;
        if (v > 0) {
            for (int sid : live) {
                Strand& s = strands[sid];
                const std::vector<uint8_t>& x = s.vecs.back();
                std::vector<uint8_t> w(r.dims[v], 0);
                for (int i = 0; i < r.dims[v]; ++i)
                    for (int j = 0; j < r.dims[v - 1]; ++j)
                        w[i] = F.add(w[i], F.mul(r.arrows[v - 1].at(i, j), x[j]));
                // does w lie in the span of already-kept images?
                std::vector<uint8_t> sol = solve(F, kept, w);
                bool dies = !kept.cols ? std::all_of(w.begin(), w.end(), [](uint8_t t) { return t == 0; })
                                       : !sol.empty();
                if (dies) {
                    // subtract the matching combination of older strands backward so
                    // the arrow genuinely kills this strand's vector
                    s.death = v - 1;
                    if (kept.cols) {
                        for (size_t kcol = 0; kcol < sol.size(); ++kcol) {
                            uint8_t c = sol[kcol];
                            if (!c) continue;
                            Strand& o = strands[kept_strands[kcol]];
                            for (int u = s.birth; u <= v - 1; ++u) {
                                std::vector<uint8_t>& su = s.vecs[u - s.birth];
                                const std::vector<uint8_t>& ou = o.vecs[u - o.birth];
                                for (size_t t = 0; t < su.size(); ++t)
                                    su[t] = F.sub(su[t], F.mul(c, ou[t]));
                            }
                        }
                    }
                } else {
                    s.vecs.push_back(w);
                    next_live.push_back(sid);
                    Mat col(r.dims[v], 1);
                    for (int i = 0; i < r.dims[v]; ++i) col.at(i, 0) = w[i];
                    kept = kept.cols ? mat_hstack(kept, col) : col;
                    kept_strands.push_back(sid);
                }
            }
        }
        // births: complete kept columns to a basis of k^{dims[v]}
        for (int e = 0; e < r.dims[v] && static_cast<int>(next_live.size()) < r.dims[v]; ++e) {
            std::vector<uint8_t> unit(r.dims[v], 0);
            unit[e] = 1;
            std::vector<uint8_t> sol = solve(F, kept, unit);
            bool in_span = !kept.cols ? false : !sol.empty();
            if (kept.cols == 0 && r.dims[v] == 0) in_span = true;
            if (in_span) continue;
            Strand s;
            s.birth = v;
            s.vecs.push_back(unit);
            strands.push_back(std::move(s));
            int sid = static_cast<int>(strands.size()) - 1;
            next_live.push_back(sid);
            Mat col(r.dims[v], 1);
            col.at(e, 0) = 1;
            kept = kept.cols ? mat_hstack(kept, col) : col;
            kept_strands.push_back(sid);
        }
        live = std::move(next_live);
    }
    for (int sid : live) strands[sid].death = n - 1;

    // assemble module and iso; sort strands to the canonical part order
    std::vector<int> order(strands.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        Interval ix{strands[x].birth + 1, strands[x].death - strands[x].birth + 1};
        Interval iy{strands[y].birth + 1, strands[y].death - strands[y].birth + 1};
        if (ix != iy) return ix < iy;
        return x < y;
    });
    ModuleObj mobj;
    for (int sid : order)
        mobj.parts.push_back(Interval{strands[sid].birth + 1,
                                      strands[sid].death - strands[sid].birth + 1});
    // parts are sorted by construction
    RepLayout lay = build_layout(a, mobj);
    RepMap iso;
    iso.comps.resize(n);
    for (int v = 0; v < n; ++v) {
        Mat m(r.dims[v], static_cast<int>(lay.parts_at[v].size()));
        for (int col = 0; col < m.cols; ++col) {
            int part = lay.parts_at[v][col];
            const Strand& s = strands[order[part]];
            const std::vector<uint8_t>& x = s.vecs[v - s.birth];
            for (int i = 0; i < r.dims[v]; ++i) m.at(i, col) = x[i];
        }
        iso.comps[v] = std::move(m);
    }
#ifndef NDEBUG
    Rep mr = build_rep(a, mobj);
    for (int v = 0; v < n; ++v)
        assert(is_invertible(F, iso.comps[v]) || iso.comps[v].rows == 0);
    assert(repmap_commutes(F, mr, r, iso));
#endif
    return Decomposition{std::move(mobj), std::move(iso)};
}

SubObject kernel_of(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& dom,
                    const ModuleObj& cod, const RepMap& f) {
    (void)cod;
    Rep rd = build_rep(a, dom);
    int n = rd.n();
    std::vector<Mat> kbasis(n);  // columns span ker f_v inside dom coords
    Rep kr;
    kr.dims.resize(n);
    for (int v = 0; v < n; ++v) {
        kbasis[v] = nullspace(F, f.comps[v]);
        kr.dims[v] = kbasis[v].cols;
    }
    kr.arrows.resize(n > 0 ? n - 1 : 0);
    for (int v = 0; v + 1 < n; ++v) {
        // express arrow * kbasis[v] in kbasis[v+1] coordinates
        Mat img = mat_mul(F, rd.arrows[v], kbasis[v]);
        Mat arr(kr.dims[v + 1], kr.dims[v]);
        for (int c = 0; c < img.cols; ++c) {
            std::vector<uint8_t> b(img.rows);
            for (int i = 0; i < img.rows; ++i) b[i] = img.at(i, c);
            std::vector<uint8_t> x = solve(F, kbasis[v + 1], b);
            if (x.empty() && img.rows > 0) {
                bool zero = std::all_of(b.begin(), b.end(), [](uint8_t t) { return t == 0; });
                if (!zero) throw std::logic_error("kernel is not a subrepresentation");
            }
            for (int i = 0; i < arr.rows && !x.empty(); ++i) arr.at(i, c) = x[i];
        }
        kr.arrows[v] = std::move(arr);
    }
    Decomposition dec = decompose_rep(a, F, kr);
    RepMap incl;
    incl.comps.resize(n);
    for (int v = 0; v < n; ++v)
        incl.comps[v] = mat_mul(F, kbasis[v], dec.iso.comps[v]);
    return SubObject{std::move(dec.module), std::move(incl)};
}

QuotObject cokernel_of(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& dom,
                       const ModuleObj& cod, const RepMap& f) {
    (void)dom;
    Rep rc = build_rep(a, cod);
    int n = rc.n();
    std::vector<Mat> proj(n);      // quotient coordinates <- cod coords
    std::vector<Mat> section(n);   // cod coords <- quotient coordinates
    Rep qr;
    qr.dims.resize(n);
    for (int v = 0; v < n; ++v) {
        int d = rc.dims[v];
        // complement of the image: standard basis vectors not in column span
        Mat img = f.comps[v];
        std::vector<int> comp_idx;
        {
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
        }
        int q = static_cast<int>(comp_idx.size());
        qr.dims[v] = q;
        section[v] = Mat(d, q);
        for (int c = 0; c < q; ++c) section[v].at(comp_idx[c], c) = 1;
        // projection: solve [img | section] * (x, y) = e_j, take y
        Mat m = img.cols ? mat_hstack(img, section[v]) : section[v];
        proj[v] = Mat(q, d);
        for (int j = 0; j < d; ++j) {
            std::vector<uint8_t> b(d, 0);
            b[j] = 1;
            std::vector<uint8_t> x = solve(F, m, b);
            assert(!x.empty());
            for (int c = 0; c < q; ++c) proj[v].at(c, j) = x[img.cols + c];
        }
    }
    qr.arrows.resize(n > 0 ? n - 1 : 0);
    for (int v = 0; v + 1 < n; ++v)
        qr.arrows[v] = mat_mul(F, proj[v + 1], mat_mul(F, rc.arrows[v], section[v]));
    Decomposition dec = decompose_rep(a, F, qr);
    RepMap pr;
    pr.comps.resize(n);
    for (int v = 0; v < n; ++v) {
        Mat inv = dec.iso.comps[v].rows ? mat_inverse(F, dec.iso.comps[v]) : Mat(0, 0);
        pr.comps[v] = mat_mul(F, inv, proj[v]);
    }
    return QuotObject{std::move(dec.module), std::move(pr)};
}

ModuleObj image_of(const NakayamaAlgebra& a, const PrimeField& F, const ModuleObj& dom,
                   const ModuleObj& cod, const RepMap& f) {
    (void)dom;
    Rep rc = build_rep(a, cod);
    int n = rc.n();
    std::vector<Mat> ibasis(n);
    Rep ir;
    ir.dims.resize(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> cols = column_basis(F, f.comps[v]);
        Mat b(rc.dims[v], static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (int i = 0; i < rc.dims[v]; ++i) b.at(i, static_cast<int>(c)) = f.comps[v].at(i, cols[c]);
        ibasis[v] = std::move(b);
        ir.dims[v] = ibasis[v].cols;
    }
    ir.arrows.resize(n > 0 ? n - 1 : 0);
    for (int v = 0; v + 1 < n; ++v) {
        Mat img = mat_mul(F, rc.arrows[v], ibasis[v]);
        Mat arr(ir.dims[v + 1], ir.dims[v]);
        for (int c = 0; c < img.cols; ++c) {
            std::vector<uint8_t> b(img.rows);
            for (int i = 0; i < img.rows; ++i) b[i] = img.at(i, c);
            std::vector<uint8_t> x = solve(F, ibasis[v + 1], b);
            for (int i = 0; i < arr.rows && !x.empty(); ++i) arr.at(i, c) = x[i];
        }
        ir.arrows[v] = std::move(arr);
    }
    return decompose_rep(a, F, ir).module;
}

} // namespace modcat
