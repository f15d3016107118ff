#include "modcat/ses.hpp"

#include <algorithm>
#include <random>

namespace modcat {

bool validate_witness(const AlgebraContext& ctx, const SesWitness& w) {
    const NakayamaAlgebra& a = ctx.alg();
    const PrimeField& F = ctx.field();
    Rep ra = build_rep(a, w.A);
    Rep rb = build_rep(a, w.B);
    if (!repmap_commutes(F, ra, rb, w.inj)) return false;
    if (!repmap_is_mono(F, w.inj, ra)) return false;
    QuotObject q = cokernel_of(a, F, w.A, w.B, w.inj);
    return q.module == w.C;
}

namespace {

// slot basis of Hom(A, B): pairs (part of A, part of B) with nonzero hom
struct SlotBasis {
    std::vector<std::pair<int, int>> slots;  // (A part, B part)
};

SlotBasis hom_slots(const AlgebraContext& ctx, const ModuleObj& A, const ModuleObj& B) {
    SlotBasis sb;
    for (int i = 0; i < A.summand_count(); ++i)
        for (int j = 0; j < B.summand_count(); ++j)
            if (ctx.hom_dim(ctx.index_of(A.parts[i]), ctx.index_of(B.parts[j])))
                sb.slots.emplace_back(i, j);
    return sb;
}

Mat coeffs_from_vector(const SlotBasis& sb, const ModuleObj& A, const ModuleObj& B,
                       const std::vector<uint8_t>& v) {
    Mat c(B.summand_count(), A.summand_count());
    for (size_t s = 0; s < sb.slots.size(); ++s)
        c.at(sb.slots[s].second, sb.slots[s].first) = v[s];
    return c;
}

} // namespace

SesSearchResult ses_search(const AlgebraContext& ctx, const ModuleObj& A, const ModuleObj& B,
                           const ModuleObj& C, const SearchPolicy& pol) {
    const NakayamaAlgebra& a = ctx.alg();
    const PrimeField& F = ctx.field();
    SesSearchResult res;

    // dimension vectors must be additive
    std::vector<int> da = A.dim_vector(a.n), db = B.dim_vector(a.n), dc = C.dim_vector(a.n);
    for (int v = 0; v < a.n; ++v)
        if (da[v] + dc[v] != db[v]) {
            res.found = false;
            res.definite = true;
            return res;
        }

    if (A.is_zero()) {
        res.found = (B == C);
        res.definite = true;
        if (res.found) {
            RepMap z;
            Rep rb = build_rep(a, B);
            z.comps.resize(a.n);
            for (int v = 0; v < a.n; ++v) z.comps[v] = Mat(rb.dims[v], 0);
            res.witness = SesWitness{A, B, C, z};
        }
        return res;
    }

    SlotBasis sb = hom_slots(ctx, A, B);
    int h = static_cast<int>(sb.slots.size());
    int q = F.p();
    long long total = 1;
    bool exhaustive = true;
    for (int i = 0; i < h; ++i) {
        total *= q;
        if (total > pol.element_budget) { exhaustive = false; break; }
    }

    auto try_vec = [&](const std::vector<uint8_t>& v) -> bool {
        Mat coeffs = coeffs_from_vector(sb, A, B, v);
        RepMap f = assemble_map(a, A, B, coeffs);
        Rep ra = build_rep(a, A);
        if (!repmap_is_mono(F, f, ra)) return false;
        QuotObject qo = cokernel_of(a, F, A, B, f);
        if (!(qo.module == C)) return false;
        res.witness = SesWitness{A, B, C, f};
        return true;
    };

    if (exhaustive) {
        std::vector<uint8_t> v(h, 0);
        while (true) {
            if (try_vec(v)) {
                res.found = true;
                res.definite = true;
                res.certainty = Certainty::Exhaustive;
                return res;
            }
            int i = 0;
            while (i < h && v[i] == q - 1) { v[i] = 0; ++i; }
            if (i == h) break;
            v[i] = static_cast<uint8_t>(v[i] + 1);
        }
        res.found = false;
        res.definite = true;
        res.certainty = Certainty::Exhaustive;
        return res;
    }

    std::mt19937_64 rng(pol.seed);
    std::uniform_int_distribution<int> dist(0, q - 1);
    for (int s = 0; s < pol.samples; ++s) {
        std::vector<uint8_t> v(h);
        for (int i = 0; i < h; ++i) v[i] = static_cast<uint8_t>(dist(rng));
        if (try_vec(v)) {
            res.found = true;
            res.definite = true;  // a found witness is always definite
            res.certainty = Certainty::Probabilistic;
            return res;
        }
    }
    res.found = false;
    res.definite = false;  // inconclusive probabilistic no
    res.certainty = Certainty::Probabilistic;
    return res;
}

namespace {

std::vector<MiddleTerm> middles_impl(const AlgebraContext& ctx, int c_index, const ModuleObj& A,
                                     bool nondegenerate_only) {
    const NakayamaAlgebra& a = ctx.alg();
    const PrimeField& F = ctx.field();
    std::vector<MiddleTerm> out;
    Interval C = ctx.interval(c_index);
    ModuleObj Cm{C};

    auto push_split = [&]() {
        ModuleObj B = direct_sum(A, Cm);
        // canonical split inclusion
        Mat coeffs(B.summand_count(), A.summand_count());
        // match each part of A to a distinct equal part of B
        std::vector<bool> used(B.summand_count(), false);
        for (int i = 0; i < A.summand_count(); ++i)
            for (int j = 0; j < B.summand_count(); ++j)
                if (!used[j] && B.parts[j] == A.parts[i]) {
                    coeffs.at(j, i) = 1;
                    used[j] = true;
                    break;
                }
        RepMap inj = assemble_map(a, A, B, coeffs);
        out.push_back(MiddleTerm{B, SesWitness{A, B, Cm, inj}});
    };

    if (!nondegenerate_only) push_split();
    if (ctx.projective(c_index) || A.is_zero()) return out;

    int s = ctx.syzygy(c_index);
    Interval K = ctx.interval(s);
    Interval P = ctx.interval(ctx.cover(c_index));
    ModuleObj Km{K};

    // slots of Hom(K, A); slot p is hit by the restriction from Hom(P, A)
    // exactly when the canonical P -> part map is nonzero
    std::vector<int> slots;        // part indices of A with hom(K, part) != 0
    std::vector<bool> hit;         // covered by restriction image
    for (int p = 0; p < A.summand_count(); ++p) {
        int pi = ctx.index_of(A.parts[p]);
        if (!ctx.hom_dim(s, pi)) continue;
        slots.push_back(p);
        hit.push_back(ctx.hom_dim(ctx.cover(c_index), pi) != 0);
    }
    std::vector<int> free_slots;
    for (size_t i = 0; i < slots.size(); ++i)
        if (!hit[i]) free_slots.push_back(slots[i]);
    int e = static_cast<int>(free_slots.size());
    if (e == 0) return out;

    // if nondegenerate: every summand of A must carry a nonzero component,
    // which requires every part to own a free slot
    if (nondegenerate_only) {
        std::vector<bool> has(A.summand_count(), false);
        for (int p : free_slots) has[p] = true;
        for (int p = 0; p < A.summand_count(); ++p)
            if (!has[p]) return out;
    }

    int q = F.p();
    std::vector<uint8_t> v(e, nondegenerate_only ? 1 : 0);
    // enumerate class vectors; in nondegenerate mode components run over nonzero scalars
    auto advance = [&]() -> bool {
        int lo = nondegenerate_only ? 1 : 0;
        int i = 0;
        while (i < e && v[i] == q - 1) { v[i] = static_cast<uint8_t>(lo); ++i; }
        if (i == e) return false;
        v[i] = static_cast<uint8_t>(v[i] + 1);
        return true;
    };

    while (true) {
        bool all_zero = std::all_of(v.begin(), v.end(), [](uint8_t t) { return t == 0; });
        if (!all_zero) {
            // pushout of K -> P along h = sum of chosen slot maps
            ModuleObj PA = direct_sum(ModuleObj{P}, A);
            // locate the copy of P and the copies of A's parts inside PA
            std::vector<int> a_pos(A.summand_count(), -1);
            int p_pos = -1;
            {
                std::vector<bool> used(PA.summand_count(), false);
                for (int i = 0; i < A.summand_count(); ++i)
                    for (int j = 0; j < PA.summand_count(); ++j)
                        if (!used[j] && PA.parts[j] == A.parts[i]) {
                            a_pos[i] = j;
                            used[j] = true;
                            break;
                        }
                for (int j = 0; j < PA.summand_count(); ++j)
                    if (!used[j] && PA.parts[j] == P) { p_pos = j; break; }
            }
            Mat g(PA.summand_count(), 1);
            g.at(p_pos, 0) = 1;  // K -> P inclusion
            for (int i = 0; i < e; ++i)
                if (v[i]) g.at(a_pos[free_slots[i]], 0) = F.neg(v[i]);
            RepMap gm = assemble_map(a, Km, PA, g);
            QuotObject qo = cokernel_of(a, F, Km, PA, gm);
            // witness: A -> PA -> B
            Mat ic(PA.summand_count(), A.summand_count());
            for (int i = 0; i < A.summand_count(); ++i) ic.at(a_pos[i], i) = 1;
            RepMap incl = assemble_map(a, A, PA, ic);
            RepMap inj = repmap_compose(F, qo.proj, incl);
            out.push_back(MiddleTerm{qo.module, SesWitness{A, qo.module, Cm, inj}});
        }
        if (!advance()) break;
    }
    return out;
}

} // namespace

std::vector<MiddleTerm> middle_terms(const AlgebraContext& ctx, int c_index, const ModuleObj& A) {
    return middles_impl(ctx, c_index, A, false);
}

std::vector<MiddleTerm> middle_terms_nondegenerate(const AlgebraContext& ctx, int c_index,
                                                   const ModuleObj& A) {
    return middles_impl(ctx, c_index, A, true);
}

} // namespace modcat
