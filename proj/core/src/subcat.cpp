#include "modcat/subcat.hpp"

#include <algorithm>

namespace modcat {

std::vector<int> members(const Subcat& s) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
        if (s.contains(i)) v.push_back(i);
    return v;
}

bool module_in(const AlgebraContext& ctx, const Subcat& s, const ModuleObj& m) {
    for (const auto& iv : m.parts) {
        int i = ctx.index_of(iv);
        if (i < 0 || !s.contains(i)) return false;
    }
    return true;
}

Subcat full_subcat(const AlgebraContext& ctx) { return Subcat{ctx.all_bits()}; }

Subcat perp(const AlgebraContext& ctx, const Subcat& s, Side side, const Subcat& ambient) {
    Subcat r;
    for (int j = 0; j < ctx.count(); ++j) {
        if (!ambient.contains(j)) continue;
        bool ok = true;
        for (int i = 0; i < ctx.count() && ok; ++i) {
            if (!s.contains(i)) continue;
            int e = (side == Side::Right) ? ctx.ext1(i, j) : ctx.ext1(j, i);
            if (e) ok = false;
        }
        if (ok) r.bits |= 1ull << j;
    }
    return r;
}

namespace {

// closure operator: U -> perp_left(perp_right(U)) within the ambient
Subcat closure_u(const AlgebraContext& ctx, const Subcat& u, const Subcat& ambient) {
    Subcat v = perp(ctx, u, Side::Right, ambient);
    return perp(ctx, v, Side::Left, ambient);
}

} // namespace

std::vector<std::pair<Subcat, Subcat>> galois_enumerate(const AlgebraContext& ctx,
                                                        const Subcat& ambient) {
    // Next-Closure over the ground set of ambient members, lectic order with
    // the deterministic indecomposable order as tie-break.
    std::vector<int> ground = members(ambient);
    int g = static_cast<int>(ground.size());
    std::vector<std::pair<Subcat, Subcat>> out;
    if (g == 0) {
        out.push_back({Subcat{0}, Subcat{0}});
        return out;
    }

    auto close = [&](uint64_t gb) {
        Subcat u;
        for (int i = 0; i < g; ++i)
            if ((gb >> i) & 1) u.bits |= 1ull << ground[i];
        Subcat c = closure_u(ctx, u, ambient);
        uint64_t r = 0;
        for (int i = 0; i < g; ++i)
            if (c.contains(ground[i])) r |= 1ull << i;
        return r;
    };

    uint64_t a = close(0);
    while (true) {
        Subcat u;
        for (int i = 0; i < g; ++i)
            if ((a >> i) & 1) u.bits |= 1ull << ground[i];
        Subcat v = perp(ctx, u, Side::Right, ambient);
        out.push_back({u, v});

        // lectic next closure
        bool found = false;
        for (int i = g - 1; i >= 0; --i) {
            if ((a >> i) & 1) continue;
            uint64_t below = a & ((1ull << i) - 1);
            uint64_t candidate = close(below | (1ull << i));
            // candidate must agree with `below` strictly under position i
            if ((candidate & ((1ull << i) - 1)) == below && ((candidate >> i) & 1)) {
                a = candidate;
                found = true;
                break;
            }
        }
        if (!found) break;
    }

    // verify every pair is a genuine fixed point
    for (auto& [u, v] : out) {
        Subcat u2 = perp(ctx, v, Side::Left, ambient);
        Subcat v2 = perp(ctx, u, Side::Right, ambient);
        if (!(u2 == u) || !(v2 == v))
            throw std::logic_error("galois enumeration produced a non-fixed pair");
    }
    return out;
}

std::vector<std::pair<Subcat, Subcat>> galois_enumerate_bruteforce(const AlgebraContext& ctx,
                                                                   const Subcat& ambient) {
    std::vector<int> ground = members(ambient);
    int g = static_cast<int>(ground.size());
    std::vector<std::pair<Subcat, Subcat>> out;
    for (uint64_t gb = 0; gb < (1ull << g); ++gb) {
        Subcat u;
        for (int i = 0; i < g; ++i)
            if ((gb >> i) & 1) u.bits |= 1ull << ground[i];
        Subcat v = perp(ctx, u, Side::Right, ambient);
        Subcat u2 = perp(ctx, v, Side::Left, ambient);
        if (u2 == u && std::find(out.begin(), out.end(), std::make_pair(u, v)) == out.end())
            out.push_back({u, v});
    }
    return out;
}

} // namespace modcat
