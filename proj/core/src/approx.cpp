#include "modcat/approx.hpp"

#include <algorithm>

namespace modcat {

namespace {

// Hom(s, X) slots: indices of parts p of X with hom(s, p) != 0.
std::vector<int> right_slots(const AlgebraContext& ctx, int s, const ModuleObj& X) {
    std::vector<int> r;
    for (int p = 0; p < X.summand_count(); ++p)
        if (ctx.hom_dim(s, ctx.index_of(X.parts[p]))) r.push_back(p);
    return r;
}

std::vector<int> left_slots(const AlgebraContext& ctx, int s, const ModuleObj& X) {
    std::vector<int> r;
    for (int p = 0; p < X.summand_count(); ++p)
        if (ctx.hom_dim(ctx.index_of(X.parts[p]), s)) r.push_back(p);
    return r;
}

} // namespace

ApproxMap min_approx(const AlgebraContext& ctx, const ModuleObj& X, const Subcat& S, Side side) {
    ApproxMap ap;
    ap.object = X;
    ap.side = side;
    ap.minimal = true;

    // collect (member interval, X-part slot) copies whose canonical map does not
    // factor through another member of S
    std::vector<std::pair<Interval, int>> copies;  // (indec of S, slot part)
    for (int s : members(S)) {
        if (side == Side::Right) {
            for (int p : right_slots(ctx, s, X)) {
                int pi = ctx.index_of(X.parts[p]);
                bool radical = false;
                for (int t : members(S)) {
                    if (t == s) continue;
                    if (ctx.hom_dim(s, t) && ctx.hom_dim(t, pi)) { radical = true; break; }
                }
                if (!radical) copies.emplace_back(ctx.interval(s), p);
            }
        } else {
            for (int p : left_slots(ctx, s, X)) {
                int pi = ctx.index_of(X.parts[p]);
                bool radical = false;
                for (int t : members(S)) {
                    if (t == s) continue;
                    if (ctx.hom_dim(pi, t) && ctx.hom_dim(t, s)) { radical = true; break; }
                }
                if (!radical) copies.emplace_back(ctx.interval(s), p);
            }
        }
    }
    std::sort(copies.begin(), copies.end());
    for (auto& [iv, p] : copies) ap.target.parts.push_back(iv);
    // parts already sorted

    if (side == Side::Right) {
        ap.coeffs = Mat(X.summand_count(), static_cast<int>(copies.size()));
        for (int c = 0; c < static_cast<int>(copies.size()); ++c)
            ap.coeffs.at(copies[c].second, c) = 1;
        ap.map = assemble_map(ctx.alg(), ap.target, X, ap.coeffs);
    } else {
        ap.coeffs = Mat(static_cast<int>(copies.size()), X.summand_count());
        for (int c = 0; c < static_cast<int>(copies.size()); ++c)
            ap.coeffs.at(c, copies[c].second) = 1;
        ap.map = assemble_map(ctx.alg(), X, ap.target, ap.coeffs);
    }
    return ap;
}

namespace {

// rank test: do the composites through `ap` span Hom(s, X) (right) or Hom(X, s) (left)
// for a single member s, with an optional dropped target copy?
bool covers_member(const AlgebraContext& ctx, const ApproxMap& ap, int s, int dropped) {
    const PrimeField& F = ctx.field();
    const ModuleObj& X = ap.object;
    if (ap.side == Side::Right) {
        std::vector<int> slots = right_slots(ctx, s, X);
        if (slots.empty()) return true;
        std::vector<std::vector<uint8_t>> cols;
        for (int c = 0; c < ap.target.summand_count(); ++c) {
            if (c == dropped) continue;
            int ti = ctx.index_of(ap.target.parts[c]);
            if (!ctx.hom_dim(s, ti)) continue;
            // composite s -> target copy c -> X in Hom(s, X) coordinates
            std::vector<uint8_t> col(slots.size(), 0);
            for (size_t r = 0; r < slots.size(); ++r) {
                int p = slots[r];
                int pi = ctx.index_of(X.parts[p]);
                if (ctx.comp_nonzero(s, ti, pi))
                    col[r] = ap.coeffs.at(p, c);
            }
            cols.push_back(std::move(col));
        }
        Mat m(static_cast<int>(slots.size()), static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t r = 0; r < slots.size(); ++r)
                m.at(static_cast<int>(r), static_cast<int>(j)) = cols[j][r];
        return rank(F, m) == static_cast<int>(slots.size());
    } else {
        std::vector<int> slots = left_slots(ctx, s, X);
        if (slots.empty()) return true;
        std::vector<std::vector<uint8_t>> cols;
        for (int c = 0; c < ap.target.summand_count(); ++c) {
            if (c == dropped) continue;
            int ti = ctx.index_of(ap.target.parts[c]);
            if (!ctx.hom_dim(ti, s)) continue;
            std::vector<uint8_t> col(slots.size(), 0);
            for (size_t r = 0; r < slots.size(); ++r) {
                int p = slots[r];
                int pi = ctx.index_of(X.parts[p]);
                if (ctx.comp_nonzero(pi, ti, s))
                    col[r] = ap.coeffs.at(c, p);
            }
            cols.push_back(std::move(col));
        }
        Mat m(static_cast<int>(slots.size()), static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t r = 0; r < slots.size(); ++r)
                m.at(static_cast<int>(r), static_cast<int>(j)) = cols[j][r];
        return rank(F, m) == static_cast<int>(slots.size());
    }
}

} // namespace

bool is_approximation(const AlgebraContext& ctx, const Subcat& S, const ApproxMap& ap) {
    for (int s : members(S))
        if (!covers_member(ctx, ap, s, -1)) return false;
    return true;
}

bool strip_verify_minimal(const AlgebraContext& ctx, const Subcat& S, const ApproxMap& ap) {
    for (int c = 0; c < ap.target.summand_count(); ++c) {
        bool still = true;
        for (int s : members(S)) {
            if (!covers_member(ctx, ap, s, c)) { still = false; break; }
        }
        if (still) return false;  // a copy is superfluous
    }
    return true;
}

} // namespace modcat
