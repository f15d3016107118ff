#ifndef MODCAT_ALGEBRA_HPP
#define MODCAT_ALGEBRA_HPP

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "modcat/field.hpp"

namespace modcat {

/// The ambient algebra kA_n/[x^m]: linear quiver 1 -> 2 -> ... -> n with all
/// paths of length m equal to zero, over the prime field of characteristic p.
struct NakayamaAlgebra {
    int n = 1;     ///< number of vertices
    int m = 2;     ///< nilpotency degree, >= 2
    int p = 2;     ///< working field characteristic

    void validate() const {
        if (n < 1) throw std::invalid_argument("vertex count n must be >= 1");
        if (m < 2) throw std::invalid_argument("nilpotency degree m must be >= 2");
        if (!PrimeField::is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    }
};

/// An indecomposable module: the uniserial with top at vertex `top` and
/// composition length `len`, supported on vertices [top, top+len-1].
/// Arrows act as the identity along the support.
struct Interval {
    int top = 0;
    int len = 0;

    int bot() const { return top + len - 1; }  // socle vertex

    auto operator<=>(const Interval&) const = default;

    bool valid_in(const NakayamaAlgebra& a) const {
        return top >= 1 && len >= 1 && len <= a.m && bot() <= a.n;
    }
};

std::string interval_label(const Interval& iv);
Interval parse_interval_label(const std::string& s);  // "(t,l)"

inline Interval projective_at(const NakayamaAlgebra& a, int v) {
    return Interval{v, std::min(a.m, a.n - v + 1)};
}
inline Interval injective_with_socle(const NakayamaAlgebra& a, int v) {
    int t = std::max(1, v - a.m + 1);
    return Interval{t, v - t + 1};
}
inline bool is_projective(const NakayamaAlgebra& a, const Interval& iv) {
    return iv.len == std::min(a.m, a.n - iv.top + 1);
}
inline bool is_injective(const NakayamaAlgebra& a, const Interval& iv) {
    return iv == injective_with_socle(a, iv.bot());
}

/// Projective cover P(top) of an interval.
inline Interval cover_interval(const NakayamaAlgebra& a, const Interval& iv) {
    return projective_at(a, iv.top);
}
/// First syzygy: kernel of the projective cover. len == 0 encodes zero.
inline Interval syzygy_interval(const NakayamaAlgebra& a, const Interval& iv) {
    Interval p = cover_interval(a, iv);
    return Interval{iv.top + iv.len, p.len - iv.len};
}
/// Injective envelope I(socle).
inline Interval envelope_interval(const NakayamaAlgebra& a, const Interval& iv) {
    return injective_with_socle(a, iv.bot());
}
/// First cosyzygy: cokernel of the injective envelope. len == 0 encodes zero.
inline Interval cosyzygy_interval(const NakayamaAlgebra& a, const Interval& iv) {
    Interval e = envelope_interval(a, iv);
    return Interval{e.top, iv.top - e.top};
}

/// dim Hom(x, y) for indecomposables; always 0 or 1. The nonzero map factors
/// as the quotient of x onto its top part followed by the inclusion of the
/// bottom part of y, supported on [x.top, y.bot()].
inline int hom_dim_formula(const Interval& x, const Interval& y) {
    return (y.top <= x.top && x.top <= y.bot() && y.bot() <= x.bot()) ? 1 : 0;
}

/// A finite-dimensional module: multiset of indecomposable summands.
/// Empty list is the zero module. Parts kept sorted.
struct ModuleObj {
    std::vector<Interval> parts;

    ModuleObj() = default;
    explicit ModuleObj(Interval iv) { if (iv.len > 0) parts.push_back(iv); }
    explicit ModuleObj(std::vector<Interval> ps) : parts(std::move(ps)) {
        normalize();
    }

    void normalize() {
        std::erase_if(parts, [](const Interval& iv) { return iv.len <= 0; });
        std::sort(parts.begin(), parts.end());
    }

    bool is_zero() const { return parts.empty(); }
    int summand_count() const { return static_cast<int>(parts.size()); }

    int total_dim() const {
        int d = 0;
        for (const auto& iv : parts) d += iv.len;
        return d;
    }

    std::vector<int> dim_vector(int n) const {
        std::vector<int> d(n, 0);
        for (const auto& iv : parts)
            for (int v = iv.top; v <= iv.bot(); ++v) d[v - 1] += 1;
        return d;
    }

    ModuleObj& append(const Interval& iv, int mult = 1) {
        for (int i = 0; i < mult; ++i)
            if (iv.len > 0) parts.push_back(iv);
        normalize();
        return *this;
    }

    friend ModuleObj direct_sum(const ModuleObj& a, const ModuleObj& b) {
        ModuleObj r = a;
        r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
        r.normalize();
        return r;
    }

    bool operator==(const ModuleObj&) const = default;
};

std::string module_label(const ModuleObj& m);

} // namespace modcat

#endif
