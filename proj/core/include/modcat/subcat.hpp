#ifndef MODCAT_SUBCAT_HPP
#define MODCAT_SUBCAT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "modcat/context.hpp"

namespace modcat {

/// A summand-closed additive subcategory, as a bitset over the ordered
/// indecomposable list. Interpretation: the additive closure of its members.
struct Subcat {
    uint64_t bits = 0;

    bool contains(int i) const { return (bits >> i) & 1; }
    bool subset_of(const Subcat& o) const { return (bits & ~o.bits) == 0; }
    int size() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }

    Subcat operator&(const Subcat& o) const { return Subcat{bits & o.bits}; }
    Subcat operator|(const Subcat& o) const { return Subcat{bits | o.bits}; }
    bool operator==(const Subcat&) const = default;
};

std::vector<int> members(const Subcat& s);

/// A module lies in add(S) iff every summand's bit is set.
bool module_in(const AlgebraContext& ctx, const Subcat& s, const ModuleObj& m);

enum class Side { Left, Right };

/// Ext-perpendicular within an ambient subcategory.
/// Right: {X in ambient : Ext^1(s, X) = 0 for all s in S}; Left symmetric.
Subcat perp(const AlgebraContext& ctx, const Subcat& s, Side side, const Subcat& ambient);

/// Galois-connection fixed pairs (U, V) with U = perp_left(V) and V = perp_right(U),
/// enumerated by a Next-Closure walk over the Ext^1-vanishing relation on the
/// ambient's indecomposables. Complete and duplicate-free, lectic order.
std::vector<std::pair<Subcat, Subcat>> galois_enumerate(const AlgebraContext& ctx,
                                                        const Subcat& ambient);

/// Brute-force variant over all member sets; for oracle comparison on small ambients.
std::vector<std::pair<Subcat, Subcat>> galois_enumerate_bruteforce(const AlgebraContext& ctx,
                                                                   const Subcat& ambient);

Subcat full_subcat(const AlgebraContext& ctx);

} // namespace modcat

#endif
