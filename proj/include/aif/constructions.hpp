#pragma once

// Builders for the named families: stars, B_r (Hilton-Milner at r = k+1),
// B+ and the initial segments L(m, X, k) of the lexicographic order.

#include <cstdint>

#include "aif/family.hpp"

namespace aif {

/// Contiguous ground interval X = [lo, hi] inside [n].
struct Interval {
    int lo = 1;
    int hi = 1;

    int size() const { return hi - lo + 1; }
    Mask mask() const { return interval_mask(lo, hi); }
};

/// All k-subsets of [n] containing x.
SetFamily full_star(int n, int k, Element x);

/// {B : 1 in B, B meets [2,r]} together with {B : 1 not in B, [2,r] inside B}.
SetFamily b_r(int n, int k, int r);

inline SetFamily hilton_milner(int n, int k) { return b_r(n, k, k + 1); }

/// {1} together with [k+2, 2k]: the lex-least valid extra set.
Mask default_b_plus_extra(int n, int k);

/// B_{k+1} plus one set containing 1 and avoiding [2, k+1].
SetFamily b_plus(int n, int k, Mask extra);
SetFamily b_plus(int n, int k);

/// 0-based rank of a k-subset of X in <_L order, and its inverse.
std::uint64_t lex_rank(Mask s, Interval x);
Mask lex_unrank(std::uint64_t rank, Interval x, int k);

/// First m k-subsets of X in <_L order, returned as a family on [x.hi].
/// m = 0 gives the empty family.
SetFamily lex_family(std::uint64_t m, Interval x, int k);

/// (n-k)-uniform family {[n] \ S : S a k-set not in f}.
SetFamily complement_family(const SetFamily& f);

/// Enumeration cap shared by every builder that walks all k-subsets.
inline constexpr std::uint64_t kEnumerationLimit = 5'000'000;

}  // namespace aif
