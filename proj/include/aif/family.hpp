#pragma once

// Ground representation of k-subsets of [n] and families of them.
//
// A k-subset is one 64-bit word: bit i-1 set means element i is present.
// Families are immutable, deduplicated, and stored in ascending mask order
// (colex). The lexicographic order used by the shadow/compression machinery
// is available as lex_less() but is never used for storage.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace aif {

using Element = int;  // 1-based
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

struct Params {
    int n = 0;
    int k = 0;

    /// User-facing parameters: 1 <= k < n <= 64.
    static Params make(int n, int k);
    /// Parameters of derived families (links, shadows, complements): 0 <= k <= n.
    static Params derived(int n, int k);

    Mask universe() const { return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

    friend bool operator==(const Params&, const Params&) = default;
};

inline Mask element_bit(Element x) { return Mask{1} << (x - 1); }

/// Mask of the interval [lo, hi]; empty when lo > hi.
Mask interval_mask(int lo, int hi);

std::vector<Element> elements_of(Mask m);
Mask mask_of(std::span<const Element> elements);

/// A <_L B iff min(A \ B) < min(B \ A).
inline bool lex_less(Mask a, Mask b) {
    const Mask d = a ^ b;
    if (d == 0) return false;
    return (a & (d & (~d + 1))) != 0;
}

class KSubset {
public:
    KSubset(Params params, Mask bits);
    static KSubset from_elements(Params params, std::span<const Element> elements);

    Mask bits() const { return bits_; }
    Params params() const { return params_; }
    bool contains(Element x) const { return (bits_ & element_bit(x)) != 0; }
    std::vector<Element> elements() const { return elements_of(bits_); }

    friend bool operator==(const KSubset&, const KSubset&) = default;

private:
    Mask bits_;
    Params params_;
};

std::string to_string(Mask m);

bool intersects(const KSubset& a, const KSubset& b);

struct LexLess {
    bool operator()(const KSubset& a, const KSubset& b) const { return lex_less(a.bits(), b.bits()); }
};

class SetFamily {
public:
    explicit SetFamily(Params params) : params_(params) {}
    /// Validates every mask; duplicates are rejected.
    SetFamily(Params params, std::vector<Mask> masks);
    /// Validates every mask; duplicates are merged.
    static SetFamily collect(Params params, std::vector<Mask> masks);

    Params params() const { return params_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }
    std::span<const Mask> masks() const { return masks_; }
    KSubset operator[](std::size_t i) const { return KSubset(params_, masks_[i]); }

    bool contains(Mask m) const;
    /// Index of m in storage order, if present.
    std::optional<std::size_t> index_of(Mask m) const;

    SetFamily with(Mask m) const;
    SetFamily united(const SetFamily& other) const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    struct Trusted {};
    SetFamily(Trusted, Params params, std::vector<Mask> masks)
        : params_(params), masks_(std::move(masks)) {}

    Params params_;
    std::vector<Mask> masks_;
};

bool is_intersecting(const SetFamily& f);

/// counts[i] = number of members disjoint from member i.
std::vector<int> disjoint_partner_counts(const SetFamily& f);

bool is_almost_intersecting(const SetFamily& f);

int degree(const SetFamily& f, Element x);

struct MaxDegree {
    Element element;
    int value;
};

/// Smallest element attaining the maximum degree; (1, 0) for the empty family.
MaxDegree max_degree(const SetFamily& f);

/// F(x): members containing x with x removed; (k-1)-uniform.
SetFamily link(const SetFamily& f, Element x);
/// F(x-bar): members avoiding x.
SetFamily without(const SetFamily& f, Element x);
/// F(x, y-bar): members containing x and avoiding y, with x removed.
SetFamily link_avoiding(const SetFamily& f, Element x, Element y);

/// perm[x-1] is the image of element x.
using Permutation = std::vector<Element>;

Mask permute_mask(Mask m, const Permutation& perm);
SetFamily apply_permutation(const SetFamily& f, const Permutation& perm);

/// A permutation of [n] carrying f onto g, if one exists.
std::optional<Permutation> family_isomorphic(const SetFamily& f, const SetFamily& g);

/// Number of k-subsets of [n], saturating at UINT64_MAX.
std::uint64_t count_subsets(int n, int k);

/// Visits every k-subset of [n] in ascending mask order. Stops early if the
/// visitor returns false.
template <class Visitor>
void for_each_subset(int n, int k, Visitor&& visit) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        visit(Mask{0});
        return;
    }
    const Mask limit_bit = n == 64 ? 0 : (Mask{1} << n);
    Mask x = (k == 64) ? ~Mask{0} : ((Mask{1} << k) - 1);
    for (;;) {
        if constexpr (std::is_same_v<decltype(visit(x)), bool>) {
            if (!visit(x)) return;
        } else {
            visit(x);
        }
        const Mask c = x & (~x + 1);
        const Mask r = x + c;
        if (r == 0) return;  // wrapped past bit 63
        x = (((r ^ x) >> 2) / c) | r;
        if (limit_bit != 0 && x >= limit_bit) return;
    }
}

}  // namespace aif
