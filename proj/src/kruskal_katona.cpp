#include "aif/kruskal_katona.hpp"

#include <algorithm>

#include "aif/error.hpp"

namespace aif {

bool is_cross_intersecting(const SetFamily& a, const SetFamily& b) {
    if (a.params().n != b.params().n) throw ParamError("cross-intersection: families on different ground sets");
    for (Mask x : a.masks()) {
        for (Mask y : b.masks()) {
            if ((x & y) == 0) return false;
        }
    }
    return true;
}

bool is_cross_intersecting(const CrossPair& p) { return is_cross_intersecting(p.fam_a, p.fam_b); }

namespace {

// Deposits the low bits of pattern into the set positions of m.
Mask deposit(Mask pattern, Mask m) {
    Mask out = 0;
    while (pattern != 0 && m != 0) {
        const Mask low = m & (~m + 1);
        if (pattern & 1) out |= low;
        pattern >>= 1;
        m &= m - 1;
    }
    return out;
}

std::vector<Mask> subsets_of_interval(Interval x, int b) {
    if (count_subsets(x.size(), b) > kEnumerationLimit) throw ResourceError("interval too large to enumerate");
    std::vector<Mask> out;
    const Mask base = x.mask();
    for_each_subset(x.size(), b, [&](Mask m) { out.push_back(deposit(m, base)); });
    return out;
}

void check_pair_sizes(Interval x, int a, int b) {
    if (x.lo < 1 || x.hi > kMaxGround || x.lo > x.hi) throw ParamError("bad interval");
    if (a < 1 || b < 1 || a + b > x.size()) throw ParamError("cross pair needs a, b >= 1 and a + b <= |X|");
}

}  // namespace

SetFamily shadow(const SetFamily& f, int b) {
    const Params p = f.params();
    if (b < 0 || b > p.k) throw ParamError("shadow size must lie in [0, k]");
    const std::uint64_t per = count_subsets(p.k, b);
    if (per * f.size() > kEnumerationLimit) throw ResourceError("shadow too large");
    std::vector<Mask> out;
    out.reserve(per * f.size());
    for (Mask m : f.masks()) {
        for_each_subset(p.k, b, [&](Mask pat) { out.push_back(deposit(pat, m)); });
    }
    return SetFamily::collect(Params::derived(p.n, b), std::move(out));
}

bool lex_compress_check(std::uint64_t size_a, std::uint64_t size_b, Interval x, int a, int b) {
    check_pair_sizes(x, a, b);
    if (size_a > count_subsets(x.size(), a) || size_b > count_subsets(x.size(), b)) {
        throw ParamError("lex_compress_check: size exceeds the number of sets in X");
    }
    return is_cross_intersecting(lex_family(size_a, x, a), lex_family(size_b, x, b));
}

SetFamily max_cross_partner(const SetFamily& f, int b, Interval x) {
    if (x.lo < 1 || x.hi > kMaxGround || x.lo > x.hi || b < 0 || b > x.size()) {
        throw ParamError("max_cross_partner: bad interval or size");
    }
    if (f.params().n != x.hi) throw ParamError("max_cross_partner: family must live on [hi]");
    std::vector<Mask> out;
    for (Mask cand : subsets_of_interval(x, b)) {
        bool ok = true;
        for (Mask m : f.masks()) {
            if ((m & cand) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(cand);
    }
    return SetFamily(Params::derived(x.hi, b), std::move(out));
}

CrossPair random_cross_pair(std::mt19937_64& rng, Interval x, int a, int b) {
    check_pair_sizes(x, a, b);
    const auto pool = subsets_of_interval(x, a);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_elem(x.lo, x.hi);

    Mask anchor = 0;  // A's members must meet this set (0: no constraint)
    double keep = 0.0;
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
            keep = 0.02 + 0.08 * unit(rng);
            break;
        case 1: {
            const int t = std::uniform_int_distribution<int>(1, b)(rng);
            while (std::popcount(anchor) < t) anchor |= element_bit(pick_elem(rng));
            keep = 0.2 + 0.8 * unit(rng);
            break;
        }
        default:
            anchor = element_bit(pick_elem(rng));
            keep = 0.2 + 0.8 * unit(rng);
            break;
    }
    std::vector<Mask> fa;
    for (Mask m : pool) {
        if (anchor != 0 && (m & anchor) == 0) continue;
        if (unit(rng) < keep) fa.push_back(m);
    }
    SetFamily fam_a(Params::derived(x.hi, a), std::move(fa));
    const SetFamily partner = max_cross_partner(fam_a, b, x);
    const double keep_b = unit(rng);
    std::vector<Mask> fb;
    for (Mask m : partner.masks()) {
        if (unit(rng) < keep_b) fb.push_back(m);
    }
    return {std::move(fam_a), SetFamily(Params::derived(x.hi, b), std::move(fb)), x};
}

}  // namespace aif
