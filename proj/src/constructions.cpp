#include "aif/constructions.hpp"

#include "aif/error.hpp"

namespace aif {

namespace {

void guard_enumeration(int n, int k) {
    if (count_subsets(n, k) > kEnumerationLimit) {
        throw ResourceError("refusing to enumerate C(" + std::to_string(n) + "," + std::to_string(k) + ") sets");
    }
}

template <class Pred>
SetFamily filter_universe(Params p, Pred&& keep) {
    guard_enumeration(p.n, p.k);
    std::vector<Mask> out;
    for_each_subset(p.n, p.k, [&](Mask m) {
        if (keep(m)) out.push_back(m);
    });
    return SetFamily::collect(p, std::move(out));
}

}  // namespace

SetFamily full_star(int n, int k, Element x) {
    const Params p = Params::make(n, k);
    if (x < 1 || x > n) throw ParamError("star centre outside [n]");
    const Mask bx = element_bit(x);
    return filter_universe(p, [bx](Mask m) { return (m & bx) != 0; });
}

SetFamily b_r(int n, int k, int r) {
    const Params p = Params::make(n, k);
    if (r < 3 || r > k + 1) throw ParamError("B_r needs 3 <= r <= k+1, got r=" + std::to_string(r));
    const Mask one = element_bit(1);
    const Mask head = interval_mask(2, r);
    return filter_universe(p, [=](Mask m) {
        if (m & one) return (m & head) != 0;
        return (m & head) == head;
    });
}

Mask default_b_plus_extra(int n, int k) {
    if (2 * k > n) throw ParamError("B+ needs n >= 2k");
    return element_bit(1) | interval_mask(k + 2, 2 * k);
}

SetFamily b_plus(int n, int k, Mask extra) {
    const Params p = Params::make(n, k);
    if (k < 2) throw ParamError("B+ needs k >= 2");
    if ((extra & element_bit(1)) == 0 || (extra & interval_mask(2, k + 1)) != 0) {
        throw ParamError("B+ extra set must contain 1 and avoid [2,k+1], got " + to_string(extra));
    }
    KSubset(p, extra);  // validates size and range
    return hilton_milner(n, k).with(extra);
}

SetFamily b_plus(int n, int k) { return b_plus(n, k, default_b_plus_extra(n, k)); }

namespace {

void check_interval(Interval x) {
    if (x.lo < 1 || x.hi > kMaxGround || x.lo > x.hi) {
        throw ParamError("bad interval [" + std::to_string(x.lo) + "," + std::to_string(x.hi) + "]");
    }
}

}  // namespace

std::uint64_t lex_rank(Mask s, Interval x) {
    check_interval(x);
    if ((s & ~x.mask()) != 0) throw ParamError("set " + to_string(s) + " not inside the interval");
    int need = std::popcount(s);
    std::uint64_t rank = 0;
    for (int e = x.lo; e <= x.hi && need > 0; ++e) {
        if (s & element_bit(e)) {
            --need;
        } else {
            // every set that takes e here comes first
            rank += count_subsets(x.hi - e, need - 1);
        }
    }
    return rank;
}

Mask lex_unrank(std::uint64_t rank, Interval x, int k) {
    check_interval(x);
    if (k < 0 || k > x.size()) throw ParamError("lex_unrank: k out of range");
    if (rank >= count_subsets(x.size(), k)) throw ParamError("lex_unrank: rank out of range");
    Mask s = 0;
    int need = k;
    for (int e = x.lo; e <= x.hi && need > 0; ++e) {
        const std::uint64_t with_e = count_subsets(x.hi - e, need - 1);
        if (rank < with_e) {
            s |= element_bit(e);
            --need;
        } else {
            rank -= with_e;
        }
    }
    return s;
}

SetFamily lex_family(std::uint64_t m, Interval x, int k) {
    check_interval(x);
    const Params p = Params::derived(x.hi, k);
    if (k < 0 || k > x.size()) throw ParamError("lex_family: k larger than the interval");
    if (m > count_subsets(x.size(), k)) throw ParamError("lex_family: m exceeds C(|X|,k)");
    if (m > kEnumerationLimit) throw ResourceError("lex_family: m too large");
    std::vector<Mask> out;
    out.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) out.push_back(lex_unrank(i, x, k));
    return SetFamily(p, std::move(out));
}

SetFamily complement_family(const SetFamily& f) {
    const Params p = f.params();
    guard_enumeration(p.n, p.k);
    const Mask all = p.universe();
    std::vector<Mask> out;
    for_each_subset(p.n, p.k, [&](Mask m) {
        if (!f.contains(m)) out.push_back(all & ~m);
    });
    return SetFamily::collect(Params::derived(p.n, p.n - p.k), std::move(out));
}

}  // namespace aif
