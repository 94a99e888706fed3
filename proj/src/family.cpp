#include "aif/family.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "aif/error.hpp"

namespace aif {

Params Params::make(int n, int k) {
    if (n < 2 || n > kMaxGround || k < 1 || k >= n) {
        throw ParamError("require 1 <= k < n <= 64, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
    }
    return Params{n, k};
}

Params Params::derived(int n, int k) {
    if (n < 1 || n > kMaxGround || k < 0 || k > n) {
        throw ParamError("require 0 <= k <= n <= 64, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
    }
    return Params{n, k};
}

Mask interval_mask(int lo, int hi) {
    if (lo > hi) return 0;
    const Mask upto_hi = hi >= 64 ? ~Mask{0} : ((Mask{1} << hi) - 1);
    const Mask below_lo = (Mask{1} << (lo - 1)) - 1;
    return upto_hi & ~below_lo;
}

std::vector<Element> elements_of(Mask m) {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m != 0) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

Mask mask_of(std::span<const Element> elements) {
    Mask m = 0;
    for (Element x : elements) {
        if (x < 1 || x > kMaxGround) throw ParamError("element out of range: " + std::to_string(x));
        m |= element_bit(x);
    }
    return m;
}

std::string to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (Element x : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + "}";
}

namespace {

void validate_mask(Params p, Mask m) {
    if ((m & ~p.universe()) != 0) {
        throw ParamError("set " + to_string(m) + " has elements outside [" + std::to_string(p.n) + "]");
    }
    if (std::popcount(m) != p.k) {
        throw ParamError("set " + to_string(m) + " does not have " + std::to_string(p.k) + " elements");
    }
}

void check_element(Params p, Element x) {
    if (x < 1 || x > p.n) {
        throw ParamError("element " + std::to_string(x) + " outside [" + std::to_string(p.n) + "]");
    }
}

}  // namespace

KSubset::KSubset(Params params, Mask bits) : bits_(bits), params_(params) {
    validate_mask(params, bits);
}

KSubset KSubset::from_elements(Params params, std::span<const Element> elements) {
    for (std::size_t i = 1; i < elements.size(); ++i) {
        if (elements[i] <= elements[i - 1]) throw ParamError("set elements must be strictly increasing");
    }
    for (Element x : elements) check_element(params, x);
    return KSubset(params, mask_of(elements));
}

bool intersects(const KSubset& a, const KSubset& b) {
    if (a.params() != b.params()) throw ParamError("intersects: mismatched parameters");
    return (a.bits() & b.bits()) != 0;
}

SetFamily::SetFamily(Params params, std::vector<Mask> masks) : params_(params), masks_(std::move(masks)) {
    for (Mask m : masks_) validate_mask(params_, m);
    std::sort(masks_.begin(), masks_.end());
    auto dup = std::adjacent_find(masks_.begin(), masks_.end());
    if (dup != masks_.end()) throw ParamError("duplicate set " + to_string(*dup));
}

SetFamily SetFamily::collect(Params params, std::vector<Mask> masks) {
    for (Mask m : masks) validate_mask(params, m);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return SetFamily(Trusted{}, params, std::move(masks));
}

bool SetFamily::contains(Mask m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m);
}

std::optional<std::size_t> SetFamily::index_of(Mask m) const {
    auto it = std::lower_bound(masks_.begin(), masks_.end(), m);
    if (it == masks_.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - masks_.begin());
}

SetFamily SetFamily::with(Mask m) const {
    validate_mask(params_, m);
    std::vector<Mask> out = masks_;
    auto it = std::lower_bound(out.begin(), out.end(), m);
    if (it == out.end() || *it != m) out.insert(it, m);
    return SetFamily(Trusted{}, params_, std::move(out));
}

SetFamily SetFamily::united(const SetFamily& other) const {
    if (other.params_ != params_) throw ParamError("united: mismatched parameters");
    std::vector<Mask> out;
    out.reserve(masks_.size() + other.masks_.size());
    std::set_union(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(),
                   std::back_inserter(out));
    return SetFamily(Trusted{}, params_, std::move(out));
}

bool is_intersecting(const SetFamily& f) {
    const auto m = f.masks();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if ((m[i] & m[j]) == 0) return false;
        }
    }
    return true;
}

std::vector<int> disjoint_partner_counts(const SetFamily& f) {
    const auto m = f.masks();
    std::vector<int> counts(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if ((m[i] & m[j]) == 0) {
                ++counts[i];
                ++counts[j];
            }
        }
    }
    return counts;
}

bool is_almost_intersecting(const SetFamily& f) {
    const auto counts = disjoint_partner_counts(f);
    bool has_pair = false;
    for (int c : counts) {
        if (c > 1) return false;
        if (c == 1) has_pair = true;
    }
    return has_pair;
}

int degree(const SetFamily& f, Element x) {
    check_element(f.params(), x);
    const Mask bit = element_bit(x);
    int d = 0;
    for (Mask m : f.masks()) d += (m & bit) ? 1 : 0;
    return d;
}

MaxDegree max_degree(const SetFamily& f) {
    MaxDegree best{1, 0};
    for (Element x = 1; x <= f.params().n; ++x) {
        const int d = degree(f, x);
        if (d > best.value) best = {x, d};
    }
    return best;
}

namespace {

// Removes bit x-1 without renumbering: links stay on the same ground set.
SetFamily filtered_link(const SetFamily& f, Mask need, Mask avoid, Mask strip) {
    const Params p = f.params();
    std::vector<Mask> out;
    for (Mask m : f.masks()) {
        if ((m & need) == need && (m & avoid) == 0) out.push_back(m & ~strip);
    }
    const int k = p.k - std::popcount(strip);
    return SetFamily::collect(Params::derived(p.n, k), std::move(out));
}

}  // namespace

SetFamily link(const SetFamily& f, Element x) {
    check_element(f.params(), x);
    const Mask bx = element_bit(x);
    if (f.params().k == 0) throw ParamError("link of a 0-uniform family");
    return filtered_link(f, bx, 0, bx);
}

SetFamily without(const SetFamily& f, Element x) {
    check_element(f.params(), x);
    return filtered_link(f, 0, element_bit(x), 0);
}

SetFamily link_avoiding(const SetFamily& f, Element x, Element y) {
    check_element(f.params(), x);
    check_element(f.params(), y);
    if (x == y) throw ParamError("link_avoiding requires x != y");
    if (f.params().k == 0) throw ParamError("link of a 0-uniform family");
    const Mask bx = element_bit(x);
    return filtered_link(f, bx, element_bit(y), bx);
}

Mask permute_mask(Mask m, const Permutation& perm) {
    Mask out = 0;
    while (m != 0) {
        const int i = std::countr_zero(m);
        out |= element_bit(perm[static_cast<std::size_t>(i)]);
        m &= m - 1;
    }
    return out;
}

SetFamily apply_permutation(const SetFamily& f, const Permutation& perm) {
    const Params p = f.params();
    if (perm.size() != static_cast<std::size_t>(p.n)) throw ParamError("permutation has wrong length");
    Mask seen = 0;
    for (Element y : perm) {
        check_element(p, y);
        seen |= element_bit(y);
    }
    if (seen != p.universe()) throw ParamError("not a permutation of [n]");
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask m : f.masks()) out.push_back(permute_mask(m, perm));
    return SetFamily(p, std::move(out));
}

std::uint64_t count_subsets(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (c > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(c);
}

namespace {

struct IsoProfile {
    int n = 0;
    std::vector<int> deg;
    std::vector<int> pair;  // n*n co-degrees

    explicit IsoProfile(const SetFamily& f) : n(f.params().n), deg(n, 0), pair(n * n, 0) {
        for (Mask m : f.masks()) {
            const auto el = elements_of(m);
            for (std::size_t i = 0; i < el.size(); ++i) {
                ++deg[el[i] - 1];
                for (std::size_t j = i + 1; j < el.size(); ++j) {
                    ++pair[(el[i] - 1) * n + (el[j] - 1)];
                    ++pair[(el[j] - 1) * n + (el[i] - 1)];
                }
            }
        }
    }
    int co(int a, int b) const { return pair[a * n + b]; }
};

template <class T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

class IsoSearch {
public:
    IsoSearch(const SetFamily& f, const SetFamily& g)
        : f_(f), pf_(f), pg_(g), n_(f.params().n), image_(n_, -1), used_(n_, false) {
        gset_.insert(g.masks().begin(), g.masks().end());
        build_order();
    }

    std::optional<Permutation> run() {
        if (!extend(0)) return std::nullopt;
        Permutation perm(n_);
        for (int x = 0; x < n_; ++x) perm[x] = image_[x] + 1;
        return perm;
    }

private:
    // Greedy order: start at the highest degree, then always take the element
    // most tied (by co-degree) to those already placed.
    void build_order() {
        std::vector<bool> placed(n_, false);
        std::vector<int> tie(n_, 0);
        for (int step = 0; step < n_; ++step) {
            int best = -1;
            for (int x = 0; x < n_; ++x) {
                if (placed[x]) continue;
                if (best < 0 || tie[x] > tie[best] || (tie[x] == tie[best] && pf_.deg[x] > pf_.deg[best])) {
                    best = x;
                }
            }
            placed[best] = true;
            order_.push_back(best);
            for (int x = 0; x < n_; ++x) {
                if (!placed[x] && pf_.co(x, best) > 0) ++tie[x];
            }
        }
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
        completes_at_.assign(n_, {});
        for (Mask m : f_.masks()) {
            int last = -1;
            for (Element e : elements_of(m)) last = std::max(last, pos[e - 1]);
            if (last >= 0) completes_at_[last].push_back(m);
        }
    }

    bool extend(int step) {
        if (step == n_) return true;
        const int x = order_[step];
        for (int y = 0; y < n_; ++y) {
            if (used_[y] || pg_.deg[y] != pf_.deg[x]) continue;
            bool ok = true;
            for (int s = 0; s < step && ok; ++s) {
                const int xp = order_[s];
                ok = pf_.co(x, xp) == pg_.co(y, image_[xp]);
            }
            if (!ok) continue;
            image_[x] = y;
            used_[y] = true;
            for (Mask m : completes_at_[step]) {
                if (!gset_.contains(map(m))) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(step + 1)) return true;
            image_[x] = -1;
            used_[y] = false;
        }
        return false;
    }

    Mask map(Mask m) const {
        Mask out = 0;
        while (m != 0) {
            out |= Mask{1} << image_[std::countr_zero(m)];
            m &= m - 1;
        }
        return out;
    }

    const SetFamily& f_;
    IsoProfile pf_;
    IsoProfile pg_;
    int n_;
    std::vector<int> image_;
    std::vector<bool> used_;
    std::vector<int> order_;
    std::vector<std::vector<Mask>> completes_at_;
    std::unordered_set<Mask> gset_;
};

}  // namespace

std::optional<Permutation> family_isomorphic(const SetFamily& f, const SetFamily& g) {
    if (f.params() != g.params()) throw ParamError("family_isomorphic: mismatched parameters");
    if (f.size() != g.size()) return std::nullopt;
    IsoProfile pf(f), pg(g);
    if (sorted(pf.deg) != sorted(pg.deg)) return std::nullopt;
    if (sorted(disjoint_partner_counts(f)) != sorted(disjoint_partner_counts(g))) return std::nullopt;
    return IsoSearch(f, g).run();
}

}  // namespace aif
