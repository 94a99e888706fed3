#include "aif/partition.hpp"

#include <cassert>

#include "aif/error.hpp"

namespace aif {

CanonicalPartition canonical_partition(const SetFamily& f) {
    const auto m = f.masks();
    std::vector<int> partner(m.size(), -1);
    std::vector<int> count(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if ((m[i] & m[j]) != 0) continue;
            if (++count[i] > 1 || ++count[j] > 1) {
                const Mask bad = count[i] > 1 ? m[i] : m[j];
                throw NotAlmostIntersectingError("set " + to_string(bad) + " has two or more disjoint partners");
            }
            partner[i] = static_cast<int>(j);
            partner[j] = static_cast<int>(i);
        }
    }
    std::vector<Mask> core;
    std::vector<DisjointPair> pairs;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (partner[i] < 0) {
            core.push_back(m[i]);
        } else if (static_cast<std::size_t>(partner[i]) > i) {
            pairs.push_back({m[i], m[partner[i]]});
        }
    }
    // masks are ascending, so pairs come out sorted by first member
    return {SetFamily(f.params(), std::move(core)), std::move(pairs)};
}

std::size_t ell(const SetFamily& f) { return canonical_partition(f).ell(); }

SetFamily reassemble(const CanonicalPartition& p) {
    std::vector<Mask> all(p.core.masks().begin(), p.core.masks().end());
    for (const auto& pr : p.pairs) {
        all.push_back(pr.first);
        all.push_back(pr.second);
    }
    return SetFamily(p.core.params(), std::move(all));
}

FullTails::FullTails(const CanonicalPartition& p)
    : params_(p.core.params()),
      pairs_(p.pairs)
#ifndef NDEBUG
      ,
      core_(p.core)
#endif
{
    if (pairs_.size() > kMaxTailPairs) {
        throw ResourceError("refusing to enumerate 2^" + std::to_string(pairs_.size()) + " full tails");
    }
}

SetFamily FullTails::tail(std::uint64_t choice) const {
    std::vector<Mask> out;
    out.reserve(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        out.push_back((choice >> i) & 1 ? pairs_[i].second : pairs_[i].first);
    }
    return SetFamily(params_, std::move(out));
}

std::optional<SetFamily> FullTails::next() {
    if (cursor_ >= count()) return std::nullopt;
    SetFamily t = tail(cursor_++);
#ifndef NDEBUG
    assert(is_intersecting(core_.united(t)));
#endif
    return t;
}

SetFamily tail_avoiding(const CanonicalPartition& p, Element x) {
    const Params params = p.core.params();
    if (x < 1 || x > params.n) throw ParamError("tail_avoiding: element outside [n]");
    const Mask bx = element_bit(x);
    std::vector<Mask> out;
    for (const auto& pr : p.pairs) out.push_back((pr.first & bx) ? pr.second : pr.first);
    return SetFamily(params, std::move(out));
}

SetPairSystem doubled_pair_system(const CanonicalPartition& p) {
    SetPairSystem s;
    s.n = p.core.params().n;
    s.a = s.b = p.core.params().k;
    for (const auto& pr : p.pairs) s.pairs.push_back({pr.first, pr.second});
    for (const auto& pr : p.pairs) s.pairs.push_back({pr.second, pr.first});
    return s;
}

}  // namespace aif
