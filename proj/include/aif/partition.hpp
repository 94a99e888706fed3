#pragma once

// Canonical partition F = F0 + {P_1,Q_1} + ... + {P_l,Q_l} of an almost
// intersecting family, and the full tails built from it.

#include <cstdint>
#include <optional>
#include <vector>

#include "aif/bounds.hpp"
#include "aif/family.hpp"

namespace aif {

struct DisjointPair {
    Mask first;   // smaller in storage order
    Mask second;

    friend bool operator==(const DisjointPair&, const DisjointPair&) = default;
};

struct CanonicalPartition {
    SetFamily core;                   // members with no disjoint partner
    std::vector<DisjointPair> pairs;  // sorted by first member

    std::size_t ell() const { return pairs.size(); }
};

/// Accepts intersecting families too (l = 0). Throws NotAlmostIntersectingError
/// when some member has two or more disjoint partners.
CanonicalPartition canonical_partition(const SetFamily& f);

std::size_t ell(const SetFamily& f);

/// core plus both members of every pair.
SetFamily reassemble(const CanonicalPartition& p);

inline constexpr std::size_t kMaxTailPairs = 20;

/// Lazy enumeration of the 2^l full tails. Choice bit i picks the second
/// member of pair i.
class FullTails {
public:
    explicit FullTails(const CanonicalPartition& p);

    std::uint64_t count() const { return std::uint64_t{1} << pairs_.size(); }
    SetFamily tail(std::uint64_t choice) const;
    std::optional<SetFamily> next();

private:
    Params params_;
    std::vector<DisjointPair> pairs_;
#ifndef NDEBUG
    SetFamily core_;
#endif
    std::uint64_t cursor_ = 0;
};

inline FullTails full_tails(const CanonicalPartition& p) { return FullTails(p); }

/// From every pair, the member avoiding x (the first member when both do).
SetFamily tail_avoiding(const CanonicalPartition& p, Element x);

/// A_i = P_i, B_i = Q_i followed by A_{l+i} = Q_i, B_{l+i} = P_i.
SetPairSystem doubled_pair_system(const CanonicalPartition& p);

}  // namespace aif
