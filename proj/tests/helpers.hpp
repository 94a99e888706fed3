#pragma once

#include <initializer_list>
#include <vector>

#include "aif/family.hpp"

namespace testing {

inline aif::Mask set_of(std::initializer_list<int> elems) {
    std::vector<int> v(elems);
    return aif::mask_of(v);
}

inline aif::SetFamily fam(int n, int k, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<aif::Mask> masks;
    for (auto s : sets) masks.push_back(set_of(s));
    return aif::SetFamily(aif::Params::derived(n, k), masks);
}

/// All k-subsets of [m] viewed inside [n].
inline aif::SetFamily complete(int n, int m, int k) {
    std::vector<aif::Mask> masks;
    aif::for_each_subset(m, k, [&](aif::Mask x) { masks.push_back(x); });
    return aif::SetFamily(aif::Params::derived(n, k), masks);
}

}  // namespace testing
