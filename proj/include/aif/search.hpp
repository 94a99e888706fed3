#pragma once

// Exact maximum almost-intersecting families by branch and bound.
//
// An almost-intersecting family is an induced subgraph of the Kneser graph
// K(n,k) (vertices: k-sets, edges: disjoint pairs) with maximum degree at most
// one and at least one edge. The engine searches for the largest such
// subgraph. In symmetry mode the first disjoint pair is fixed to
// ([1,k], [k+1,2k]); every almost-intersecting family has a relabelling that
// contains it.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aif/bounds.hpp"
#include "aif/family.hpp"
#include "aif/partition.hpp"

namespace aif {

enum class PruneRule {
    bound,                    // node cut by the upper bound
    dead_second_partner,      // candidate disjoint from two committed sets
    dead_partnered_neighbor,  // candidate disjoint from a committed set that already has its partner
    orbit,                    // excluded together with a symmetric twin
    two_outside,              // more than one element outside P1 u Q1
    misses_pair,              // misses P1 or Q1
    matching_agree,           // three nonempty matched D-cells must be one common singleton
    heavy_matching,           // a D-cell of size >= 3 empties the cells off its row and column
    heavy_cover,              // a D-cell {a,b} of size >= 3 forces every member to meet {a,b}
    double_inside,            // a D-cell {a,b} of size >= 2 bans 3-sets of (P1 u Q1) minus {a,b}
};

inline constexpr std::size_t kPruneRuleCount = 10;

std::string to_string(PruneRule r);

struct SearchBudget {
    std::uint64_t max_nodes = 1'000'000'000;
    double max_seconds = 3600.0;
};

struct SearchProblem {
    Params params;
    bool symmetry = true;  // fix the first disjoint pair and branch on orbits of untouched elements
    bool k3_rules = true;  // the k = 3 structural exclusions (symmetry mode only)
    SearchBudget budget;
    int jobs = 1;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::array<std::uint64_t, kPruneRuleCount> prunes{};

    std::uint64_t operator[](PruneRule r) const { return prunes[static_cast<std::size_t>(r)]; }
};

struct SearchOutcome {
    Params params;
    int optimum = 0;       // exact when exhausted, otherwise a lower bound
    bool exhausted = false;
    std::vector<SetFamily> witnesses;  // one per isomorphism class, canonical order
    std::uint64_t witness_count = 0;   // optimal leaves reached (before isomorphism reduction)
    bool classes_complete = true;      // false once more than kMaxWitnessClasses classes appear
    SearchStats stats;
    double seconds = 0.0;
};

inline constexpr std::size_t kMaxWitnessClasses = 100;
inline constexpr std::uint64_t kMaxSearchVertices = 10'000;

SearchOutcome max_almost_intersecting(const SearchProblem& problem);

/// Brute-force maximum by walking the subfamily lattice in mask order.
/// Only for C(n,k) <= 40; shares no code with the branch and bound.
int oracle_max(Params params);

/// D(a,b): elements c outside P u Q with {a,b,c} in f. k = 3 only;
/// a must lie in pair.first and b in pair.second.
std::vector<Element> d_set(const SetFamily& f, DisjointPair pair, Element a, Element b);

struct RuleExclusion {
    Mask set;
    PruneRule rule;
};

/// k = 3 exclusions implied by the committed family, which must contain the
/// disjoint pair. Each excluded candidate is tagged with the first rule (in
/// enum order) that removes it.
std::vector<RuleExclusion> prune_rules(const SetFamily& committed, DisjointPair pair,
                                       std::span<const Mask> candidates);

/// The structural facts about an almost-intersecting 3-uniform family with a
/// disjoint pair (P, Q) of its canonical partition, checked one by one.
struct K3Facts {
    bool two_outside = true;
    bool misses_pair = true;
    bool matching_agree = true;
    bool heavy_matching = true;
    bool heavy_cover = true;
    bool double_inside = true;

    bool all() const { return two_outside && misses_pair && matching_agree && heavy_matching && heavy_cover && double_inside; }
};

K3Facts check_k3_facts(const SetFamily& f, DisjointPair pair);

/// Every k-set G outside f for which f + {G} is almost intersecting.
std::vector<Mask> local_maximality_check(const SetFamily& f);

struct Diagnosis {
    std::size_t size = 0;
    bool almost_intersecting = false;
    std::size_t ell = 0;
    int delta_f0 = 0;
    std::optional<int> r;  // smallest r in [3,k+1] with Delta(F0) <= Delta(B_r)
    TheoremCase theorem_case = TheoremCase::outside;
    std::optional<BigCount> bound;  // |B+| when defined
    bool within_bound = false;
};

Diagnosis diagnose(const SetFamily& f);

}  // namespace aif
